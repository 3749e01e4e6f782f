"""Measures of radial sets and Lorentz L^{p,1} norms of radial step profiles.

Normalization: the norm of an indicator is measure(E)^(1/p) (no factor of p);
the layer-cake sum extends this to step profiles and is exact, no quadrature
beyond the radial measure itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .curvature import domain_extent
from .geometry import GeometryDomainError, Space, polar_weight
from .profiles import RadialProfile
from .quadrature import QuadratureConfig, integrate
from .transform import surface_area_sphere

__all__ = [
    "RadialSet",
    "UnsupportedEndpointError",
    "radial_set_measure",
    "lorentz_norm_char",
    "lorentz_norm_simple",
    "endpoint_exponent",
]


class UnsupportedEndpointError(ValueError):
    """No endpoint estimate exists for this (curvature, k) combination."""


@dataclass(frozen=True)
class RadialSet:
    """Finite disjoint union of geodesic-radius intervals within [0, extent/2)."""

    intervals: tuple[tuple[float, float], ...]

    def __post_init__(self):
        ivs = tuple((float(a), float(b)) for a, b in self.intervals)
        object.__setattr__(self, "intervals", tuple(sorted(ivs)))
        prev_end = 0.0
        for i, (a, b) in enumerate(self.intervals):
            if a < 0 or b <= a:
                raise ValueError(f"bad interval ({a}, {b})")
            if i > 0 and a < prev_end:
                raise ValueError("intervals must be disjoint")
            prev_end = b

    def validate_for(self, space: Space) -> None:
        half = domain_extent(space.c) / 2
        if self.intervals and self.intervals[-1][1] > half + 1e-12:
            raise GeometryDomainError(
                f"radial set must lie within [0, {half}) for this space")


def radial_set_measure(space: Space, E: RadialSet,
                       cfg: QuadratureConfig = QuadratureConfig()) -> float:
    """Volume of the radial set: |S^(n-1)| * int_E sc^(n-1)(r) dr."""
    E.validate_for(space)
    total = sum(integrate(lambda r: polar_weight(space, r), a, b, cfg).value
                for a, b in E.intervals)
    return surface_area_sphere(space.n) * total


def lorentz_norm_char(space: Space, E: RadialSet, p: float,
                      cfg: QuadratureConfig = QuadratureConfig()) -> float:
    """L^{p,1} norm of the indicator of a radial set: measure(E)^(1/p)."""
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    return radial_set_measure(space, E, cfg) ** (1.0 / p)


def _superlevel_set(f: RadialProfile, level: float) -> RadialSet | None:
    intervals = []
    for i, v in enumerate(f.values):
        if abs(v) > level:
            a, b = f.breakpoints[i], f.breakpoints[i + 1]
            if intervals and intervals[-1][1] == a:
                intervals[-1] = (intervals[-1][0], b)
            else:
                intervals.append((a, b))
    if not intervals:
        return None
    return RadialSet(tuple((a, b) for a, b in intervals))


def lorentz_norm_simple(space: Space, f: RadialProfile, p: float,
                        cfg: QuadratureConfig = QuadratureConfig()) -> float:
    """L^{p,1} norm of a radial step profile by the layer-cake formula:
    int_0^inf measure(|f| > lam)^(1/p) dlam, a finite sum for step profiles."""
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    levels = sorted({abs(v) for v in f.values if v != 0.0})
    total = 0.0
    prev = 0.0
    for lam in levels:
        E = _superlevel_set(f, prev)
        if E is not None:
            total += (lam - prev) * radial_set_measure(space, E, cfg) ** (1.0 / p)
        prev = lam
    return total


def endpoint_exponent(space: Space, k: int) -> float:
    """Critical Lorentz exponent of the weighted L^{p,1} -> L^inf estimate:
    n/k for the flat and spherical spaces, (n-1)/(k-1) for the hyperbolic one.

    The hyperbolic X-ray case (k = 1) has no endpoint (constants have no
    transform; there is no nontrivial L^{inf,1}); it is rejected outright.
    """
    if not 1 <= k <= space.n - 1:
        raise GeometryDomainError(f"need 1 <= k <= n-1, got k={k} with n={space.n}")
    if space.c == -1:
        if k == 1:
            raise UnsupportedEndpointError(
                "no endpoint estimate for the hyperbolic X-ray transform (k=1)")
        return (space.n - 1) / (k - 1)
    return space.n / k
