"""Radial step profiles and k-plane offsets."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .curvature import Curvature
from .geometry import GeometryDomainError, Space

__all__ = ["RadialProfile", "PlaneOffset"]


@dataclass(frozen=True)
class RadialProfile:
    """Compactly supported radial step function, by geodesic radius.

    ``breakpoints`` is the strictly increasing list [0, rho_1, ..., rho_m];
    ``values`` holds the constant value on each annulus (rho_{i-1}, rho_i].
    The function is 0 beyond rho_m.
    """

    breakpoints: tuple[float, ...]
    values: tuple[float, ...]

    def __post_init__(self):
        bps = tuple(float(b) for b in self.breakpoints)
        vals = tuple(float(v) for v in self.values)
        object.__setattr__(self, "breakpoints", bps)
        object.__setattr__(self, "values", vals)
        if len(bps) < 2 or bps[0] != 0.0:
            raise ValueError("breakpoints must start at 0 and contain at least one radius")
        if any(b2 <= b1 for b1, b2 in zip(bps, bps[1:])):
            raise ValueError("breakpoints must be strictly increasing")
        if len(vals) != len(bps) - 1:
            raise ValueError("need exactly one value per annulus")
        if not all(math.isfinite(b) for b in bps):
            raise ValueError("breakpoints must be finite (compact support)")

    @classmethod
    def ball_indicator(cls, radius: float, value: float = 1.0) -> "RadialProfile":
        return cls((0.0, radius), (value,))

    @property
    def support_radius(self) -> float:
        return self.breakpoints[-1]

    def validate_for(self, curvature: Curvature | int) -> None:
        if int(curvature) == 1 and self.support_radius > math.pi + 1e-12:
            raise GeometryDomainError(
                "spherical profiles are specified on [0, pi] via d(o, x)")

    def value_at(self, rho: float) -> float:
        """Profile value at geodesic radius rho (0 outside the support)."""
        if rho < 0 or rho > self.support_radius:
            return 0.0
        bps = self.breakpoints
        for i in range(1, len(bps)):
            if rho <= bps[i]:
                return self.values[i - 1]
        return 0.0

    def even_value_at(self, rho: float) -> float:
        """Even symmetrization through the equator of the sphere.

        Mean of the values at radius rho and pi - rho; this is the effective
        profile seen by the spherical k-plane transform, whose kernel is
        symmetric about t = pi/2.
        """
        return 0.5 * (self.value_at(rho) + self.value_at(math.pi - rho))

    def scaled(self, factor: float) -> "RadialProfile":
        return RadialProfile(self.breakpoints, tuple(factor * v for v in self.values))


@dataclass(frozen=True)
class PlaneOffset:
    """A class of k-dimensional totally-geodesic submanifolds, identified by
    the submanifold dimension k and the distance d = d(o, xi) from the origin.

    By homogeneity the transform of a radial function depends on xi only
    through (k, d).
    """

    k: int
    d: float = 0.0

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")
        if self.d < 0:
            raise ValueError(f"offset distance must be >= 0, got {self.d}")

    def validate_for(self, space: Space) -> None:
        if not 1 <= self.k <= space.n - 1:
            raise GeometryDomainError(
                f"need 1 <= k <= n-1, got k={self.k} with n={space.n}")
        if space.c == 1 and self.d >= math.pi / 2:
            raise GeometryDomainError(
                "spherical plane offset must satisfy d < pi/2")
