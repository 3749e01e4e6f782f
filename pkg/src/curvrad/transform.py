"""Closed-form totally-geodesic k-plane transform of radial step profiles,
with two independent oracles.

The closed form evaluates, for a plane at distance d from the origin,

    weight * R_k f = K * int_d^T  f(t) * [1 - (G(t)/G(d))^2]^(k/2-1) * sc^(k-1)(t) dt

with G = sc'/sc, weight = sc'(d), K = transform_constant(c, k), and T the
support bound (pi/2 on the sphere, where the half-range convention carries a
factor 2 in K and the profile enters through its even part; the kernel is
symmetric about t = pi/2, so this is an identity, not an approximation).

Singularity decision table for the bracket factor at t = d:
    k = 1   exponent -1/2: integrable singularity, declared to the quadrature
    k = 2   exponent 0: factor absent
    k >= 3  exponent > 0: factor vanishes at d, no singularity

The polar oracle integrates the same profile over the submanifold directly in
the foot-point polar coordinate r, composing with the unified Pythagoras
hypotenuse, i.e. without the closed form's change of variables.  The embedded
oracle (k = 1 only) parametrizes the geodesic in the ambient space and uses
nothing but the embedded distance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .curvature import curv_cos, curv_sin
from .geometry import (GeometryDomainError, Space, embedded_distance,
                       geodesic_from, origin, _seeded_frame)
from .profiles import PlaneOffset, RadialProfile
from .quadrature import IntegrationResult, QuadratureConfig, integrate

__all__ = [
    "TransformValue",
    "surface_area_sphere",
    "transform_constant",
    "kplane_transform",
    "kplane_transform_oracle",
    "xray_embedded_oracle",
    "euclidean_ball_slice",
]


@dataclass(frozen=True)
class TransformValue:
    raw: float        # R_k f(xi)
    weighted: float   # sc'(d(o, xi)) * R_k f(xi)


def surface_area_sphere(k: int) -> float:
    """|S^(k-1)| = 2 pi^(k/2) / Gamma(k/2)."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return 2.0 * math.pi ** (k / 2) / math.gamma(k / 2)


def transform_constant(c: int, k: int) -> float:
    """Dimension constant of the closed form: |S^(k-1)|, doubled on the sphere."""
    base = surface_area_sphere(k)
    return 2.0 * base if int(c) == 1 else base


def _bracket(c: int, d: float, t: float) -> float:
    """1 - (G(t)/G(d))^2 with G = sc'/sc; 1 at d = 0 by continuity (G -> inf).

    Evaluated in the cancellation-free product form
    sc(t-d) * sc(t+d) / (sc'(d) * sc(t))^2, which follows from the addition
    formulas and stays accurate for t near d (where the k = 1 integrand is
    singular).
    """
    if d == 0.0:
        return 1.0
    num = curv_sin(c, t - d) * curv_sin(c, t + d)
    den = curv_cos(c, d) * curv_sin(c, t)
    return max(0.0, num / (den * den))


def _segments(lo: float, hi: float, cuts: list[float]) -> list[tuple[float, float]]:
    pts = [lo] + sorted(p for p in cuts if lo < p < hi) + [hi]
    return [(a, b) for a, b in zip(pts, pts[1:]) if b - a > 1e-15]


def kplane_transform(space: Space, plane: PlaneOffset, f: RadialProfile,
                     cfg: QuadratureConfig = QuadratureConfig()) -> TransformValue:
    """Closed-form transform value of a radial step profile."""
    plane.validate_for(space)
    f.validate_for(space.curvature)
    c, k, d = space.c, plane.k, plane.d

    if c == 1:
        upper = math.pi / 2
        cuts = sorted({b for rho in f.breakpoints
                       for b in (rho, math.pi - rho) if 0.0 < b < upper})
        fval = f.even_value_at
    else:
        upper = f.support_radius
        cuts = [b for b in f.breakpoints if 0.0 < b < upper]
        fval = f.value_at

    weight = curv_cos(c, d)
    if d >= upper:
        return TransformValue(0.0, 0.0)

    exponent = k / 2 - 1

    def integrand(t: float) -> float:
        v = fval(t)
        if v == 0.0:
            return 0.0
        w = curv_sin(c, t) ** (k - 1)
        if k != 2 and d > 0.0:
            br = _bracket(c, d, t)
            if br <= 0.0:
                # t rounded onto the segment endpoint t = d, where the
                # (integrable) singular factor has measure zero
                return 0.0
            w *= br ** exponent
        return v * w

    total = 0.0
    first = True
    for a, b in _segments(d, upper, cuts):
        seg_cfg = cfg
        if first and k == 1 and d > 0.0:
            seg_cfg = cfg.with_singularity(-0.5)
        total += integrate(integrand, a, b, seg_cfg).value
        first = False

    weighted = transform_constant(c, k) * total
    return TransformValue(raw=weighted / weight, weighted=weighted)


def _polar_radius_of(c: int, d: float, rho: float) -> float | None:
    """Solve hypotenuse(c, d, r) = rho for the leg r, or None if unreachable."""
    sd2 = curv_sin(c, d / 2) ** 2
    sr2 = curv_sin(c, rho / 2) ** 2
    denom = 1.0 - 2.0 * c * sd2
    val = (sr2 - sd2) / denom
    if val < 0:
        return None
    if c == 0:
        return 2.0 * math.sqrt(val)
    if c == -1:
        return 2.0 * math.asinh(math.sqrt(val))
    if val > 1.0:
        return None
    return 2.0 * math.asin(math.sqrt(val))


def kplane_transform_oracle(space: Space, plane: PlaneOffset, f: RadialProfile,
                            cfg: QuadratureConfig = QuadratureConfig()) -> TransformValue:
    """Polar-coordinate oracle: integrate the profile over the submanifold in
    the foot-point radius r, with distances from the hypotenuse formula."""
    plane.validate_for(space)
    f.validate_for(space.curvature)
    c, k, d = space.c, plane.k, plane.d

    if c == 1:
        r_max = math.pi
    else:
        if d >= f.support_radius:
            return TransformValue(0.0, 0.0)
        r_max = _polar_radius_of(c, d, f.support_radius)
        assert r_max is not None

    cuts = []
    for rho in f.breakpoints[1:]:
        r = _polar_radius_of(c, d, rho)
        if r is not None:
            cuts.append(r)

    sd2 = curv_sin(c, d / 2) ** 2
    denom = 1.0 - 2.0 * c * sd2

    def distance_at(r: float) -> float:
        # hypotenuse(c, d, r), inlined for speed
        sh2 = sd2 + curv_sin(c, r / 2) ** 2 * denom
        if c == 0:
            return 2.0 * math.sqrt(sh2)
        if c == -1:
            return 2.0 * math.asinh(math.sqrt(sh2))
        return 2.0 * math.asin(math.sqrt(min(1.0, sh2)))

    def integrand(r: float) -> float:
        v = f.value_at(distance_at(r))
        if v == 0.0:
            return 0.0
        return v * curv_sin(c, r) ** (k - 1)

    total = sum(integrate(integrand, a, b, cfg).value
                for a, b in _segments(0.0, r_max, cuts))
    raw = surface_area_sphere(k) * total
    return TransformValue(raw=raw, weighted=curv_cos(c, d) * raw)


def _bisect_distance(dist, target: float, lo: float, hi: float) -> float:
    """Arclength s in [lo, hi] with dist(s) = target; dist monotone increasing."""
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if dist(mid) < target:
            lo = mid
        else:
            hi = mid
        if hi - lo < 1e-14 * (1.0 + hi):
            break
    return 0.5 * (lo + hi)


def xray_embedded_oracle(space: Space, d: float, f: RadialProfile,
                         direction_seed: int = 0,
                         cfg: QuadratureConfig = QuadratureConfig()) -> float:
    """Fully independent X-ray (k = 1) value: arclength integral of the profile
    along an explicitly embedded geodesic, using only the embedded distance."""
    plane = PlaneOffset(k=1, d=d)
    plane.validate_for(space)
    f.validate_for(space.curvature)
    c = space.c
    o = origin(space)
    u, w = _seeded_frame(space.n, direction_seed)
    u_amb = np.concatenate([u, [0.0]])
    w_amb = np.concatenate([w, [0.0]])
    foot = geodesic_from(space, o, u_amb, d)

    def dist(s: float) -> float:
        return embedded_distance(space, o, geodesic_from(space, foot, w_amb, s))

    if c == 1:
        s_end = math.pi  # half the great circle; distance is even about s = pi
    else:
        if d >= f.support_radius:
            return 0.0
        hi = 1.0
        while dist(hi) < f.support_radius:
            hi *= 2.0
        s_end = _bisect_distance(dist, f.support_radius, 0.0, hi)

    cuts = []
    d0, d_end = dist(0.0), dist(s_end)
    for rho in f.breakpoints[1:]:
        if d0 < rho < d_end:
            cuts.append(_bisect_distance(dist, rho, 0.0, s_end))

    total = sum(integrate(lambda s: f.value_at(dist(s)), a, b, cfg).value
                for a, b in _segments(0.0, s_end, cuts))
    return 2.0 * total  # the geodesic is symmetric about the foot point


def euclidean_ball_slice(n: int, k: int, d: float, R: float) -> float:
    """Exact k-volume of the section of the Euclidean ball B(0, R) by a
    k-plane at distance d: omega_k * (R^2 - d^2)_+^(k/2)."""
    if n < 2 or not 1 <= k <= n - 1:
        raise GeometryDomainError(f"need n >= 2 and 1 <= k <= n-1, got n={n}, k={k}")
    if d < 0 or R < 0:
        raise GeometryDomainError("d and R must be nonnegative")
    omega_k = math.pi ** (k / 2) / math.gamma(k / 2 + 1)
    gap = R * R - d * d
    return omega_k * gap ** (k / 2) if gap > 0 else 0.0
