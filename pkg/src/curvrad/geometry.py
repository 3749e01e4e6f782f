"""Unified geometry of the three model spaces.

All three spaces live inside R^(n+1): the unit sphere, the upper hyperboloid
sheet (Minkowski signature (+,...,+,-), x.y = sum x_i y_i - x_{n+1} y_{n+1})
and the affine hyperplane x_{n+1} = 1 for the flat case.  The common origin
is o = e_{n+1}.  The embedded model provides an independent distance oracle
against which the closed-form (unified Pythagoras) route is validated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .curvature import Curvature, curv_cos, curv_sin

__all__ = [
    "Space",
    "GeometryDomainError",
    "OffManifoldError",
    "origin",
    "hypotenuse",
    "disc_area",
    "polar_weight",
    "embedded_distance",
    "right_triangle_vertex",
]

_ON_MANIFOLD_TOL = 1e-9


class GeometryDomainError(ValueError):
    """Input outside the valid geometric domain."""


class OffManifoldError(GeometryDomainError):
    """Embedded point violates the manifold constraint beyond tolerance."""


@dataclass(frozen=True)
class Space:
    """A model space: curvature label plus ambient dimension n >= 2."""

    curvature: Curvature
    n: int

    def __post_init__(self):
        object.__setattr__(self, "curvature", Curvature.from_int(self.curvature))
        if self.n < 2:
            raise ValueError(f"dimension must be >= 2, got {self.n}")

    @property
    def c(self) -> int:
        return int(self.curvature)


def origin(space: Space) -> np.ndarray:
    """The common base point o = e_{n+1} of all three embedded models."""
    o = np.zeros(space.n + 1)
    o[-1] = 1.0
    return o


def _check_on_manifold(space: Space, x: np.ndarray) -> None:
    x = np.asarray(x, dtype=float)
    if x.shape != (space.n + 1,):
        raise OffManifoldError(f"expected an {space.n + 1}-vector, got shape {x.shape}")
    c = space.c
    if c == 1:
        err = abs(float(x @ x) - 1.0)
    elif c == -1:
        q = float(x[:-1] @ x[:-1] - x[-1] ** 2)
        err = abs(q + 1.0)
        if x[-1] < 1.0 - _ON_MANIFOLD_TOL:
            raise OffManifoldError("hyperboloid point must lie on the upper sheet")
    else:
        err = abs(float(x[-1]) - 1.0)
    if err > _ON_MANIFOLD_TOL:
        raise OffManifoldError(f"point is off-manifold by {err:.3e}")


def hypotenuse(c: Curvature | int, a: float, b: float) -> float:
    """Hypotenuse of a geodesic right triangle with legs a, b.

    Unified Pythagoras:  sc^2(h/2) = sc^2(a/2) + sc^2(b/2) - 2c sc^2(a/2) sc^2(b/2),
    inverted on the principal range ([0, pi] for the sphere).
    """
    c = int(c)
    if a < 0 or b < 0:
        raise GeometryDomainError("leg lengths must be nonnegative")
    if c == 1 and (a > math.pi or b > math.pi):
        raise GeometryDomainError("spherical legs must not exceed pi")
    sa2 = curv_sin(c, a / 2) ** 2
    sb2 = curv_sin(c, b / 2) ** 2
    sh2 = sa2 + sb2 - 2 * c * sa2 * sb2
    if c == 0:
        return 2.0 * math.sqrt(sh2)
    if c == -1:
        return 2.0 * math.asinh(math.sqrt(sh2))
    if sh2 > 1.0 + 1e-12:
        raise GeometryDomainError(f"sc^2(h/2) = {sh2} > 1 on the sphere (caller bug)")
    return 2.0 * math.asin(math.sqrt(min(sh2, 1.0)))


def disc_area(c: Curvature | int, r: float) -> float:
    """Area of a geodesic disc of radius r: 4*pi*sc^2(r/2)."""
    c = int(c)
    if r < 0:
        raise GeometryDomainError("radius must be nonnegative")
    if c == 1 and r > 2 * math.pi:
        raise GeometryDomainError("spherical disc radius must not exceed 2*pi")
    return 4 * math.pi * curv_sin(c, r / 2) ** 2


def polar_weight(space: Space, r: float) -> float:
    """Radial density sc^(n-1)(r) of the polar decomposition about any point."""
    if r < 0:
        raise GeometryDomainError("radius must be nonnegative")
    return curv_sin(space.c, r) ** (space.n - 1)


def embedded_distance(space: Space, x: np.ndarray, y: np.ndarray) -> float:
    """Geodesic distance via the ambient inner product of the embedded model.

    Independent of the Pythagoras route: arccos of the Euclidean inner product
    (sphere), arccosh of minus the Minkowski product (hyperboloid), Euclidean
    norm of the first n coordinates (flat slice).
    """
    _check_on_manifold(space, x)
    _check_on_manifold(space, y)
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    c = space.c
    if c == 0:
        return float(np.linalg.norm(x[:-1] - y[:-1]))
    if c == 1:
        # clamp: roundoff can push |<x,y>| marginally past 1 near coincident
        # or antipodal points
        return math.acos(min(1.0, max(-1.0, float(x @ y))))
    q = float(x[:-1] @ y[:-1] - x[-1] * y[-1])
    return math.acosh(max(1.0, -q))


def _seeded_frame(n: int, seed: int) -> tuple[np.ndarray, np.ndarray]:
    """Two orthonormal vectors in R^n (zero last coordinate implied)."""
    rng = np.random.default_rng(seed)
    u = rng.standard_normal(n)
    u /= np.linalg.norm(u)
    w = rng.standard_normal(n)
    w -= (w @ u) * u
    nw = np.linalg.norm(w)
    if nw < 1e-12:  # pathological draw; retry deterministically
        return _seeded_frame(n, seed + 1)
    return u, w / nw


def geodesic_from(space: Space, base: np.ndarray, tangent: np.ndarray,
                  s: float) -> np.ndarray:
    """Point at arclength s along the geodesic from an embedded base point.

    ``tangent`` must be a unit tangent at ``base`` in the ambient sense.
    """
    c = space.c
    if c == 0:
        return base + s * tangent
    return curv_cos(c, s) * base + curv_sin(c, s) * tangent


def right_triangle_vertex(space: Space, d: float, r: float,
                          direction_seed: int = 0) -> np.ndarray:
    """An embedded point x whose foot x0 lies at distance d from o, with
    d(x0, x) = r along a direction orthogonal to the o-x0 geodesic.

    By unified Pythagoras, d(o, x) = hypotenuse(c, d, r) whatever the seed.
    """
    c = space.c
    if d < 0 or r < 0:
        raise GeometryDomainError("d and r must be nonnegative")
    if c == 1 and (d > math.pi or r > math.pi):
        raise GeometryDomainError("spherical distances must not exceed pi")
    u, w = _seeded_frame(space.n, direction_seed)
    u_amb = np.concatenate([u, [0.0]])
    w_amb = np.concatenate([w, [0.0]])
    x0 = geodesic_from(space, origin(space), u_amb, d)
    if c == 0:
        return x0 + r * w_amb
    # w_amb is orthogonal to o and u_amb in both metrics, hence a unit
    # tangent at x0 orthogonal to the o-x0 geodesic
    return geodesic_from(space, x0, w_amb, r)
