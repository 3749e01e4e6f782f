"""Curvature kernel: the generalized sine function and its identity suite.

The three simply connected model spaces of constant curvature c in {-1, 0, +1}
share a single "curvature function" sc, the solution of u'' + c*u = 0 with
u(0) = 0, u'(0) = 1.  Everything geometric downstream (Pythagoras, polar
measure weights, disc areas) is expressed through sc and its derivative.
"""

from __future__ import annotations

import math
from enum import IntEnum

__all__ = [
    "Curvature",
    "curv_sin",
    "curv_cos",
    "identity_residuals",
    "domain_extent",
    "heaviside",
]


class Curvature(IntEnum):
    """Curvature label of a model space: hyperbolic, flat or spherical."""

    HYPERBOLIC = -1
    FLAT = 0
    SPHERICAL = +1

    @classmethod
    def from_int(cls, c: int) -> "Curvature":
        try:
            return cls(c)
        except ValueError:
            raise ValueError(f"curvature must be -1, 0 or +1, got {c!r}") from None


def curv_sin(c: Curvature | int, t: float) -> float:
    """Generalized sine: t (flat), sinh t (hyperbolic), sin t (spherical).

    Odd in t.  Solution of u'' + c*u = 0, u(0)=0, u'(0)=1.
    """
    c = int(c)
    if c == 0:
        return t
    if c == -1:
        return math.sinh(t)
    if c == 1:
        return math.sin(t)
    raise ValueError(f"curvature must be -1, 0 or +1, got {c!r}")


def curv_cos(c: Curvature | int, t: float) -> float:
    """Derivative of curv_sin: 1 (flat), cosh t (hyperbolic), cos t (spherical).

    Even in t.
    """
    c = int(c)
    if c == 0:
        return 1.0
    if c == -1:
        return math.cosh(t)
    if c == 1:
        return math.cos(t)
    raise ValueError(f"curvature must be -1, 0 or +1, got {c!r}")


def identity_residuals(c: Curvature | int, t: float, r: float) -> list[float]:
    """Residuals of the six structural identities of the curvature function.

    All six vanish identically in exact arithmetic:

      1. (sc')^2 + c*sc^2 - 1                      (first-integral / Pythagorean)
      2. sc(t+r) - [sc(t)sc'(r) + sc(r)sc'(t)]     (addition formula)
      3. sc'(t+r) - [sc'(t)sc'(r) - c*sc(t)sc(r)]  (derivative addition formula)
      4. sc(2t) - 2 sc(t) sc'(t)                   (double angle)
      5. sc'(2t) - [1 - 2c*sc^2(t)]                (double angle, derivative)
      6. sc(t) + sc(r) - 2 sc((t+r)/2) sc'((t-r)/2)  (sum-to-product)

    The last one is the corrected sum-to-product form: the second factor is
    the derivative sc' at (t-r)/2, which is what the addition formulas imply
    (with sc((t-r)/2) instead, the flat branch already fails: t + r != (t^2-r^2)/2).
    """
    s, ds = curv_sin, curv_cos
    c = int(c)
    return [
        ds(c, t) ** 2 + c * s(c, t) ** 2 - 1.0,
        s(c, t + r) - (s(c, t) * ds(c, r) + s(c, r) * ds(c, t)),
        ds(c, t + r) - (ds(c, t) * ds(c, r) - c * s(c, t) * s(c, r)),
        s(c, 2 * t) - 2 * s(c, t) * ds(c, t),
        ds(c, 2 * t) - (1.0 - 2 * c * s(c, t) ** 2),
        s(c, t) + s(c, r) - 2 * s(c, (t + r) / 2) * ds(c, (t - r) / 2),
    ]


def identity_scale(c: Curvature | int, t: float, r: float) -> float:
    """Magnitude of the largest term entering the identities at (t, r).

    Residuals are meaningful relative to this scale: for c = -1 the terms grow
    like cosh, so a fixed absolute tolerance is too strict at large |t|+|r|.
    """
    c = int(c)
    candidates = [
        1.0,
        abs(curv_sin(c, t + r)),
        abs(curv_cos(c, t + r)),
        abs(curv_sin(c, 2 * t)),
        abs(curv_cos(c, 2 * t)),
        curv_cos(c, t) ** 2 if c == -1 else 1.0,
    ]
    return max(candidates)


def domain_extent(c: Curvature | int) -> float:
    """Diameter-like extent of the model space, in geodesic length.

    +inf for the flat and hyperbolic spaces.  2*pi for the sphere, so that
    half the extent (pi) is the range of the polar radius and a quarter
    (pi/2) bounds the radial domain of even functions.
    """
    return 2 * math.pi if int(c) == 1 else math.inf


def heaviside(s: float) -> int:
    """Heaviside step with H(0) = 1."""
    return 1 if s >= 0 else 0
