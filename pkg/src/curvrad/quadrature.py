"""One-dimensional adaptive quadrature with declared endpoint singularities.

Single integration backend for the whole package.  The adaptive core is
QUADPACK (scipy.integrate.quad); this module adds the config/result contract,
a power-regularizing change of variable for declared left-endpoint
singularities, NaN/inf sample detection and a fixed high-order Gauss-Legendre
reference rule used by cross-check tests.

Callers always pass finite intervals: compactly supported profiles make every
integral in this package a finite-interval one.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, replace
from typing import Callable

import numpy as np
from scipy import integrate as _sci

__all__ = [
    "QuadratureConfig",
    "IntegrationResult",
    "QuadratureError",
    "NonConvergenceError",
    "BadSampleError",
    "integrate",
    "integrate_fixed",
]


class QuadratureError(Exception):
    """Base class for integration failures."""


class NonConvergenceError(QuadratureError):
    """Requested tolerance not met within the subdivision budget."""


class BadSampleError(QuadratureError):
    """Integrand returned NaN or inf; carries the offending abscissa."""

    def __init__(self, abscissa: float):
        self.abscissa = abscissa
        super().__init__(f"integrand returned a non-finite value at t={abscissa!r}")


@dataclass(frozen=True)
class QuadratureConfig:
    rel_tol: float = 1e-10
    abs_tol: float = 1e-12
    max_subdivisions: int = 2**15
    #: declares an integrable (t - a)**lam singularity at the left endpoint, lam > -1
    singular_exponent_left: float | None = None

    def __post_init__(self):
        if self.rel_tol <= 0 or self.abs_tol <= 0:
            raise ValueError("tolerances must be positive")
        if self.max_subdivisions < 1:
            raise ValueError("max_subdivisions must be >= 1")
        lam = self.singular_exponent_left
        if lam is not None and lam <= -1:
            raise ValueError(f"singular exponent must be > -1, got {lam}")

    def with_singularity(self, lam: float | None) -> "QuadratureConfig":
        return replace(self, singular_exponent_left=lam)


@dataclass(frozen=True)
class IntegrationResult:
    value: float
    error_estimate: float
    evaluations: int

    def __post_init__(self):
        if self.error_estimate < 0:
            raise ValueError("error_estimate must be >= 0")


def _guarded(f: Callable[[float], float], counter: list[int]) -> Callable[[float], float]:
    def g(t: float) -> float:
        counter[0] += 1
        y = f(t)
        if not np.isfinite(y):
            raise BadSampleError(t)
        return y

    return g


def integrate(f: Callable[[float], float], a: float, b: float,
              cfg: QuadratureConfig = QuadratureConfig()) -> IntegrationResult:
    """Adaptively integrate f on [a, b] to the configured tolerance.

    When cfg.singular_exponent_left = lam is set, the substitution
    t = a + w**(1/(1+lam)) is applied first, which turns an integrable
    (t-a)**lam endpoint singularity into a bounded integrand.
    """
    if not (np.isfinite(a) and np.isfinite(b)):
        raise ValueError("integration limits must be finite")
    if a >= b:
        if a == b:
            return IntegrationResult(0.0, 0.0, 0)
        raise ValueError(f"need a < b, got a={a}, b={b}")

    counter = [0]
    lam = cfg.singular_exponent_left
    if lam is not None and lam != 0.0:
        # int_a^b f dt = int_0^W f(a + w^q) * q * w^(q-1) dw,  q = 1/(1+lam)
        q = 1.0 / (1.0 + lam)
        width = b - a
        upper = width ** (1.0 + lam)
        base = _guarded(f, counter)

        def transformed(w: float) -> float:
            return base(a + w**q) * q * w ** (q - 1.0)

        target, lo, hi = transformed, 0.0, upper
    else:
        target, lo, hi = _guarded(f, counter), a, b

    with warnings.catch_warnings():
        warnings.simplefilter("ignore", _sci.IntegrationWarning)
        value, abserr = _sci.quad(target, lo, hi, epsabs=cfg.abs_tol,
                                  epsrel=cfg.rel_tol, limit=cfg.max_subdivisions)

    # QUADPACK error estimates are conservative; accept with a small margin.
    budget = max(cfg.abs_tol, cfg.rel_tol * abs(value))
    if abserr > 100.0 * budget and abserr > 1e-9 * (1.0 + abs(value)):
        raise NonConvergenceError(
            f"error estimate {abserr:.3e} exceeds tolerance {budget:.3e} on [{a}, {b}]")
    return IntegrationResult(value, abserr, counter[0])


def integrate_fixed(f: Callable[[float], float], a: float, b: float,
                    order: int = 96) -> float:
    """Non-adaptive Gauss-Legendre reference value (no singularity handling)."""
    nodes, weights = np.polynomial.legendre.leggauss(order)
    mid, half = 0.5 * (a + b), 0.5 * (b - a)
    return half * float(sum(w * f(mid + half * x) for x, w in zip(nodes, weights)))
