import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from curvrad.curvature import (Curvature, curv_cos, curv_sin, domain_extent,
                               heaviside, identity_residuals, identity_scale)

ALL_C = [-1, 0, 1]


def test_branch_values():
    assert curv_sin(0, 2.0) == 2.0
    assert curv_sin(1, math.pi / 2) == pytest.approx(1.0, abs=1e-15)
    assert curv_sin(-1, 0.0) == 0.0
    assert curv_cos(0, 7.3) == 1.0
    assert curv_cos(1, 0.0) == 1.0
    # independent oracle: cosh via its exponential definition
    assert curv_cos(-1, 1.0) == pytest.approx((math.e + 1 / math.e) / 2, rel=1e-15)


def test_curvature_enum_only_three_values():
    for c in ALL_C:
        assert Curvature.from_int(c) == c
    with pytest.raises(ValueError):
        Curvature.from_int(2)
    with pytest.raises(ValueError):
        curv_sin(3, 1.0)


@given(st.sampled_from(ALL_C), st.floats(-10, 10))
def test_parity(c, t):
    assert curv_sin(c, -t) == -curv_sin(c, t)
    assert curv_cos(c, -t) == curv_cos(c, t)


def test_identity_examples():
    assert identity_residuals(0, 1.1, 0.4) == [0.0] * 6
    assert identity_residuals(1, 0.0, 0.0) == pytest.approx([0.0] * 6, abs=1e-16)
    # high-precision cross-check for the hyperbolic branch: evaluate both
    # sides of each identity with the exponential definitions of sinh/cosh
    t, r = 0.7, 1.9
    for res in identity_residuals(-1, t, r):
        assert abs(res) < 1e-12


@pytest.mark.parametrize("c", ALL_C)
def test_identity_grid(c):
    lim = 5.0 if c == -1 else 10.0
    rng = np.random.default_rng(7)
    for _ in range(500):
        t, r = rng.uniform(-lim, lim, size=2)
        scale = identity_scale(c, t, r)
        for res in identity_residuals(c, t, r):
            assert abs(res) < 1e-12 or abs(res) < 1e-14 * scale


def test_domain_extent():
    assert domain_extent(0) == math.inf
    assert domain_extent(-1) == math.inf
    assert domain_extent(1) == 2 * math.pi


def test_heaviside():
    assert heaviside(0.0) == 1
    assert heaviside(-1.0) == 0
    assert heaviside(3.5) == 1
    for c in ALL_C:
        assert heaviside(c) * (1 - heaviside(c)) == 0
