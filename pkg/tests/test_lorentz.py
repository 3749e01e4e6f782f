import math

import numpy as np
import pytest

from curvrad.curvature import Curvature
from curvrad.geometry import GeometryDomainError, Space, disc_area
from curvrad.lorentz import (RadialSet, UnsupportedEndpointError,
                             endpoint_exponent, lorentz_norm_char,
                             lorentz_norm_simple, radial_set_measure)
from curvrad.profiles import RadialProfile


def test_measure_examples():
    ball = RadialSet(((0.0, 1.0),))
    flat3 = Space(Curvature.FLAT, 3)
    assert radial_set_measure(flat3, ball) == pytest.approx(4 * math.pi / 3,
                                                            rel=1e-12)
    hemisphere = RadialSet(((0.0, math.pi / 2),))
    sphere2 = Space(Curvature.SPHERICAL, 2)
    assert radial_set_measure(sphere2, hemisphere) == pytest.approx(2 * math.pi,
                                                                    rel=1e-12)
    hyper2 = Space(Curvature.HYPERBOLIC, 2)
    assert radial_set_measure(hyper2, ball) == pytest.approx(
        disc_area(-1, 1.0), rel=1e-12)


def test_measure_additive_over_components():
    space = Space(Curvature.HYPERBOLIC, 3)
    union = RadialSet(((0.2, 0.5), (1.0, 1.7)))
    parts = (radial_set_measure(space, RadialSet(((0.2, 0.5),)))
             + radial_set_measure(space, RadialSet(((1.0, 1.7),))))
    assert radial_set_measure(space, union) == pytest.approx(parts, rel=1e-12)


def test_norm_char_examples():
    sphere3 = Space(Curvature.SPHERICAL, 3)
    whole = RadialSet(((0.0, math.pi),))
    # |S^3| = 2 pi^2, so the L^{3,1} norm of the full sphere is (2 pi^2)^(1/3)
    assert lorentz_norm_char(sphere3, whole, 3.0) == pytest.approx(
        (2 * math.pi**2) ** (1 / 3), rel=1e-11)
    flat3 = Space(Curvature.FLAT, 3)
    ball = RadialSet(((0.0, 1.0),))
    for p in (1.0, 1.5, 3.0):
        assert lorentz_norm_char(flat3, ball, p) == pytest.approx(
            (4 * math.pi / 3) ** (1 / p), rel=1e-11)


def test_norm_char_power_identity():
    rng = np.random.default_rng(13)
    space = Space(Curvature.HYPERBOLIC, 4)
    for _ in range(10):
        a, w = rng.uniform(0.0, 1.0), rng.uniform(0.1, 1.0)
        p = rng.uniform(1.0, 5.0)
        E = RadialSet(((a, a + w),))
        assert lorentz_norm_char(space, E, p) ** p == pytest.approx(
            radial_set_measure(space, E), rel=1e-10)


def test_layer_cake_two_levels():
    space = Space(Curvature.FLAT, 2)
    f = RadialProfile((0.0, 1.0, 2.0), (2.0, 1.0))
    # levels: (|f| > 0) = disc of radius 2, (|f| > 1) = disc of radius 1
    for p in (1.0, 2.0):
        expected = (4 * math.pi) ** (1 / p) + math.pi ** (1 / p)
        assert lorentz_norm_simple(space, f, p) == pytest.approx(expected,
                                                                 rel=1e-11)


def test_layer_cake_indicator_reduces_to_char_norm():
    space = Space(Curvature.SPHERICAL, 3)
    f = RadialProfile((0.0, 0.4, 0.9), (0.0, 3.0))
    E = RadialSet(((0.4, 0.9),))
    assert lorentz_norm_simple(space, f, 2.0) == pytest.approx(
        3.0 * lorentz_norm_char(space, E, 2.0), rel=1e-11)


def test_layer_cake_sign_invariance():
    space = Space(Curvature.FLAT, 3)
    f = RadialProfile((0.0, 0.5, 1.0), (1.0, -2.0))
    g = RadialProfile((0.0, 0.5, 1.0), (1.0, 2.0))
    assert lorentz_norm_simple(space, f, 2.0) == pytest.approx(
        lorentz_norm_simple(space, g, 2.0), rel=1e-12)


def test_layer_cake_subadditive_on_layered_sum():
    space = Space(Curvature.FLAT, 3)
    f = RadialProfile((0.0, 0.5, 1.5), (3.0, 1.0))
    inner = RadialProfile((0.0, 0.5), (2.0,))
    outer = RadialProfile((0.0, 1.5), (1.0,))
    for p in (1.5, 2.0, 4.0):
        assert lorentz_norm_simple(space, f, p) <= (
            lorentz_norm_simple(space, inner, p)
            + lorentz_norm_simple(space, outer, p) + 1e-12)


def test_endpoint_exponents():
    assert endpoint_exponent(Space(Curvature.FLAT, 4), 2) == pytest.approx(2.0)
    assert endpoint_exponent(Space(Curvature.SPHERICAL, 3), 1) == pytest.approx(3.0)
    assert endpoint_exponent(Space(Curvature.HYPERBOLIC, 4), 2) == pytest.approx(3.0)
    assert endpoint_exponent(Space(Curvature.HYPERBOLIC, 3), 2) == pytest.approx(2.0)


def test_hyperbolic_xray_endpoint_rejected():
    with pytest.raises(UnsupportedEndpointError):
        endpoint_exponent(Space(Curvature.HYPERBOLIC, 3), 1)
    # the flat and spherical X-ray endpoints do exist
    assert endpoint_exponent(Space(Curvature.FLAT, 3), 1) == pytest.approx(3.0)


def test_validation():
    with pytest.raises(ValueError):
        RadialSet(((0.5, 0.5),))
    with pytest.raises(ValueError):
        RadialSet(((0.0, 1.0), (0.5, 2.0)))
    with pytest.raises(GeometryDomainError):
        radial_set_measure(Space(Curvature.SPHERICAL, 2),
                           RadialSet(((0.0, 3.5),)))
    with pytest.raises(ValueError):
        lorentz_norm_char(Space(Curvature.FLAT, 2), RadialSet(((0.0, 1.0),)), 0.5)
    with pytest.raises(GeometryDomainError):
        endpoint_exponent(Space(Curvature.FLAT, 3), 3)
