import math

import numpy as np
import pytest

from curvrad.curvature import Curvature, curv_cos
from curvrad.geometry import GeometryDomainError, Space, disc_area
from curvrad.profiles import PlaneOffset, RadialProfile
from curvrad.transform import (euclidean_ball_slice, kplane_transform,
                               kplane_transform_oracle, surface_area_sphere,
                               transform_constant, xray_embedded_oracle)

UNIT_BALL = RadialProfile.ball_indicator(1.0)
SPHERE_ONE = RadialProfile.ball_indicator(math.pi)  # f = 1 on the whole sphere


def random_profile(rng, c):
    hi = math.pi if c == 1 else 2.5
    m = int(rng.integers(1, 5))
    bps = np.sort(rng.uniform(0.05, hi, size=m))
    vals = rng.uniform(-1.0, 2.0, size=m)
    return RadialProfile((0.0, *bps), tuple(vals))


def test_surface_area_sphere():
    assert surface_area_sphere(1) == pytest.approx(2.0)
    assert surface_area_sphere(2) == pytest.approx(2 * math.pi)
    assert surface_area_sphere(3) == pytest.approx(4 * math.pi)
    assert transform_constant(1, 2) == pytest.approx(4 * math.pi)
    assert transform_constant(-1, 2) == pytest.approx(2 * math.pi)


def test_euclidean_ball_slice():
    assert euclidean_ball_slice(3, 2, 0.0, 1.0) == pytest.approx(math.pi)
    assert euclidean_ball_slice(4, 3, 1.0, 1.0) == 0.0
    assert euclidean_ball_slice(5, 3, 0.5, 1.0) == pytest.approx(
        (4 * math.pi / 3) * 0.75**1.5, rel=1e-12)
    with pytest.raises(GeometryDomainError):
        euclidean_ball_slice(3, 3, 0.0, 1.0)


@pytest.mark.parametrize("n,k,d,R", [
    (3, 2, 0.0, 1.0), (3, 2, 0.5, 1.0), (3, 1, 0.6, 1.0),
    (4, 3, 0.25, 2.0), (5, 3, 0.5, 1.0), (5, 4, 0.2, 0.7),
])
def test_flat_transform_matches_analytic_slice(n, k, d, R):
    space = Space(Curvature.FLAT, n)
    ball = RadialProfile.ball_indicator(R)
    value = kplane_transform(space, PlaneOffset(k=k, d=d), ball)
    expected = euclidean_ball_slice(n, k, d, R)
    assert value.raw == pytest.approx(expected, rel=1e-9)
    assert value.weighted == pytest.approx(expected, rel=1e-9)  # sc' = 1 flat


def test_flat_plane_missing_support():
    space = Space(Curvature.FLAT, 3)
    value = kplane_transform(space, PlaneOffset(k=2, d=1.0), UNIT_BALL)
    assert value.raw == 0.0


def test_sphere_great_subsphere_volume():
    # d = 0, f = 1: the transform is the volume of a great k-sphere
    for n, k in [(3, 1), (3, 2), (4, 3), (5, 2)]:
        space = Space(Curvature.SPHERICAL, n)
        value = kplane_transform(space, PlaneOffset(k=k, d=0.0), SPHERE_ONE)
        great = surface_area_sphere(k + 1) if k > 1 else 2 * math.pi
        assert value.raw == pytest.approx(great, rel=1e-9)


def test_hyperbolic_disc_through_origin():
    space = Space(Curvature.HYPERBOLIC, 3)
    value = kplane_transform_oracle(space, PlaneOffset(k=2, d=0.0), UNIT_BALL)
    assert value.raw == pytest.approx(disc_area(-1, 1.0), rel=1e-9)
    closed = kplane_transform(space, PlaneOffset(k=2, d=0.0), UNIT_BALL)
    assert closed.raw == pytest.approx(value.raw, rel=1e-10)


def test_oracle_equivalence_small_grid():
    rng = np.random.default_rng(17)
    for c in (-1, 0, 1):
        space = Space(Curvature.from_int(c), 4)
        for k in (1, 2, 3):
            for d in (0.0, 0.2, 0.9):
                f = random_profile(rng, c)
                plane = PlaneOffset(k=k, d=d)
                a = kplane_transform(space, plane, f)
                b = kplane_transform_oracle(space, plane, f)
                assert abs(a.raw - b.raw) <= max(1e-8, 1e-6 * abs(a.raw))


def test_xray_embedded_independence():
    rng = np.random.default_rng(29)
    for c in (-1, 0, 1):
        space = Space(Curvature.from_int(c), 3)
        f = random_profile(rng, c)
        for d in (0.0, 0.4):
            closed = kplane_transform(space, PlaneOffset(k=1, d=d), f).raw
            values = [xray_embedded_oracle(space, d, f, direction_seed=s)
                      for s in (1, 2, 3)]
            for v in values:
                assert abs(v - closed) < 1e-8
            assert max(values) - min(values) < 1e-10


def test_xray_flat_chords():
    space = Space(Curvature.FLAT, 3)
    assert xray_embedded_oracle(space, 0.0, UNIT_BALL) == pytest.approx(2.0, abs=1e-10)
    assert xray_embedded_oracle(space, 0.6, UNIT_BALL) == pytest.approx(1.6, abs=1e-10)


def test_xray_sphere_full_circle():
    space = Space(Curvature.SPHERICAL, 3)
    assert xray_embedded_oracle(space, 0.3, SPHERE_ONE) == pytest.approx(
        2 * math.pi, rel=1e-10)


def test_linearity_in_profile():
    space = Space(Curvature.HYPERBOLIC, 4)
    plane = PlaneOffset(k=2, d=0.3)
    f = RadialProfile((0.0, 0.5, 1.5), (1.0, -0.5))
    g = RadialProfile((0.0, 1.0), (2.0,))
    combo = RadialProfile((0.0, 0.5, 1.0, 1.5), (1.0 + 2 * 3.0, -0.5 + 6.0, -0.5))
    lhs = kplane_transform(space, plane, combo).raw
    rhs = (kplane_transform(space, plane, f).raw
           + 3.0 * kplane_transform(space, plane, g).raw)
    assert lhs == pytest.approx(rhs, abs=1e-9)


def test_monotone_in_offset_and_sign():
    for c in (-1, 0, 1):
        space = Space(Curvature.from_int(c), 3)
        f = UNIT_BALL
        grid = np.linspace(0.0, 1.2 if c != 1 else 1.4, 8)
        prev = math.inf
        for d in grid:
            v = kplane_transform(space, PlaneOffset(k=2, d=d), f)
            assert v.raw >= -1e-12 and v.weighted >= -1e-12
            assert v.raw <= prev + 1e-9
            prev = v.raw


def test_weight_consistency():
    rng = np.random.default_rng(31)
    for c in (-1, 0, 1):
        space = Space(Curvature.from_int(c), 4)
        f = random_profile(rng, c)
        for d in (0.0, 0.3, 0.8):
            v = kplane_transform(space, PlaneOffset(k=3, d=d), f)
            if v.raw != 0.0:
                assert v.weighted / v.raw == pytest.approx(curv_cos(c, d), rel=1e-12)


def test_plane_validation():
    space = Space(Curvature.SPHERICAL, 3)
    with pytest.raises(GeometryDomainError):
        kplane_transform(space, PlaneOffset(k=2, d=2.0), SPHERE_ONE)
    with pytest.raises(GeometryDomainError):
        kplane_transform(space, PlaneOffset(k=3, d=0.0), SPHERE_ONE)
