#!python
# coding: utf-8

"""
Tests for alexgeo tangent cone arithmetic (ConePoint, cone metric, inner products and geodesic limits).
"""


import math
import numpy as np
import pytest
from hypothesis import given, settings
from alexgeo import (
    ConePoint,
    Geodesic,
    ModelSpace,
    SpaceMismatchError,
    angle_between_geodesics,
    cone_distance,
    cone_inner_product,
    geodesic_direction,
    geodesic_separation_rate,
    inner_product,
    metric_speed,
    midpoint_limit,
    norm,
)
from .conftest import seeds


##########
# Fixtures
##########


@pytest.fixture()
def pole_frame(sphere):
    p = sphere.origin()
    e1, e2 = sphere.tangent_basis(p)
    return p, e1, e2


@pytest.fixture()
def plane_frame(plane):
    p = plane.origin()
    return p, plane.tangent(p, [1.0, 0.0]), plane.tangent(p, [0.0, 1.0])


def random_vectors(space, seed, count):
    """Base point and count tangent vectors of norm in [0.2, 1] at it."""
    rng = np.random.default_rng(seed)
    p = space.random_point(rng)
    return p, [space.random_unit_tangent(rng, p) * rng.uniform(0.2, 1.0) for _ in range(count)]


#######
# Tests
#######


class TestConePoint:
    def test_tips_are_equal(self):
        assert ConePoint("a", 0.0) == ConePoint("b", 0)
        assert hash(ConePoint("a", 0.0)) == hash(ConePoint("b", 0.0))
        assert ConePoint("a", 0.0).is_tip

    def test_equality(self):
        assert ConePoint("a", 1.5) == ConePoint("a", 1.5)
        assert ConePoint("a", 1.5) != ConePoint("b", 1.5)
        assert ConePoint("a", 1.5) != ConePoint("a", 2.0)

    def test_scaled(self):
        assert ConePoint("a", 1.5).scaled(2) == ConePoint("a", 3.0)
        assert ConePoint("a", 1.5).scaled(0).is_tip
        with pytest.raises(ValueError):
            ConePoint("a", 1.5).scaled(-1)

    def test_radius(self):
        with pytest.raises(ValueError):
            ConePoint("a", -1.0)
        with pytest.raises(TypeError):
            ConePoint("a", "1")
        with pytest.raises(TypeError):
            ConePoint("a", True)


class Test_cone_distance:
    def test_right_angle(self):
        assert cone_distance(ConePoint("a", 1), ConePoint("b", 1), math.pi / 2) == pytest.approx(math.sqrt(2.0))

    def test_tip(self):
        for theta in (0.0, 1.0, math.pi):
            assert cone_distance(ConePoint("a", 0), ConePoint("b", 2.5), theta) == pytest.approx(2.5)

    @pytest.mark.parametrize("theta", [0.0, 0.3, 1.0, 2.0, math.pi])
    def test_unit_radii(self, theta):
        d = cone_distance(ConePoint("a", 1), ConePoint("b", 1), theta)
        assert d == pytest.approx(2 * math.sin(theta / 2), abs=1e-15)

    def test_law_of_cosines(self):
        a, b = ConePoint("a", 2.0), ConePoint("b", 3.0)
        expected = math.sqrt(4.0 + 9.0 - 12.0 * math.cos(0.8))
        assert cone_distance(a, b, 0.8) == pytest.approx(expected)

    def test_bad_angle(self):
        with pytest.raises(ValueError):
            cone_distance(ConePoint("a", 1), ConePoint("b", 1), 4.0)
        with pytest.raises(ValueError):
            cone_distance(ConePoint("a", 1), ConePoint("b", 1), -0.1)

    def test_bad_points(self):
        with pytest.raises(TypeError):
            cone_distance(ConePoint("a", 1), 1.0, 0.5)


class Test_cone_inner_product:
    def test_values(self):
        a, b = ConePoint("a", 2.0), ConePoint("b", 3.0)
        assert cone_inner_product(a, b, 0.0) == pytest.approx(6.0)
        assert cone_inner_product(a, b, math.pi / 2) == pytest.approx(0.0, abs=1e-15)
        assert cone_inner_product(a, b, math.pi) == pytest.approx(-6.0)

    def test_polarisation(self):
        a, b, theta = ConePoint("a", 0.7), ConePoint("b", 1.3), 2.1
        d = cone_distance(a, b, theta)
        assert cone_inner_product(a, b, theta) == pytest.approx(0.5 * (0.7**2 + 1.3**2 - d**2))


class Test_inner_product:
    def test_plane(self, plane_frame):
        _, e1, e2 = plane_frame
        assert inner_product(e1, e2) == 0.0
        assert inner_product(e1 * 2.0, e1 * 3.0) == pytest.approx(6.0)
        assert norm(e1 * 3.0 + e2 * 4.0) == pytest.approx(5.0)

    def test_tip(self, sphere):
        p = sphere.origin()
        assert norm(sphere.zero(p)) == 0.0

    def test_different_bases(self, plane):
        u = plane.tangent(plane.point([0.0, 0.0]), [1.0, 0.0])
        v = plane.tangent(plane.point([1.0, 0.0]), [1.0, 0.0])
        with pytest.raises(SpaceMismatchError):
            inner_product(u, v)

    def test_not_a_vector(self):
        with pytest.raises(TypeError):
            inner_product([1.0, 0.0], [0.0, 1.0])
        with pytest.raises(TypeError):
            norm(1.0)


class Test_metric_speed:
    def test_speed(self, space):
        p, (u,) = random_vectors(space, 3, 1)
        g = Geodesic(p, u * 0.5)
        assert metric_speed(g) == pytest.approx(norm(u) * 0.5)
        assert metric_speed(g, 0.25) == pytest.approx(norm(u) * 0.5)

    def test_direction(self, space):
        p, (u,) = random_vectors(space, 4, 1)
        direction = geodesic_direction(Geodesic(p, u))
        assert norm(direction) == pytest.approx(1.0)
        assert inner_product(direction, u) == pytest.approx(norm(u))

    def test_bad_parameter(self, plane_frame):
        p, e1, _ = plane_frame
        with pytest.raises(ValueError):
            metric_speed(Geodesic(p, e1), 0.0)


class Test_angle_between_geodesics:
    def test_right_angle(self, plane_frame):
        p, e1, e2 = plane_frame
        assert angle_between_geodesics(Geodesic(p, e1), Geodesic(p, e2)) == pytest.approx(math.pi / 2, abs=1e-10)

    def test_self(self, plane_frame):
        p, e1, _ = plane_frame
        assert angle_between_geodesics(Geodesic(p, e1), Geodesic(p, e1)) == pytest.approx(0.0, abs=1e-10)

    def test_meridians(self, pole_frame):
        p, e1, e2 = pole_frame
        g1 = Geodesic(p, e1)
        g2 = Geodesic(p, e1 * math.cos(0.7) + e2 * math.sin(0.7))
        assert angle_between_geodesics(g1, g2) == pytest.approx(0.7, abs=1e-6)

    def test_scale_invariance(self, pole_frame):
        p, e1, e2 = pole_frame
        g1, g2 = Geodesic(p, e1 * 0.3), Geodesic(p, (e1 + e2) * 2.0)
        assert angle_between_geodesics(g1, g2) == pytest.approx(math.pi / 4, abs=1e-6)

    def test_constant_geodesic(self, plane_frame, plane):
        p, e1, _ = plane_frame
        with pytest.raises(ValueError):
            angle_between_geodesics(Geodesic(p, e1), Geodesic(p, plane.zero(p)))

    def test_no_common_point(self, plane):
        g1 = Geodesic.between(plane.point([0, 0]), plane.point([1, 0]))
        g2 = Geodesic.between(plane.point([0, 1]), plane.point([1, 1]))
        with pytest.raises(SpaceMismatchError):
            angle_between_geodesics(g1, g2)

    def test_angle_triangle_inequality(self, space):
        for seed in range(10):
            p, (u, v, w) = random_vectors(space, seed, 3)
            g_u, g_v, g_w = Geodesic(p, u), Geodesic(p, v), Geodesic(p, w)
            assert angle_between_geodesics(g_u, g_w) <= (
                angle_between_geodesics(g_u, g_v) + angle_between_geodesics(g_v, g_w) + 1e-6
            )

    @settings(max_examples=25, deadline=None)
    @given(seed=seeds)
    def test_matches_inner_product(self, seed):
        space = ModelSpace.hyperbolic(3)
        p, (u, v) = random_vectors(space, seed, 2)
        expected = math.acos(max(-1.0, min(1.0, inner_product(u, v) / (norm(u) * norm(v)))))
        assert angle_between_geodesics(Geodesic(p, u), Geodesic(p, v)) == pytest.approx(expected, abs=1e-6)


class Test_geodesic_separation_rate:
    def test_orthonormal(self, plane_frame):
        p, e1, e2 = plane_frame
        assert geodesic_separation_rate(Geodesic(p, e1), Geodesic(p, e2)) == pytest.approx(math.sqrt(2.0))

    def test_self(self, pole_frame):
        p, e1, _ = pole_frame
        assert geodesic_separation_rate(Geodesic(p, e1), Geodesic(p, e1)) == pytest.approx(0.0, abs=1e-12)

    def test_unequal_speeds(self, plane_frame):
        p, e1, e2 = plane_frame
        assert geodesic_separation_rate(Geodesic(p, e1), Geodesic(p, e2 * 2.0)) == pytest.approx(math.sqrt(5.0))

    def test_law_of_cosines(self, space):
        # |u - v|**2 = |u|**2 + |v|**2 - 2 <u, v>
        for seed in range(20):
            p, (u, v) = random_vectors(space, 100 + seed, 2)
            rate = geodesic_separation_rate(Geodesic(p, u), Geodesic(p, v))
            expected = math.sqrt(max(0.0, norm(u) ** 2 + norm(v) ** 2 - 2.0 * inner_product(u, v)))
            assert rate == pytest.approx(expected, rel=1e-6, abs=1e-6)

    @pytest.mark.slow
    def test_law_of_cosines_corpus(self, space):
        for seed in range(1000):
            p, (u, v) = random_vectors(space, 10000 + seed, 2)
            rate = geodesic_separation_rate(Geodesic(p, u), Geodesic(p, v))
            expected = math.sqrt(max(0.0, norm(u) ** 2 + norm(v) ** 2 - 2.0 * inner_product(u, v)))
            assert rate == pytest.approx(expected, rel=1e-6, abs=1e-6), seed

    def test_homogeneity(self, space):
        p, (u, v) = random_vectors(space, 7, 2)
        rate = geodesic_separation_rate(Geodesic(p, u), Geodesic(p, v))
        scaled = geodesic_separation_rate(Geodesic(p, u * 0.5), Geodesic(p, v * 0.5))
        assert scaled == pytest.approx(0.5 * rate, rel=1e-6)


class Test_midpoint_limit:
    def test_orthonormal(self, plane_frame):
        p, e1, e2 = plane_frame
        assert midpoint_limit(Geodesic(p, e1), Geodesic(p, e2)) == pytest.approx(2.0)

    def test_same_geodesic(self, hyperbolic):
        p, (u,) = random_vectors(hyperbolic, 5, 1)
        assert midpoint_limit(Geodesic(p, u), Geodesic(p, u)) == pytest.approx(4.0 * norm(u) ** 2, rel=1e-6)

    def test_sphere(self, pole_frame):
        p, e1, e2 = pole_frame
        assert midpoint_limit(Geodesic(p, e1), Geodesic(p, e2)) == pytest.approx(2.0, rel=1e-6)

    def test_identity(self, space):
        for seed in range(20):
            p, (u, v) = random_vectors(space, 200 + seed, 2)
            expected = norm(u) ** 2 + 2.0 * inner_product(u, v) + norm(v) ** 2
            assert midpoint_limit(Geodesic(p, u), Geodesic(p, v)) == pytest.approx(expected, abs=1e-5)

    @pytest.mark.slow
    def test_identity_corpus(self, space):
        for seed in range(1000):
            p, (u, v) = random_vectors(space, 20000 + seed, 2)
            expected = norm(u) ** 2 + 2.0 * inner_product(u, v) + norm(v) ** 2
            assert midpoint_limit(Geodesic(p, u), Geodesic(p, v)) == pytest.approx(expected, abs=1e-5), seed

