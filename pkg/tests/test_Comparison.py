#!python
# coding: utf-8

"""
Tests for alexgeo comparison geometry (comparison angles and triangles, 4-point condition, side comparison and
curvature lower bound estimator).
"""


import math
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from alexgeo import (
    CurvatureAuditReport,
    DegenerateTriangleError,
    InconclusiveAuditError,
    ModelSpace,
    build_comparison_triangle,
    c_kappa,
    comparison_angle,
    comparison_cosine,
    estimate_curvature_lower_bound,
    find_four_point_violation,
    four_point_check,
    s_kappa,
    side_comparison_check,
    versine_kappa,
)
from .conftest import sample_points


##########
# Fixtures
##########


@pytest.fixture()
def planar_star(plane):
    """Apex at the center of an equilateral triangle."""
    h = math.sqrt(3.0) / 2.0
    return (
        plane.point([0.0, 0.0]),
        plane.point([1.0, 0.0]),
        plane.point([-0.5, h]),
        plane.point([-0.5, -h]),
    )


@pytest.fixture()
def square_with_center(plane):
    return (
        plane.point([0.5, 0.5]),
        plane.point([0.0, 0.0]),
        plane.point([1.0, 0.0]),
        plane.point([1.0, 1.0]),
        plane.point([0.0, 1.0]),
    )


def triangle_sides():
    """Admissible side triples with every side in (0, 1]."""
    return st.tuples(
        st.floats(min_value=0.05, max_value=1.0),
        st.floats(min_value=0.05, max_value=1.0),
        st.floats(min_value=0.0, max_value=1.0),
    ).filter(lambda sides: abs(sides[0] - sides[1]) <= sides[2] <= sides[0] + sides[1])


#######
# Tests
#######


class Test_s_kappa:
    def test_sphere(self):
        assert s_kappa(1, math.pi / 2) == pytest.approx(1.0)

    def test_flat(self):
        assert s_kappa(0, 3.7) == 3.7
        assert c_kappa(0, 3.7) == 1.0

    def test_hyperbolic(self):
        assert s_kappa(-1, 1) == pytest.approx(math.sinh(1.0))
        assert s_kappa(-1, 1) == pytest.approx(1.1752, abs=1e-4)
        assert c_kappa(-1, 1) == pytest.approx(math.cosh(1.0))

    def test_derivative(self):
        for kappa in (-2.0, -0.5, 0.0, 0.5, 2.0):
            r, h = 0.7, 1e-6
            numeric = (s_kappa(kappa, r + h) - s_kappa(kappa, r - h)) / (2 * h)
            assert c_kappa(kappa, r) == pytest.approx(numeric, abs=1e-8)

    def test_continuity_in_kappa(self):
        assert s_kappa(1e-9, 2.0) == pytest.approx(s_kappa(0.0, 2.0), abs=1e-8)
        assert s_kappa(-1e-9, 2.0) == pytest.approx(s_kappa(0.0, 2.0), abs=1e-8)

    def test_vectorised(self):
        r = np.array([0.0, 0.5, 1.0])
        np.testing.assert_allclose(s_kappa(1.0, r), np.sin(r))

    def test_versine(self):
        for kappa in (-1.0, 0.5, 2.0):
            assert 1.0 - kappa * versine_kappa(kappa, 0.8) == pytest.approx(c_kappa(kappa, 0.8))
        assert versine_kappa(0.0, 0.8) == pytest.approx(0.32)


class Test_comparison_angle:
    def test_right_isoceles(self):
        assert comparison_angle(0, 1, 1, math.sqrt(2.0)) == pytest.approx(math.pi / 2)

    def test_octant(self):
        h = math.pi / 2
        assert comparison_angle(1, h, h, h) == pytest.approx(math.pi / 2)

    def test_undefined(self):
        assert comparison_angle(1, 2.5, 2.5, 2.5) is None

    def test_hyperbolic_always_defined(self):
        assert comparison_angle(-1, 30.0, 30.0, 59.0) is not None

    def test_zero_adjacent_side(self):
        with pytest.raises(DegenerateTriangleError):
            comparison_angle(0, 0.0, 1.0, 1.0)

    def test_triangle_inequality(self):
        with pytest.raises(DegenerateTriangleError):
            comparison_angle(0, 1.0, 1.0, 3.0)

    def test_straight_and_null_angles(self):
        assert comparison_angle(0, 1.0, 2.0, 3.0) == pytest.approx(math.pi)
        assert comparison_angle(-1, 1.0, 1.0, 0.0) == pytest.approx(0.0)

    def test_matches_cosine(self):
        for kappa in (-1.0, 0.0, 1.0):
            angle = comparison_angle(kappa, 0.6, 0.9, 0.8)
            assert math.cos(angle) == pytest.approx(comparison_cosine(kappa, 0.6, 0.9, 0.8), abs=1e-12)

    @settings(max_examples=200, deadline=None)
    @given(sides=triangle_sides())
    def test_continuity_in_kappa(self, sides):
        flat = comparison_angle(0.0, *sides)
        assert comparison_angle(1e-6, *sides) == pytest.approx(flat, abs=1e-4)
        assert comparison_angle(-1e-6, *sides) == pytest.approx(flat, abs=1e-4)

    def test_monotone_in_kappa(self):
        grid = np.linspace(0.1, 1.0, 10)
        for a in grid:
            for b in grid:
                for c in grid:
                    if abs(a - b) <= c <= a + b:
                        assert comparison_angle(1.0, a, b, c) >= comparison_angle(0.0, a, b, c) - 1e-12


class Test_build_comparison_triangle:
    def test_pythagorean(self):
        triangle = build_comparison_triangle(0, (3, 4, 5))
        np.testing.assert_allclose(triangle.measured_sides(), (3, 4, 5), atol=1e-10)
        assert triangle.perimeter == pytest.approx(12.0)
        assert triangle.plane == ModelSpace.euclidean(2)

    def test_octant(self):
        h = math.pi / 2
        triangle = build_comparison_triangle(1, (h, h, h))
        np.testing.assert_allclose(triangle.measured_sides(), (h, h, h), atol=1e-10)
        gram = np.array([[u.coords @ v.coords for v in triangle.vertices] for u in triangle.vertices])
        np.testing.assert_allclose(gram, np.eye(3), atol=1e-10)

    def test_hyperbolic_equilateral(self):
        triangle = build_comparison_triangle(-1, (1, 1, 1))
        np.testing.assert_allclose(triangle.measured_sides(), (1, 1, 1), atol=1e-10)

    def test_perimeter_overflow(self):
        with pytest.raises(DegenerateTriangleError):
            build_comparison_triangle(1, (2.5, 2.5, 2.5))

    def test_triangle_inequality(self):
        with pytest.raises(DegenerateTriangleError):
            build_comparison_triangle(-1, (1, 1, 2.5))

    @settings(max_examples=100, deadline=None)
    @given(sides=triangle_sides(), kappa=st.sampled_from([-4.0, -1.0, 0.0, 0.5, 1.0, 2.0]))
    def test_measured_sides_round_trip(self, sides, kappa):
        triangle = build_comparison_triangle(kappa, sides)
        np.testing.assert_allclose(triangle.measured_sides(), sides, atol=1e-9)


class Test_four_point_check:
    def test_planar_star(self, planar_star):
        result = four_point_check(0, *planar_star)
        assert result.passed
        assert result.details["angle_sum"] == pytest.approx(2 * math.pi, abs=1e-12)
        assert result.value == pytest.approx(0.0, abs=1e-12)

    def test_square_with_center(self, square_with_center):
        center, a, b, c, _ = square_with_center
        assert four_point_check(0.0, center, a, b, c).passed
        failing = four_point_check(0.1, center, a, b, c)
        assert failing.failed
        assert failing.value > 0

    def test_inconclusive(self, sphere):
        p = sphere.point([1, 0, 0])
        x = sphere.point([0, 1, 0])
        y = sphere.point([0, 0, 1])
        z = sphere.point([0, -1, 0])
        # octant triangles have perimeter 3 pi/2 > 2 D_2
        result = four_point_check(2.0, p, x, y, z)
        assert result.inconclusive
        assert result.value is None

    def test_coincident_apex(self, plane):
        p = plane.point([0, 0])
        with pytest.raises(DegenerateTriangleError):
            four_point_check(0, p, p, plane.point([1, 0]), plane.point([0, 1]))

    def test_coincident_non_apex_points(self, plane):
        p, x = plane.point([0, 0]), plane.point([1, 0])
        result = four_point_check(0, p, x, x, plane.point([0, 1]))
        assert result.passed

    def test_sphere_design(self):
        space = ModelSpace.sphere(2)
        points = sample_points(space, 20, seed=20, radius=0.99 * math.pi)
        assert find_four_point_violation(space, points, 1.0) is None

    def test_sphere_witness_above_curvature(self):
        space = ModelSpace.sphere(2)
        points = sample_points(space, 20, seed=21, radius=1.2)
        witness = find_four_point_violation(space, points, 1.2)
        assert witness is not None
        indices, result = witness
        assert len(set(indices)) == 4
        assert result.failed
        assert result.value > 0

    @pytest.mark.parametrize(
        "space, radius",
        [
            (ModelSpace.euclidean(2), 1.0),
            (ModelSpace.euclidean(3), 1.0),
            (ModelSpace.sphere(2), 1.5),
            (ModelSpace.sphere(3, kappa=2.0), 1.0),
            (ModelSpace.hyperbolic(2), 2.0),
            (ModelSpace.hyperbolic(3, kappa=-0.5), 2.0),
        ],
        ids=repr,
    )
    def test_soundness_at_exact_curvature(self, space, radius):
        points = sample_points(space, 40, seed=30, radius=radius)
        assert find_four_point_violation(space, points, space.kappa, budget=10000, seed=31) is None


class Test_side_comparison_check:
    def test_euclidean_equality(self, plane):
        p, x, y = sample_points(plane, 3, seed=40)
        for s, t in ((0.2, 0.7), (0.5, 0.5), (1.0, 0.3)):
            result = side_comparison_check(0.0, p, x, y, s, t)
            assert result.passed
            assert abs(result.value) <= 1e-10

    def test_endpoints(self, hyperbolic):
        p, x, y = sample_points(hyperbolic, 3, seed=41)
        result = side_comparison_check(-1.0, p, x, y, 0.0, 0.6)
        assert result.value == pytest.approx(0.0, abs=1e-9)

    def test_sphere_against_plane(self, sphere):
        p = sphere.point([1, 0, 0])
        x = sphere.point([0, 1, 0])
        y = sphere.point([0, 0, 1])
        result = side_comparison_check(0.0, p, x, y, 0.5, 0.5)
        assert result.passed
        # midpoints of the octant sides: pi/3 apart on the sphere, pi/4 apart in the plane
        assert result.details["distance"] == pytest.approx(math.pi / 3)
        assert result.details["model_distance"] == pytest.approx(math.pi / 4)
        assert result.value < -1e-3

    def test_finite_metric(self, square_matrix):
        from alexgeo import DistanceMatrixReader

        space = DistanceMatrixReader(square_matrix).read()
        p, x, y = space.points()[:3]
        with pytest.raises(TypeError):
            side_comparison_check(0.0, p, x, y, 0.5, 0.5)

    def test_degenerate(self, plane):
        p = plane.point([0, 0])
        with pytest.raises(DegenerateTriangleError):
            side_comparison_check(0.0, p, p, plane.point([1, 0]), 0.5, 0.5)

    def test_perimeter_overflow(self, sphere):
        p, x, y = sphere.point([1, 0, 0]), sphere.point([0, 1, 0]), sphere.point([0, 0, 1])
        with pytest.raises(DegenerateTriangleError):
            side_comparison_check(2.0, p, x, y, 0.5, 0.5)


class Test_estimate_curvature_lower_bound:
    def test_planar_cloud(self, plane):
        points = sample_points(plane, 10, seed=50)
        report = estimate_curvature_lower_bound(plane, points, -1.0, 1.0)
        assert isinstance(report, CurvatureAuditReport)
        assert -1e-3 <= report.kappa_max_estimate <= 1e-3
        assert report.violations
        assert report.kappa_tested > report.kappa_max_estimate
        assert report.quadruples_checked == 10 * 84

    def test_euclidean_cloud(self):
        space = ModelSpace.euclidean(3)
        points = [space.point(row) for row in np.random.default_rng(1).standard_normal((10, 3))]
        report = estimate_curvature_lower_bound(space, points, -1.0, 1.0)
        assert -1e-3 <= report.kappa_max_estimate <= 1e-3
        assert report.violations

    @pytest.mark.parametrize("seed", range(10))
    def test_euclidean_cloud_nonnegative(self, seed):
        # R^3 has curvature >= 0: no quadruple fails at kappa <= 0, whatever the cloud
        space = ModelSpace.euclidean(3)
        points = [space.point(row) for row in np.random.default_rng(seed).standard_normal((10, 3))]
        report = estimate_curvature_lower_bound(space, points, -1.0, 1.0)
        assert report.kappa_max_estimate >= 0.0
        assert all(count == 0 for kappa, count in report.trace if kappa <= 0.0)

    def test_sphere_cap(self, sphere):
        points = sample_points(sphere, 10, seed=51, radius=1.2)
        report = estimate_curvature_lower_bound(sphere, points, 0.0, 2.0)
        assert 0.95 <= report.kappa_max_estimate <= 1.05

    def test_square_matrix(self, square_matrix):
        from alexgeo import DistanceMatrixReader

        space = DistanceMatrixReader(square_matrix).read()
        report = estimate_curvature_lower_bound(space, kappa_lo=-1.0, kappa_hi=1.0)
        assert -1e-3 <= report.kappa_max_estimate <= 1e-3
        indices, angle_sum, excess = report.violations[0]
        # the center is the only apex with an angle sum of 2*pi at kappa = 0
        assert indices[0] == 4
        assert excess == pytest.approx(angle_sum - 2 * math.pi)

    def test_no_violation_in_range(self, hyperbolic):
        points = sample_points(hyperbolic, 8, seed=52)
        report = estimate_curvature_lower_bound(hyperbolic, points, -3.0, -1.5)
        assert report.kappa_max_estimate == -1.5
        assert report.violations == []

    def test_fails_at_lower_end(self, plane):
        points = sample_points(plane, 10, seed=53)
        report = estimate_curvature_lower_bound(plane, points, 0.5, 1.0)
        assert report.kappa_max_estimate is None
        assert report.kappa_tested == 0.5
        assert report.violations
        assert report.to_dict()["kappa_max_estimate"] is None
        assert [kappa for kappa, _ in report.trace] == [0.5]

    def test_deterministic(self, sphere):
        points = sample_points(sphere, 20, seed=54, radius=1.0)
        first = estimate_curvature_lower_bound(sphere, points, 0.0, 2.0, budget=2000, seed=3)
        second = estimate_curvature_lower_bound(sphere, points, 0.0, 2.0, budget=2000, seed=3)
        assert first.to_dict() == second.to_dict()

    def test_inconclusive(self):
        space = ModelSpace.sphere(2)
        points = [
            space.point([1, 0, 0]),
            space.point([-1, 0, 0]),
            space.point([0, 1, 0]),
            space.point([0, -1, 0]),
        ]
        with pytest.raises(InconclusiveAuditError):
            estimate_curvature_lower_bound(space, points, 1.5, 2.0)

    def test_bad_range(self, plane):
        with pytest.raises(ValueError):
            estimate_curvature_lower_bound(plane, sample_points(plane, 5, seed=1), 1.0, -1.0)

    def test_too_few_samples(self, plane):
        with pytest.raises(ValueError):
            estimate_curvature_lower_bound(plane, sample_points(plane, 3, seed=1), -1.0, 1.0)

    def test_to_dict(self, plane):
        report = estimate_curvature_lower_bound(plane, sample_points(plane, 6, seed=55), -1.0, 1.0)
        description = report.to_dict()
        assert set(description) == {
            "kappa_tested",
            "quadruples_checked",
            "violations",
            "kappa_max_estimate",
            "quadruples_inconclusive",
            "trace",
        }
        assert description["trace"][0]["kappa"] == -1.0
