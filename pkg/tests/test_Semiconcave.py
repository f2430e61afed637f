#!python
# coding: utf-8

"""
Tests for alexgeo semiconcave calculus (certify_alpha, differentials, gradients, direction-sup inequality and
Lipschitz estimates).
"""


import math
import warnings
import numpy as np
import pytest
from hypothesis import given, settings
from alexgeo import (
    Ball,
    CertificationResult,
    ConvergenceError,
    Geodesic,
    GradientMismatchWarning,
    ModelSpace,
    SafeZoneError,
    ScalarField,
    SpaceMismatchError,
    certify_alpha,
    differential,
    differential_along,
    direction_sup_inequality_check,
    estimate_lipschitz,
    gradient,
    max_unit_differential,
)
from .conftest import seeds


##########
# Fixtures
##########


# upper bound of the hessian of d(., a)**2 on hyperbolic balls of radius 2 around a
HYPERBOLIC_ALPHA = 10.0


@pytest.fixture()
def linear(plane):
    return ScalarField.linear(plane, [3.0, 4.0], offset=1.0)


@pytest.fixture()
def hyperbolic_squared(hyperbolic):
    anchor = hyperbolic.point([math.cosh(0.5), math.sinh(0.5), 0.0])
    return ScalarField.squared_distance_to(anchor)


def tangent_sample(space, p, seed, count):
    rng = np.random.default_rng(seed)
    return [space.random_unit_tangent(rng, p) * rng.uniform(0.1, 2.0) for _ in range(count)]


def squared_distance_cases():
    """(d(., anchor)**2, upper bound of its hessian on the unit ball around the origin) on the three model planes."""
    cases = []
    for space, alpha in (
        (ModelSpace.euclidean(2), 2.0),
        (ModelSpace.sphere(2), 2.0),
        (ModelSpace.hyperbolic(2), HYPERBOLIC_ALPHA),
    ):
        anchor = space.random_point(np.random.default_rng(0), None, 0.5)
        cases.append(pytest.param(ScalarField.squared_distance_to(anchor), alpha, id=space.kind))
    return cases


#######
# Tests
#######


class Test_certify_alpha:
    def test_plane_squared_distance(self, plane):
        f = ScalarField.squared_distance_to(plane.point([0.2, -0.1]))
        result = certify_alpha(f, Ball(plane.origin(), 1.0))
        assert isinstance(result, CertificationResult)
        assert result.certified
        assert result.status == "Certified"
        assert result.witness is None
        assert result.geodesics_checked == 32
        assert result.max_defect <= 1e-9

    def test_overclaimed_alpha(self, plane):
        f = ScalarField.squared_distance_to(plane.origin(), alpha=3.0)
        result = certify_alpha(f, Ball(plane.origin(), 1.0))
        assert not result.certified
        assert result.status == "Refuted"
        assert result.witness.defect > 1e-9
        t1, mid, t2 = result.witness.t_triple
        assert mid == pytest.approx(0.5 * (t1 + t2))
        description = result.to_dict()
        assert description["status"] == "Refuted"
        assert set(description["witness"]) == {"start", "end", "t_triple", "defect"}

    def test_alpha_override(self, plane):
        f = ScalarField.squared_distance_to(plane.origin())
        assert not certify_alpha(f, Ball(plane.origin(), 1.0), alpha=2.5).certified
        assert certify_alpha(f, Ball(plane.origin(), 1.0), alpha=1.0).certified

    def test_hyperbolic_squared_distance(self, hyperbolic_squared, hyperbolic):
        assert certify_alpha(hyperbolic_squared, Ball(hyperbolic.origin(), 1.0)).certified

    def test_sphere_squared_distance(self, sphere):
        anchor = sphere.origin()
        f = ScalarField.squared_distance_to(anchor)
        assert f.alpha_claim == 0.0
        assert certify_alpha(f, Ball(anchor, 1.0)).certified

    def test_concave_mode(self, hyperbolic_squared, hyperbolic):
        negative = hyperbolic_squared.negated()
        assert negative.mode == "concave"
        assert certify_alpha(negative, Ball(hyperbolic.origin(), 1.0)).certified

    def test_neg_squared_distance(self, plane):
        f = ScalarField.neg_squared_distance_to(plane.origin())
        assert certify_alpha(f, Ball(plane.origin(), 1.0)).certified
        assert not certify_alpha(f, Ball(plane.origin(), 1.0), alpha=-1.0).certified

    def test_safe_zone(self, sphere):
        f = ScalarField.squared_distance_to(sphere.origin())
        with pytest.raises(SafeZoneError):
            certify_alpha(f, Ball(sphere.origin(), math.pi / 2))

    def test_space_mismatch(self, plane, sphere):
        f = ScalarField.squared_distance_to(plane.origin())
        with pytest.raises(SpaceMismatchError):
            certify_alpha(f, Ball(sphere.origin(), 0.5))

    def test_region(self, plane):
        f = ScalarField.squared_distance_to(plane.origin())
        with pytest.raises(TypeError):
            certify_alpha(f, (plane.origin(), 1.0))

    def test_deterministic(self, plane):
        f = ScalarField.squared_distance_to(plane.origin(), alpha=2.2)
        first = certify_alpha(f, Ball(plane.origin(), 1.0), seed=5)
        second = certify_alpha(f, Ball(plane.origin(), 1.0), seed=5)
        assert first.to_dict() == second.to_dict()


class TestBall:
    def test_contains(self, hyperbolic, rng):
        ball = Ball(hyperbolic.origin(), 0.7)
        assert all(ball.contains(ball.random_point(rng)) for _ in range(50))
        assert not ball.contains(hyperbolic.point([math.cosh(1.0), math.sinh(1.0), 0.0]))

    def test_validation(self, plane):
        with pytest.raises(TypeError):
            Ball([0.0, 0.0], 1.0)
        with pytest.raises(ValueError):
            Ball(plane.origin(), -1.0)


class Test_differential:
    def test_linear(self, linear, plane):
        p = plane.point([0.3, -0.2])
        v = plane.tangent(p, [1.0, 2.0])
        assert differential_along(linear, v, 0.0) == pytest.approx(11.0, abs=1e-9)

    def test_plane_squared_distance(self, plane):
        anchor = plane.point([1.0, 1.0])
        f = ScalarField.squared_distance_to(anchor)
        p = plane.point([0.0, 0.5])
        v = plane.tangent(p, [1.0, -1.0])
        # 2 <p - anchor, v>
        assert differential_along(f, v, 2.0) == pytest.approx(-1.0, abs=1e-9)

    def test_tip(self, linear, plane):
        p = plane.origin()
        assert differential_along(linear, plane.zero(p), 0.0) == 0.0

    def test_distance_at_anchor(self, hyperbolic):
        anchor = hyperbolic.origin()
        f = ScalarField.distance_to(anchor)
        for v in tangent_sample(hyperbolic, anchor, 1, 5):
            assert differential_along(f, v, 0.0) == pytest.approx(v.norm(), rel=1e-8)
            assert differential_along(f.negated(), v, 0.0) == pytest.approx(-v.norm(), rel=1e-8)

    def test_positive_homogeneity(self, hyperbolic_squared, hyperbolic):
        p = hyperbolic.origin()
        (v,) = tangent_sample(hyperbolic, p, 2, 1)
        once = differential_along(hyperbolic_squared, v, HYPERBOLIC_ALPHA)
        twice = differential_along(hyperbolic_squared, v * 2.0, HYPERBOLIC_ALPHA)
        assert twice == pytest.approx(2.0 * once, abs=1e-7)

    @settings(max_examples=30, deadline=None)
    @given(seed=seeds)
    def test_matches_finite_differences(self, seed):
        space = ModelSpace.hyperbolic(2)
        anchor = space.point([math.cosh(0.5), math.sinh(0.5), 0.0])
        f = ScalarField.squared_distance_to(anchor)
        rng = np.random.default_rng(seed)
        p = space.random_point(rng)
        v = space.random_unit_tangent(rng, p)
        h = 1e-5
        central = (f(space.exp(v * h)) - f(space.exp(v * -h))) / (2.0 * h)
        assert differential_along(f, v, HYPERBOLIC_ALPHA) == pytest.approx(central, abs=1e-4)

    @pytest.mark.slow
    @pytest.mark.parametrize("f, alpha", squared_distance_cases())
    def test_finite_differences_corpus(self, f, alpha):
        space = f.space
        rng = np.random.default_rng(300)
        h = 1e-5
        for _ in range(500):
            p = space.random_point(rng)
            v = space.random_unit_tangent(rng, p)
            central = (f(space.exp(v * h)) - f(space.exp(v * -h))) / (2.0 * h)
            assert differential_along(f, v, alpha) == pytest.approx(central, abs=1e-4)

    def test_wrong_modulus(self, plane):
        # |x|**2 is not (-4)-concave
        f = ScalarField.squared_distance_to(plane.origin())
        g = Geodesic(plane.point([0.5, 0.0]), plane.tangent(plane.point([0.5, 0.0]), [1.0, 0.0]))
        with pytest.raises(ConvergenceError):
            differential(f, g, -4.0)

    def test_not_a_geodesic(self, linear):
        with pytest.raises(TypeError):
            differential(linear, None, 0.0)
        with pytest.raises(TypeError):
            differential_along(linear, [1.0, 0.0], 0.0)


class Test_gradient:
    def test_linear(self, linear, plane):
        g = gradient(linear, plane.point([0.3, 0.4]), 0.0)
        np.testing.assert_allclose(g.vector, [3.0, 4.0], atol=1e-6)

    def test_closed_form(self, hyperbolic_squared, hyperbolic, rng):
        for _ in range(3):
            p = hyperbolic.random_point(rng)
            with warnings.catch_warnings():
                warnings.simplefilter("error", GradientMismatchWarning)
                g = gradient(hyperbolic_squared, p, HYPERBOLIC_ALPHA)
            closed_form = hyperbolic_squared.gradient_at(p)
            assert (g - closed_form).norm() <= 1e-5 * max(1.0, closed_form.norm())

    def test_defining_inequalities(self, hyperbolic_squared, hyperbolic):
        p = hyperbolic.point([math.cosh(0.8), 0.0, math.sinh(0.8)])
        g = gradient(hyperbolic_squared, p, HYPERBOLIC_ALPHA)
        # d_pf(grad) = |grad|**2 and d_pf(w) <= <grad, w>
        assert differential_along(hyperbolic_squared, g, HYPERBOLIC_ALPHA) == pytest.approx(
            g.norm() ** 2, abs=1e-6 * max(1.0, g.norm() ** 2)
        )
        for w in tangent_sample(hyperbolic, p, 3, 10):
            assert differential_along(hyperbolic_squared, w, HYPERBOLIC_ALPHA) <= g.inner(w) + 1e-6

    @pytest.mark.slow
    @pytest.mark.parametrize("f, alpha", squared_distance_cases())
    def test_defining_inequalities_corpus(self, f, alpha):
        space = f.space
        rng = np.random.default_rng(400)
        for k in range(4):
            p = space.random_point(rng)
            g = gradient(f, p, alpha)
            assert differential_along(f, g, alpha) == pytest.approx(g.norm() ** 2, abs=1e-6 * max(1.0, g.norm() ** 2))
            for w in tangent_sample(space, p, 410 + k, 50):
                assert differential_along(f, w, alpha) <= g.inner(w) + 1e-6

    def test_sphere(self, sphere):
        anchor = sphere.point([0.0, 1.0, 0.0])
        f = ScalarField.squared_distance_to(anchor)
        p = sphere.point([math.cos(0.6), math.sin(0.6), 0.0])
        g = gradient(f, p, 2.0)
        assert (g - f.gradient_at(p)).norm() <= 1e-5 * max(1.0, f.gradient_at(p).norm())

    def test_tip(self, hyperbolic):
        anchor = hyperbolic.origin()
        f = ScalarField.distance_to(anchor).negated()
        assert gradient(f, anchor, 0.0).is_tip

    def test_mismatch_warning(self, plane):
        f = ScalarField(
            plane,
            lambda p: float(p.coords[0]),
            closed_form_gradient=lambda p: plane.tangent(p, [0.0, 1.0]),
        )
        with pytest.warns(GradientMismatchWarning):
            g = gradient(f, plane.origin(), 0.0)
        np.testing.assert_allclose(g.vector, [1.0, 0.0], atol=1e-6)

    def test_max_unit_differential(self, linear, plane):
        d_sup, direction = max_unit_differential(linear, plane.origin(), 0.0)
        assert d_sup == pytest.approx(5.0, abs=1e-8)
        np.testing.assert_allclose(direction.vector, [0.6, 0.8], atol=1e-6)

    def test_one_dimensional(self):
        line = ModelSpace.euclidean(1)
        f = ScalarField.linear(line, [-2.0])
        np.testing.assert_allclose(gradient(f, line.point([1.0]), 0.0).vector, [-2.0], atol=1e-8)

    def test_finite_metric(self, square_matrix, linear):
        from alexgeo import DistanceMatrixReader

        space = DistanceMatrixReader(square_matrix).read()
        with pytest.raises(TypeError):
            gradient(linear, space.point(0), 0.0)

    def test_not_a_point(self, linear):
        with pytest.raises(TypeError):
            gradient(linear, [0.0, 0.0], 0.0)


class Test_direction_sup_inequality_check:
    def test_linear(self, linear, plane):
        p = plane.point([0.1, 0.2])
        for u, v in zip(tangent_sample(plane, p, 4, 5), tangent_sample(plane, p, 5, 5)):
            result = direction_sup_inequality_check(linear, p, u, v, 0.0)
            assert result.passed
            assert result.value <= 1e-6
            assert result.details["d_sup"] == pytest.approx(5.0, abs=1e-8)

    def test_hyperbolic(self, hyperbolic_squared, hyperbolic):
        p = hyperbolic.origin()
        for u, v in zip(tangent_sample(hyperbolic, p, 6, 3), tangent_sample(hyperbolic, p, 7, 3)):
            assert direction_sup_inequality_check(hyperbolic_squared, p, u, v, HYPERBOLIC_ALPHA).passed

    @pytest.mark.slow
    @pytest.mark.parametrize("f, alpha", squared_distance_cases())
    def test_corpus(self, f, alpha):
        space = f.space
        rng = np.random.default_rng(500)
        for k in range(10):
            p = space.random_point(rng)
            for u, v in zip(tangent_sample(space, p, 510 + k, 10), tangent_sample(space, p, 530 + k, 10)):
                assert direction_sup_inequality_check(f, p, u, v, alpha).passed

    def test_opposite_vectors(self, linear, plane):
        p = plane.origin()
        u = plane.tangent(p, [1.0, 0.0])
        result = direction_sup_inequality_check(linear, p, u, -u, 0.0)
        assert result.passed
        assert result.value == -math.inf

    def test_one_tip(self, linear, plane):
        p = plane.origin()
        u = plane.tangent(p, [0.6, 0.8])
        result = direction_sup_inequality_check(linear, p, u, plane.zero(p), 0.0)
        # equality: d_pf(u) / |u| = d_sup
        assert result.passed
        assert result.value == pytest.approx(0.0, abs=1e-8)

    def test_tips(self, linear, plane):
        p = plane.origin()
        with pytest.raises(ValueError):
            direction_sup_inequality_check(linear, p, plane.zero(p), plane.zero(p), 0.0)

    def test_base_point(self, linear, plane):
        p, q = plane.origin(), plane.point([1.0, 0.0])
        with pytest.raises(SpaceMismatchError):
            direction_sup_inequality_check(linear, p, plane.tangent(q, [1.0, 0.0]), plane.tangent(p, [0.0, 1.0]), 0.0)


class Test_estimate_lipschitz:
    def test_linear(self, linear, plane):
        estimate = estimate_lipschitz(linear, plane.origin(), 1.0)
        assert 4.5 <= estimate <= 5.0 + 1e-9

    def test_distance(self, hyperbolic):
        f = ScalarField.distance_to(hyperbolic.origin())
        assert estimate_lipschitz(f, hyperbolic.origin(), 1.0) <= 1.0 + 1e-9

    def test_constant(self, sphere):
        f = ScalarField.constant(sphere, 3.0)
        assert estimate_lipschitz(f, sphere.origin(), 0.5) == 0.0

    def test_deterministic(self, linear, plane):
        assert estimate_lipschitz(linear, plane.origin(), 1.0, seed=2) == estimate_lipschitz(
            linear, plane.origin(), 1.0, seed=2
        )
