#!python
# coding: utf-8

"""
Semiconcave calculus on model spaces.

Certification of geodesic alpha-convexity/concavity claims, differentials d_pf as the supremum of the
difference quotients corrected by the concavity modulus, gradients by global maximisation of d_pf over unit
directions, the direction-sup inequality and sampled Lipschitz constants.
"""

import logging
import math
import warnings
from dataclasses import dataclass
from typing import Optional, Tuple
import numpy as np
from scipy.optimize import minimize_scalar
from scipy.special import ndtri
from scipy.stats import qmc
from .constants import (
    CERTIFY_BUDGET,
    CERTIFY_LEVELS,
    CERTIFY_SLACK,
    CONCAVE,
    CONVEX,
    DIFFERENTIAL_LEVELS,
    DIFFERENTIAL_RTOL,
    DIFFERENTIAL_TAU,
    DIRECTION_SUP_TOL,
    FAIL,
    GRADIENT_CROSSCHECK_TOL,
    GRADIENT_MULTISTART,
    GRADIENT_SWEEPS,
    GRADIENT_XATOL,
    MODES,
    PASS,
    SPHERE,
    SUP_MONOTONE_SLACK,
)
from .exceptions import (
    ConvergenceError,
    GradientMismatchWarning,
    SafeZoneError,
    SpaceMismatchError,
)
from .geodesic import Geodesic
from .numerics import richardson_extrapolate
from .point import Point
from .results import CheckResult
from .tangentvector import TangentVector


LOGGER = logging.getLogger(__name__)

warnings.simplefilter("always", GradientMismatchWarning)  # report every mismatching point

_EXTRAPOLATION_WINDOW = 6


#################
# Certification
#################


@dataclass(frozen=True)
class Ball:
    """
    Closed geodesic ball B(center, radius) of a model space.

    Attributes
    ----------
    center : Point
    radius : float
    """

    center: Point
    radius: float

    def __post_init__(self):
        if not isinstance(self.center, Point):
            raise TypeError("center must be a Point")
        if not self.center.space.supports_geodesics:
            raise TypeError("balls need a model space")
        if not self.radius >= 0:
            raise ValueError("radius must be non-negative")

    @property
    def space(self):
        """return space."""
        return self.center.space

    def contains(self, p, slack=1e-12):
        """True if d(center, p) <= radius (+ slack)."""
        return self.space.distance(self.center, p) <= self.radius + slack

    def random_point(self, rng):
        """Random point of the ball (see ModelSpace.random_point)."""
        return self.space.random_point(rng, self.center, self.radius)


@dataclass(frozen=True)
class Witness:
    """
    Geodesic and parameter triple (t1, (t1 + t2)/2, t2) on which midpoint convexity fails.

    Attributes
    ----------
    geodesic : Geodesic
    t_triple : (float, float, float)
    defect : float
        Amount by which the midpoint inequality fails (> slack).
    """

    geodesic: Geodesic
    t_triple: Tuple[float, float, float]
    defect: float

    def to_dict(self):
        """return JSON friendly dictionary."""
        return {
            "start": self.geodesic.base.tolist(),
            "end": self.geodesic.endpoint.tolist(),
            "t_triple": list(self.t_triple),
            "defect": self.defect,
        }


@dataclass(frozen=True)
class CertificationResult:
    """
    Outcome of certify_alpha.

    Attributes
    ----------
    certified : bool
        True if no sampled triple failed (Certified), False otherwise (Refuted).
    alpha : float
        Modulus tested.
    mode : 'convex' or 'concave'
    geodesics_checked : int
    max_defect : float
        Largest midpoint defect met (negative when every inequality holds strictly).
    witness : Witness or None
        First failing geodesic and triple, for refuted claims.
    """

    certified: bool
    alpha: float
    mode: str
    geodesics_checked: int
    max_defect: float
    witness: Optional[Witness] = None

    @property
    def status(self):
        """return 'Certified' or 'Refuted'."""
        return "Certified" if self.certified else "Refuted"

    def to_dict(self):
        """return JSON friendly dictionary."""
        return {
            "status": self.status,
            "alpha": self.alpha,
            "mode": self.mode,
            "geodesics_checked": self.geodesics_checked,
            "max_defect": self.max_defect,
            "witness": None if self.witness is None else self.witness.to_dict(),
        }


def certify_alpha(f, region, alpha=None, mode=None, budget=CERTIFY_BUDGET, seed=0, levels=CERTIFY_LEVELS):
    """
    Checks that f is geodesically alpha-convex (or alpha-concave) on a ball.

    For budget random geodesics gamma with end points in the ball,
    g(t) = f(gamma(t)) - (alpha/2) d(gamma(0), gamma(t))**2 is sampled on the dyadic grid t = j / 2**levels and
    midpoint convexity g(mid) <= (g(t1) + g(t2))/2 + 1e-9 is tested on every triple (t1, (t1 + t2)/2, t2) of the grid
    (reversed inequality in concave mode).

    Parameters
    ----------
    f : ScalarField
        Field to certify.
    region : Ball
        Region of the end points.
    alpha : float, optional
        Modulus. Defaults to f.alpha_claim.
    mode : 'convex' or 'concave', optional
        Defaults to f.mode.
    budget : int, optional
        Number of sampled geodesics. Defaults to 32.
    seed : int, optional
        Seed of the sampler. Defaults to 0.
    levels : int, optional
        Depth of the dyadic grid. Defaults to 5.

    Returns
    -------
    CertificationResult

    Raises
    ------
    SafeZoneError
        On spheres, if the radius of the ball is not smaller than D_kappa / 2.
    SpaceMismatchError
        If the region and f live on different spaces.
    """
    if not isinstance(region, Ball):
        raise TypeError("region must be a Ball")
    space = region.space
    if space != f.space:
        raise SpaceMismatchError("region and field belong to different spaces")
    if space.kind == SPHERE and not region.radius < space.diameter / 2.0:
        raise SafeZoneError("ball radius must be smaller than D_kappa / 2 on spheres")
    alpha = f.alpha_claim if alpha is None else float(alpha)
    mode = f.mode if mode is None else mode
    if mode not in MODES:
        raise TypeError("mode must be one of: %s" % ", ".join(MODES))
    sign = 1.0 if mode == CONVEX else -1.0

    rng = np.random.default_rng(seed)
    count = 2**levels
    grid = np.linspace(0.0, 1.0, count + 1)
    max_defect = -math.inf
    checked = 0
    for _ in range(budget):
        a, b = region.random_point(rng), region.random_point(rng)
        if a == b:
            continue
        geodesic = Geodesic.between(a, b)
        length = geodesic.length
        values = np.array(
            [f(geodesic.point_at(t)) - 0.5 * alpha * (t * length) ** 2 for t in grid]
        )
        checked += 1
        h = 1
        while 2 * h <= count:
            defects = sign * (values[h:count - h + 1] - 0.5 * (values[: count - 2 * h + 1] + values[2 * h :]))
            worst = int(np.argmax(defects))
            max_defect = max(max_defect, float(defects[worst]))
            failing = np.flatnonzero(defects > CERTIFY_SLACK)
            if failing.size:
                i = int(failing[0])
                witness = Witness(geodesic, (grid[i], grid[i + h], grid[i + 2 * h]), float(defects[i]))
                LOGGER.info("alpha = %r (%s) refuted with defect %r", alpha, mode, witness.defect)
                return CertificationResult(False, alpha, mode, checked, max_defect, witness)
            h *= 2
    LOGGER.debug("alpha = %r (%s) certified on %d geodesics", alpha, mode, checked)
    return CertificationResult(True, alpha, mode, checked, max_defect)


###############
# Differentials
###############


def differential(f, g, alpha_concave, levels=DIFFERENTIAL_LEVELS, rtol=DIFFERENTIAL_RTOL):
    """
    d_pf(gamma') for p = gamma(0), f alpha-concave near p.

    The difference quotients q(t) = (f(gamma(t)) - f(p))/t - (alpha t/2)|gamma'|**2 increase as t decreases, so
    their supremum is their limit at 0. q is sampled at t = tau * 2**-k, k = 0..levels; the limit is Richardson
    extrapolated over the last samples and returned once two extrapolants agree within rtol. The running supremum
    bounds the limit from below.

    Parameters
    ----------
    f : ScalarField
        alpha-concave field.
    g : Geodesic
        Geodesic issued from p.
    alpha_concave : float
        Concavity modulus alpha of f.
    levels : int, optional
        Number of halvings of tau. Defaults to 20.
    rtol : float, optional
        Stabilisation tolerance. Defaults to 1e-8.

    Returns
    -------
    float

    Raises
    ------
    ConvergenceError
        If the estimate does not stabilise, or falls below the running supremum (f is not alpha-concave along g).
    """
    if not isinstance(g, Geodesic):
        raise TypeError("g must be a Geodesic")
    speed_squared = g.speed**2
    if speed_squared == 0.0:
        return 0.0
    f_p = f(g.base)
    values = []
    running_sup = -math.inf
    previous = None
    for k in range(levels + 1):
        t = g.tau / 2.0**k
        q = (f(g.point_at(t)) - f_p) / t - 0.5 * alpha_concave * t * speed_squared
        running_sup = max(running_sup, q)
        values.append(q)
        estimate = richardson_extrapolate(values[-_EXTRAPOLATION_WINDOW:], 1)
        if previous is not None and k >= 2 and abs(estimate - previous) <= rtol * max(1.0, abs(estimate)):
            break
        previous = estimate
    else:
        raise ConvergenceError("differential did not stabilise after %d halvings" % levels)

    if estimate < running_sup - SUP_MONOTONE_SLACK * max(1.0, abs(running_sup)):
        raise ConvergenceError(
            "difference quotients exceed their limit (%r > %r): the field is not %r-concave along this geodesic"
            % (running_sup, estimate, alpha_concave)
        )
    LOGGER.debug("differential %r after %d halvings", estimate, k)
    return max(estimate, running_sup)


def differential_along(f, v, alpha_concave, tau=None, **kwargs):
    """
    d_pf(v) for a tangent vector v at p, through the geodesic t -> exp_p(t v).

    Parameters
    ----------
    f : ScalarField
    v : TangentVector
    alpha_concave : float
    tau : float, optional
        Domain of the probing geodesic. Defaults to min(1, 0.5 / |v|) (geodesic of length at most 0.5).

    Returns
    -------
    float
        0 for the tip.
    """
    if not isinstance(v, TangentVector):
        raise TypeError("v must be a TangentVector")
    speed = v.norm()
    if speed == 0.0:
        return 0.0
    if tau is None:
        tau = min(1.0, DIFFERENTIAL_TAU / speed)
    return differential(f, Geodesic(v.base, v, tau), alpha_concave, **kwargs)


###########
# Gradients
###########


def _start_directions(dim, count, seed):
    """Unit coefficient vectors: the +- frame plus count scrambled Halton points mapped to the sphere."""
    directions = list(np.eye(dim)) + list(-np.eye(dim))
    if dim > 1 and count > 0:
        sample = qmc.Halton(d=dim, scramble=True, seed=seed).random(count)
        gaussian = ndtri(np.clip(sample, 1e-12, 1.0 - 1e-12))
        norms = np.linalg.norm(gaussian, axis=1)
        directions.extend(gaussian[norms > 0] / norms[norms > 0, np.newaxis])
    return directions


def max_unit_differential(f, p, alpha_concave, search_budget=GRADIENT_MULTISTART, seed=0):
    """
    sup of d_pf(w) over unit tangent vectors w at p, with a maximising direction.

    Multistart over the +- coordinate frame and search_budget low-discrepancy directions, followed by
    golden-section/Brent refinement along great circles of the unit tangent sphere, sweep after sweep, and a
    final polish with the direction of sum_i (d_pf(e_i) - d_pf(-e_i))/2 e_i (exact when d_pf is linear).

    Parameters
    ----------
    f : ScalarField
    p : Point
        Point of a model space.
    alpha_concave : float
        Concavity modulus of f near p.
    search_budget : int, optional
        Number of multistart directions. Defaults to 32.
    seed : int, optional
        Seed of the multistart directions. Defaults to 0.

    Returns
    -------
    (float, TangentVector)
        d_sup and a unit maximiser.

    Raises
    ------
    ConvergenceError
        If the refinement sweeps do not settle.
    """
    space = p.space
    basis = np.stack([b.vector for b in space.tangent_basis(p)])
    dim = basis.shape[0]
    cache = {}

    def d_pf(c):
        key = tuple(np.round(c, 15))
        if key not in cache:
            cache[key] = differential_along(f, TangentVector(p, c @ basis, check=False), alpha_concave)
        return cache[key]

    candidates = _start_directions(dim, search_budget, seed)
    values = [d_pf(c) for c in candidates]
    best = int(np.argmax(values))
    direction, best_value = np.array(candidates[best]), values[best]

    if dim > 1:
        identity = np.eye(dim)
        for sweep in range(GRADIENT_SWEEPS):
            start_value = best_value
            for e in identity:
                e = e - (e @ direction) * direction
                n = np.linalg.norm(e)
                if n < 1e-8:
                    continue
                e = e / n
                along = direction

                def objective(theta):
                    return -d_pf(math.cos(theta) * along + math.sin(theta) * e)

                result = minimize_scalar(
                    objective, bounds=(-math.pi / 2, math.pi / 2), method="bounded", options={"xatol": GRADIENT_XATOL}
                )
                if -result.fun > best_value:
                    best_value = -result.fun
                    direction = math.cos(result.x) * along + math.sin(result.x) * e
                    direction = direction / np.linalg.norm(direction)
            improvement = best_value - start_value
            LOGGER.debug("direction search sweep %d: d_sup %r (+%r)", sweep, best_value, improvement)
            if improvement <= 1e-12 * max(1.0, abs(best_value)):
                break
        else:
            if improvement > 1e-8 * max(1.0, abs(best_value)):
                raise ConvergenceError("direction search did not settle after %d sweeps" % GRADIENT_SWEEPS)

        linear = np.array([0.5 * (d_pf(e) - d_pf(-e)) for e in identity])
        norm_linear = np.linalg.norm(linear)
        if norm_linear > 0:
            polished = linear / norm_linear
            polished_value = d_pf(polished)
            if polished_value >= best_value - 1e-9 * max(1.0, abs(best_value)):
                direction, best_value = polished, polished_value

    return best_value, TangentVector(p, direction @ basis, check=False)


def gradient(f, p, alpha_concave, search_budget=GRADIENT_MULTISTART, seed=0, crosscheck_tol=GRADIENT_CROSSCHECK_TOL):
    """
    Gradient of an alpha-concave field: d_sup * w for the maximising unit direction w, or the tip 0_p when
    d_sup <= 0.

    When f has a closed-form gradient the result is compared with it and a GradientMismatchWarning is issued if
    they differ by more than crosscheck_tol * max(1, |closed form|).

    Parameters
    ----------
    f : ScalarField
    p : Point
        Point of a model space.
    alpha_concave : float
        Concavity modulus of f near p.
    search_budget : int, optional
        Number of multistart directions. Defaults to 32.
    seed : int, optional
        Seed of the direction search. Defaults to 0.
    crosscheck_tol : float, optional
        Cross-check tolerance. Defaults to 1e-5.

    Returns
    -------
    TangentVector
    """
    if not isinstance(p, Point):
        raise TypeError("p must be a Point")
    if not p.space.supports_geodesics:
        raise TypeError("gradients need a model space")
    d_sup, direction = max_unit_differential(f, p, alpha_concave, search_budget, seed)
    result = p.space.zero(p) if d_sup <= 0 else direction * d_sup

    closed_form = f.gradient_at(p)
    if closed_form is not None:
        mismatch = (result - closed_form).norm()
        if mismatch > crosscheck_tol * max(1.0, closed_form.norm()):
            warnings.warn(
                "numeric gradient of %s differs from its closed form by %r" % (f.name, mismatch),
                GradientMismatchWarning,
            )
    return result


def direction_sup_inequality_check(
    f, p, u, v, alpha_concave, search_budget=GRADIENT_MULTISTART, seed=0, tol=DIRECTION_SUP_TOL
):
    """
    Checks sup_{|w| = 1} d_pf(w) >= (d_pf(u) + d_pf(v)) / sqrt(|u|**2 + 2 <u, v> + |v|**2).

    Parameters
    ----------
    f : ScalarField
    p : Point
    u, v : TangentVector
        Vectors at p, not both tips.
    alpha_concave : float
        Concavity modulus of f near p.
    search_budget : int, optional
        Number of multistart directions. Defaults to 32.
    seed : int, optional
        Seed of the direction search. Defaults to 0.
    tol : float, optional
        Slack. Defaults to 1e-6.

    Returns
    -------
    CheckResult
        'pass' iff the left side >= the right side - tol; value = right side - left side.
    """
    if u.is_tip and v.is_tip:
        raise ValueError("u and v cannot both be the tip")
    if u.base != p or v.base != p:
        raise SpaceMismatchError("u and v must be based at p")
    d_sup, _ = max_unit_differential(f, p, alpha_concave, search_budget, seed)
    numerator = differential_along(f, u, alpha_concave) + differential_along(f, v, alpha_concave)
    denominator = math.sqrt(max(u.norm() ** 2 + 2.0 * u.inner(v) + v.norm() ** 2, 0.0))
    details = {"d_sup": d_sup, "numerator": numerator, "denominator": denominator}
    if denominator == 0.0:
        # u = -v: the right side is -inf unless the numerator is positive
        status = PASS if numerator <= tol else FAIL
        return CheckResult(status, -math.inf if status == PASS else math.inf, details)
    gap = numerator / denominator - d_sup
    return CheckResult(PASS if gap <= tol else FAIL, gap, details)


#############
# Lipschitz
#############


def estimate_lipschitz(f, center, radius, samples=64, seed=0):
    """
    Sampled local Lipschitz constant: max |f(a) - f(b)| / d(a, b) over random pairs of B(center, radius).

    A lower bound of the smallest Lipschitz constant on the ball.

    Returns
    -------
    float
    """
    ball = Ball(center, radius)
    rng = np.random.default_rng(seed)
    space = center.space
    estimate = 0.0
    for _ in range(samples):
        a, b = ball.random_point(rng), ball.random_point(rng)
        d = space.distance(a, b)
        if d > 0:
            estimate = max(estimate, abs(f(a) - f(b)) / d)
    return estimate
