#!python
# coding: utf-8

"""
Comparison geometry against the kappa-plane M2_kappa.

Trigonometric functions of the model plane, comparison angles and triangles, the 4-point condition, the side
comparison test and a bisection estimator of the largest lower curvature bound of a sample.
"""

import itertools
import logging
import math
from dataclasses import dataclass, field
from typing import List, Optional, Tuple
import numpy as np
from .constants import (
    ANGLE_SUM_TOL,
    BISECTION_RESOLUTION,
    EXHAUSTIVE_BELOW,
    FAIL,
    INCONCLUSIVE,
    MAX_REPORTED_VIOLATIONS,
    PASS,
    QUADRUPLE_BUDGET,
    SIDE_COMPARISON_TOL,
    TWO_PI,
)
from .exceptions import (
    DegenerateTriangleError,
    InconclusiveAuditError,
    SpaceMismatchError,
)
from .geodesic import Geodesic
from .modelspace import ModelSpace
from .point import Point
from .results import CheckResult


LOGGER = logging.getLogger(__name__)


##########################
# Model plane trigonometry
##########################


def s_kappa(kappa, r):
    """
    s_kappa(r): sin(r sqrt(k))/sqrt(k) for k > 0, sinh(r sqrt(-k))/sqrt(-k) for k < 0 and r for k = 0.

    Parameters
    ----------
    kappa : float
        Curvature.
    r : float or numpy.ndarray
        Non-negative radius.

    Returns
    -------
    float or numpy.ndarray
    """
    kappa = float(kappa)
    if kappa > 0:
        root = math.sqrt(kappa)
        return np.sin(np.multiply(r, root)) / root
    if kappa < 0:
        root = math.sqrt(-kappa)
        return np.sinh(np.multiply(r, root)) / root
    return np.multiply(r, 1.0)


def c_kappa(kappa, r):
    """
    c_kappa(r) = s_kappa'(r): cos(r sqrt(k)), cosh(r sqrt(-k)) or 1.

    Parameters
    ----------
    kappa : float
        Curvature.
    r : float or numpy.ndarray
        Non-negative radius.

    Returns
    -------
    float or numpy.ndarray
    """
    kappa = float(kappa)
    if kappa > 0:
        return np.cos(np.multiply(r, math.sqrt(kappa)))
    if kappa < 0:
        return np.cosh(np.multiply(r, math.sqrt(-kappa)))
    return np.ones_like(np.multiply(r, 1.0))


def versine_kappa(kappa, r):
    """
    md_kappa(r) = (1 - c_kappa(r)) / kappa, continuously extended by r**2 / 2 at kappa = 0.

    Parameters
    ----------
    kappa : float
        Curvature.
    r : float or numpy.ndarray
        Non-negative radius.

    Returns
    -------
    float or numpy.ndarray
    """
    kappa = float(kappa)
    if kappa > 0:
        return 2.0 * np.sin(np.multiply(r, 0.5 * math.sqrt(kappa))) ** 2 / kappa
    if kappa < 0:
        return 2.0 * np.sinh(np.multiply(r, 0.5 * math.sqrt(-kappa))) ** 2 / -kappa
    return 0.5 * np.square(r)


def model_diameter(kappa):
    """D_kappa: pi/sqrt(kappa) for kappa > 0, inf otherwise."""
    return math.pi / math.sqrt(kappa) if kappa > 0 else math.inf


def comparison_cosine(kappa, dpx, dpy, dxy):
    """
    Cosine of the comparison angle, by the law of cosines (kappa = 0) or
    (c(dxy) - c(dpx) c(dpy)) / (kappa s(dpx) s(dpy)) (kappa != 0), clamped to [-1, 1].

    Parameters
    ----------
    kappa : float
        Curvature.
    dpx, dpy, dxy : float
        Side lengths, dpx and dpy > 0.

    Returns
    -------
    float
    """
    if kappa == 0:
        cosine = (dpx**2 + dpy**2 - dxy**2) / (2.0 * dpx * dpy)
    else:
        cosine = (c_kappa(kappa, dxy) - c_kappa(kappa, dpx) * c_kappa(kappa, dpy)) / (
            kappa * s_kappa(kappa, dpx) * s_kappa(kappa, dpy)
        )
    return float(min(1.0, max(-1.0, cosine)))


def _half_angle(kappa, a, b, c):
    """
    Angle opposite to c in the model triangle of sides a, b, c (vectorised).

    Half-angle form of the comparison cosine:
    sin^2(C/2) s(a) s(b) = s((c+a-b)/2) s((c-a+b)/2), cos^2(C/2) s(a) s(b) = s((a+b+c)/2) s((a+b-c)/2).
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    c = np.asarray(c, dtype=float)
    hi = np.maximum(a, b)
    lo = np.minimum(a, b)
    sine_part = s_kappa(kappa, 0.5 * (c - (hi - lo))) * s_kappa(kappa, 0.5 * (c + (hi - lo)))
    cosine_part = s_kappa(kappa, 0.5 * (hi + (lo + c))) * s_kappa(kappa, 0.5 * (lo + (hi - c)))
    return 2.0 * np.arctan2(np.sqrt(np.maximum(sine_part, 0.0)), np.sqrt(np.maximum(cosine_part, 0.0)))


def comparison_angle(kappa, dpx, dpy, dxy):
    """
    Comparison angle at p of the triangle {p, x, y} with the given side lengths, in M2_kappa.

    Parameters
    ----------
    kappa : float
        Curvature.
    dpx, dpy : float
        Distances from p to x and y (> 0).
    dxy : float
        Distance from x to y.

    Returns
    -------
    float or None
        Angle in [0, pi], or None (undefined) when the perimeter is at least 2 D_kappa.

    Raises
    ------
    DegenerateTriangleError
        If dpx or dpy is not positive, or the sides violate the triangle inequality.
    """
    dpx, dpy, dxy = float(dpx), float(dpy), float(dxy)
    if not (dpx > 0 and dpy > 0):
        raise DegenerateTriangleError("sides adjacent to the apex must be positive")
    _check_triangle_inequality(dpx, dpy, dxy)
    if dpx + dpy + dxy >= 2.0 * model_diameter(kappa):
        return None
    return float(_half_angle(kappa, dpx, dpy, dxy))


def _check_triangle_inequality(a, b, c):
    slack = 1e-12 * max(1.0, a, b, c)
    if a < 0 or b < 0 or c < 0:
        raise DegenerateTriangleError("side lengths must be non-negative")
    if a > b + c + slack or b > a + c + slack or c > a + b + slack:
        raise DegenerateTriangleError("sides (%r, %r, %r) violate the triangle inequality" % (a, b, c))


########################
# Comparison triangles
########################


@dataclass(frozen=True)
class ComparisonTriangle:
    """
    Comparison triangle {p, x, y} in M2_kappa.

    Attributes
    ----------
    kappa : float
        Curvature of the model plane.
    sides : (float, float, float)
        (d(p, x), d(p, y), d(x, y)).
    vertices : (Point, Point, Point)
        (p, x, y) in the model plane.
    plane : ModelSpace
        The model plane M2_kappa.
    """

    kappa: float
    sides: Tuple[float, float, float]
    vertices: Tuple[Point, Point, Point]
    plane: ModelSpace = field(compare=False)

    @property
    def perimeter(self):
        """return perimeter."""
        return sum(self.sides)

    def measured_sides(self):
        """
        Pairwise distances of the vertices.

        Returns
        -------
        (float, float, float)
        """
        p, x, y = self.vertices
        return (self.plane.distance(p, x), self.plane.distance(p, y), self.plane.distance(x, y))

    def side_geodesics(self):
        """
        Geodesics [0, 1] -> M2_kappa from the p-vertex to the x- and y-vertices.

        Returns
        -------
        (Geodesic, Geodesic)
        """
        p, x, y = self.vertices
        return Geodesic.between(p, x), Geodesic.between(p, y)


def build_comparison_triangle(kappa, sides):
    """
    Comparison triangle in M2_kappa with the given side lengths.

    The p-vertex is the origin of the model plane, the x-vertex lies on the first tangent axis and the y-vertex
    on the geodesic leaving p with the comparison angle.

    Parameters
    ----------
    kappa : float
        Curvature.
    sides : (float, float, float)
        (d(p, x), d(p, y), d(x, y)).

    Returns
    -------
    ComparisonTriangle

    Raises
    ------
    DegenerateTriangleError
        If the sides violate the triangle inequality or the perimeter is at least 2 D_kappa.
    """
    try:
        dpx, dpy, dxy = (float(s) for s in sides)
    except (TypeError, ValueError) as exc:
        raise TypeError("sides must be three numbers") from exc
    _check_triangle_inequality(dpx, dpy, dxy)
    if dpx + dpy + dxy >= 2.0 * model_diameter(kappa):
        raise DegenerateTriangleError("perimeter must be smaller than 2 D_kappa")

    plane = ModelSpace.model_plane(kappa)
    p = plane.origin()
    e1, e2 = plane.tangent_basis(p)
    angle = float(_half_angle(kappa, dpx, dpy, dxy)) if dpx > 0 and dpy > 0 else 0.0
    x = plane.exp(e1 * dpx)
    y = plane.exp((e1 * math.cos(angle) + e2 * math.sin(angle)) * dpy)
    triangle = ComparisonTriangle(float(kappa), (dpx, dpy, dxy), (p, x, y), plane)
    LOGGER.debug("comparison triangle %r: measured sides %r", triangle.sides, triangle.measured_sides())
    return triangle


#######################
# Curvature conditions
#######################


def four_point_check(kappa, p, x, y, z):
    """
    4-point condition at the apex p: the three comparison angles at p sum to at most 2*pi.

    Parameters
    ----------
    kappa : float
        Curvature to test.
    p, x, y, z : Point
        Points of the same space, p distinct from x, y and z.

    Returns
    -------
    CheckResult
        'pass' when the sum is at most 2*pi + 1e-9, 'fail' otherwise, with value = sum - 2*pi;
        'inconclusive' when any comparison angle is undefined.

    Raises
    ------
    DegenerateTriangleError
        If p coincides with x, y or z.
    SpaceMismatchError
        If the points belong to different spaces.
    """
    space = p.space
    for q in (x, y, z):
        if q.space != space:
            raise SpaceMismatchError("points belong to different spaces")
    dpx, dpy, dpz = space.distance(p, x), space.distance(p, y), space.distance(p, z)
    if min(dpx, dpy, dpz) <= 0:
        raise DegenerateTriangleError("the apex must differ from x, y and z")
    angles = (
        comparison_angle(kappa, dpx, dpy, space.distance(x, y)),
        comparison_angle(kappa, dpx, dpz, space.distance(x, z)),
        comparison_angle(kappa, dpy, dpz, space.distance(y, z)),
    )
    if any(angle is None for angle in angles):
        return CheckResult(INCONCLUSIVE, None, {"angles": angles})
    angle_sum = sum(angles)
    excess = angle_sum - TWO_PI
    status = PASS if excess <= ANGLE_SUM_TOL else FAIL
    return CheckResult(status, excess, {"angles": angles, "angle_sum": angle_sum})


def side_comparison_check(kappa, p, x, y, s, t):
    """
    Side comparison: d(gamma_x(s), gamma_y(t)) >= d_kappa(bar gamma_x(s), bar gamma_y(t)) for the geodesics from p
    to x and y and their counterparts in the comparison triangle.

    Parameters
    ----------
    kappa : float
        Curvature to test.
    p, x, y : Point
        Points of a model space, p distinct from x and y.
    s, t : float
        Parameters in [0, 1].

    Returns
    -------
    CheckResult
        'pass' iff d >= d_kappa - 1e-9, with value = d_kappa - d (the deficit).

    Raises
    ------
    TypeError
        If the space has no geodesics (finite metric spaces).
    DegenerateTriangleError
        If p coincides with x or y, or the perimeter is at least 2 D_kappa.
    """
    space = p.space
    if not space.supports_geodesics:
        raise TypeError("side comparison needs geodesics (not available on finite metric spaces)")
    for q in (x, y):
        if q.space != space:
            raise SpaceMismatchError("points belong to different spaces")
    if not (0.0 <= s <= 1.0 and 0.0 <= t <= 1.0):
        raise ValueError("s and t must be in [0, 1]")
    sides = (space.distance(p, x), space.distance(p, y), space.distance(x, y))
    if min(sides[0], sides[1]) <= 0:
        raise DegenerateTriangleError("p must differ from x and y")
    triangle = build_comparison_triangle(kappa, sides)
    bar_gamma_x, bar_gamma_y = triangle.side_geodesics()
    gamma_x, gamma_y = Geodesic.between(p, x), Geodesic.between(p, y)

    d = space.distance(gamma_x.point_at(s), gamma_y.point_at(t))
    d_kappa = triangle.plane.distance(bar_gamma_x.point_at(s), bar_gamma_y.point_at(t))
    deficit = d_kappa - d
    status = PASS if deficit <= SIDE_COMPARISON_TOL else FAIL
    return CheckResult(status, deficit, {"distance": d, "model_distance": d_kappa})


#########################
# Curvature bound audit
#########################


@dataclass
class CurvatureAuditReport:
    """
    Result of estimate_curvature_lower_bound.

    Attributes
    ----------
    kappa_tested : float
        Curvature at which the reported violations were recorded (smallest failing candidate), or the upper end
        of the range when every candidate passed.
    quadruples_checked : int
        Number of (apex, triple) quadruples checked per candidate.
    violations : list of ((int, int, int, int), float, float)
        (indices (p, x, y, z), angle sum, excess over 2*pi) at kappa_tested, in canonical index order.
    kappa_max_estimate : float or None
        Largest candidate with no violation, None when the condition already fails at the lower end of the range.
    quadruples_inconclusive : int
        Quadruples with an undefined angle at kappa_tested.
    trace : list of (float, int)
        (candidate kappa, number of violations) in bisection order.
    """

    kappa_tested: float
    quadruples_checked: int
    violations: List[Tuple[Tuple[int, int, int, int], float, float]]
    kappa_max_estimate: Optional[float]
    quadruples_inconclusive: int = 0
    trace: List[Tuple[float, int]] = field(default_factory=list)

    def to_dict(self):
        """
        JSON friendly dictionary.

        Returns
        -------
        dict
        """
        return {
            "kappa_tested": self.kappa_tested,
            "quadruples_checked": self.quadruples_checked,
            "violations": [
                {"quadruple": list(indices), "angle_sum": angle_sum, "excess": excess}
                for indices, angle_sum, excess in self.violations
            ],
            "kappa_max_estimate": self.kappa_max_estimate,
            "quadruples_inconclusive": self.quadruples_inconclusive,
            "trace": [{"kappa": kappa, "violations": count} for kappa, count in self.trace],
        }


def _quadruples(n, budget, seed):
    """(apex, x, y, z) index rows: exhaustive for small samples, seeded random subset otherwise."""
    if n < EXHAUSTIVE_BELOW:
        rows = [
            (p,) + triple
            for p in range(n)
            for triple in itertools.combinations([i for i in range(n) if i != p], 3)
        ]
        return np.array(rows, dtype=int)
    rng = np.random.default_rng(seed)
    apex = rng.integers(0, n, size=budget)
    others = np.argsort(rng.random((budget, n - 1)), axis=1)[:, :3]
    others = np.sort(others + (others >= apex[:, np.newaxis]), axis=1)
    rows = np.column_stack([apex, others])
    return np.unique(rows, axis=0)


def _angle_sums(kappa, dmatrix, quads):
    """Angle sums at the apex and mask of quadruples whose three angles are defined."""
    p, x, y, z = quads.T
    dpx, dpy, dpz = dmatrix[p, x], dmatrix[p, y], dmatrix[p, z]
    dxy, dxz, dyz = dmatrix[x, y], dmatrix[x, z], dmatrix[y, z]
    limit = 2.0 * model_diameter(kappa)
    defined = (
        (dpx + dpy + dxy < limit)
        & (dpx + dpz + dxz < limit)
        & (dpy + dpz + dyz < limit)
        & (np.minimum(np.minimum(dpx, dpy), dpz) > 0)
    )
    with np.errstate(invalid="ignore"):
        sums = (
            _half_angle(kappa, dpx, dpy, dxy)
            + _half_angle(kappa, dpx, dpz, dxz)
            + _half_angle(kappa, dpy, dpz, dyz)
        )
    return sums, defined


def _audit(kappa, dmatrix, quads):
    sums, defined = _angle_sums(kappa, dmatrix, quads)
    failing = defined & (sums - TWO_PI > ANGLE_SUM_TOL)
    violations = [
        (tuple(int(i) for i in quads[k]), float(sums[k]), float(sums[k] - TWO_PI))
        for k in np.flatnonzero(failing)[:MAX_REPORTED_VIOLATIONS]
    ]
    return violations, int(failing.sum()), int((~defined).sum())


def find_four_point_violation(space, samples, kappa, budget=QUADRUPLE_BUDGET, seed=0):
    """
    Search for a quadruple of samples failing the 4-point condition at kappa.

    Parameters
    ----------
    space : ModelSpace
        Space of the samples.
    samples : sequence of Point
        At least four points.
    kappa : float
        Curvature to test.
    budget : int, optional
        Number of random quadruples (samples of 15 points or more). Defaults to 50000.
    seed : int, optional
        Seed of the quadruple generator. Defaults to 0.

    Returns
    -------
    ((int, int, int, int), CheckResult) or None
        First failing quadruple in canonical order, with its check result; None if every quadruple passes.
    """
    samples = list(samples)
    if len(samples) < 4:
        raise ValueError("at least four sample points are needed")
    quads = _quadruples(len(samples), budget, seed)
    violations, _, _ = _audit(kappa, space.pairwise_distances(samples), quads)
    if not violations:
        return None
    indices = violations[0][0]
    return indices, four_point_check(kappa, *(samples[i] for i in indices))


def estimate_curvature_lower_bound(
    space,
    samples=None,
    kappa_lo=-1.0,
    kappa_hi=1.0,
    budget=QUADRUPLE_BUDGET,
    seed=0,
    resolution=BISECTION_RESOLUTION,
):
    """
    Largest kappa in [kappa_lo, kappa_hi] for which every checked quadruple satisfies the 4-point condition.

    The 4-point condition is checked with every sample point as apex, over all quadruples for samples smaller
    than 15 points and over a seeded random subset of budget quadruples otherwise. kappa is bisected to the
    given resolution. Quadruples with undefined angles never count as violations. When the condition already
    fails at kappa_lo no candidate of the range qualifies and kappa_max_estimate is None.

    Parameters
    ----------
    space : ModelSpace
        Space of the samples (model space or finite metric space).
    samples : sequence of Point, optional
        At least four points. Defaults to every point of a finite metric space.
    kappa_lo, kappa_hi : float
        Bisection range, kappa_lo < kappa_hi.
    budget : int, optional
        Random quadruple budget per candidate. Defaults to 50000.
    seed : int, optional
        Seed of the quadruple generator. Defaults to 0.
    resolution : float, optional
        Bisection resolution. Defaults to 1e-3.

    Returns
    -------
    CurvatureAuditReport

    Raises
    ------
    ValueError
        If kappa_lo >= kappa_hi or fewer than four samples are given.
    InconclusiveAuditError
        If every quadruple is inconclusive at kappa_lo.
    """
    if not kappa_lo < kappa_hi:
        raise ValueError("kappa_lo must be smaller than kappa_hi")
    if samples is None:
        samples = space.points()
    samples = list(samples)
    if len(samples) < 4:
        raise ValueError("at least four sample points are needed")

    dmatrix = space.pairwise_distances(samples)
    quads = _quadruples(len(samples), budget, seed)
    trace = []

    def run(kappa):
        violations, count, inconclusive = _audit(kappa, dmatrix, quads)
        trace.append((float(kappa), count))
        LOGGER.debug("kappa %r: %d violations, %d inconclusive", kappa, count, inconclusive)
        return violations, inconclusive

    violations, inconclusive = run(kappa_lo)
    if inconclusive == len(quads):
        raise InconclusiveAuditError("every quadruple is inconclusive at kappa_lo = %r" % kappa_lo)
    if violations:
        LOGGER.warning("4-point condition already fails at kappa_lo = %r", kappa_lo)
        return CurvatureAuditReport(kappa_lo, len(quads), violations, None, inconclusive, trace)

    violations_hi, inconclusive_hi = run(kappa_hi)
    if not violations_hi:
        return CurvatureAuditReport(kappa_hi, len(quads), [], kappa_hi, inconclusive_hi, trace)

    lo, hi = float(kappa_lo), float(kappa_hi)
    while hi - lo > resolution:
        mid = 0.5 * (lo + hi)
        violations_mid, inconclusive_mid = run(mid)
        if violations_mid:
            hi, violations_hi, inconclusive_hi = mid, violations_mid, inconclusive_mid
        else:
            lo = mid
    LOGGER.info("curvature lower bound estimate %r (first violation at %r)", lo, hi)
    return CurvatureAuditReport(hi, len(quads), violations_hi, lo, inconclusive_hi, trace)
