#!python
# coding: utf-8

"""
Variance functional and barycenters of discrete measures on model spaces.

solve_barycenter runs the Karcher fixed-point iteration x <- exp_x(step * sum_i w_i log_x(x_i)),
first_order_audit measures how far a point is from the first-order condition and grid_search_variance is a
brute-force oracle for 2-dimensional spaces.
"""

import logging
import math
import warnings
from dataclasses import dataclass, field
from typing import List
import numpy as np
from .constants import (
    AUDIT_PROBES,
    BARYCENTER_MAX_ITER,
    BARYCENTER_STEP,
    BARYCENTER_TOL,
    GRID_RESOLUTION,
    SPHERE,
)
from .exceptions import ConvergenceError, LocalMinimumWarning, SafeZoneError, SpaceMismatchError
from .measure import DiscreteMeasure
from .point import Point
from .tangentvector import TangentVector


LOGGER = logging.getLogger(__name__)

_MAX_BACKTRACKS = 30
# relative float noise tolerated on the variance when accepting a step
_VARIANCE_SLACK = 1e-14


def variance(mu, x):
    """
    V_mu(x) = sum_i w_i d(x, x_i)**2.

    Parameters
    ----------
    mu : DiscreteMeasure
    x : Point
        Point of the space of mu.

    Returns
    -------
    float

    Raises
    ------
    SpaceMismatchError
        If x does not belong to the space of mu.
    """
    if not isinstance(mu, DiscreteMeasure):
        raise TypeError("mu must be a DiscreteMeasure")
    if not isinstance(x, Point):
        raise TypeError("x must be a Point")
    if x.space != mu.space:
        raise SpaceMismatchError("x does not belong to the space of mu")
    distances = mu.space.distances_from(x, mu.support)
    return float(np.dot(mu.weights, distances**2))


def _mean_log(mu, x):
    """sum_i w_i log_x(x_i), as a TangentVector at x."""
    space = mu.space
    total = np.zeros(space.ambient_dim)
    for point, weight in mu:
        total += weight * space.log(x, point).vector
    return TangentVector(x, total, check=False)


@dataclass
class BarycenterResult:
    """
    Output of solve_barycenter.

    Attributes
    ----------
    point : Point
        Barycenter x*.
    variance_at_point : float
        V_mu(x*).
    iterations : int
        Number of Karcher steps taken.
    residual : float
        |sum_i w_i log_x*(x_i)|.
    first_order_report : float
        first_order_audit value at x*.
    history : list of float
        V_mu at every iterate, starting point included.
    """

    point: Point
    variance_at_point: float
    iterations: int
    residual: float
    first_order_report: float
    history: List[float] = field(default_factory=list, repr=False)

    def to_dict(self):
        """return JSON friendly dictionary."""
        return {
            "point": self.point.tolist(),
            "variance_at_point": self.variance_at_point,
            "iterations": self.iterations,
            "residual": self.residual,
            "first_order_report": self.first_order_report,
            "history": list(self.history),
        }


def check_safe_zone(mu, strict=False):
    """
    Checks that a measure on a sphere is spread little enough for a unique barycenter.

    By default every pairwise support distance must be smaller than D_kappa / 2. This is necessary for the support
    to fit in a ball of radius D_kappa / 4 but not sufficient: an equilateral support with sides just under
    D_kappa / 2 has a circumradius of about 0.3 D_kappa. With strict=True the sufficient condition is checked
    instead: some support point must be at distance smaller than D_kappa / 4 from every other one.

    Parameters
    ----------
    mu : DiscreteMeasure
    strict : bool, optional
        Check the sufficient ball condition instead of the pairwise one. Defaults to False.

    Raises
    ------
    SafeZoneError
        If the support of mu is too spread out.
    """
    space = mu.space
    if space.kind != SPHERE or mu.size < 2:
        return
    distances = space.pairwise_distances(mu.support)
    if strict:
        radius = float(distances.max(axis=1).min())
        if not radius < space.diameter / 4.0:
            raise SafeZoneError(
                "no support point is within D_kappa / 4 = %r of the whole support (best radius %r)"
                % (space.diameter / 4.0, radius)
            )
        return
    spread = float(distances.max())
    if not spread < space.diameter / 2.0:
        raise SafeZoneError(
            "support spread %r is not smaller than D_kappa / 2 = %r" % (spread, space.diameter / 2.0)
        )


def solve_barycenter(
    mu,
    x0=None,
    step=BARYCENTER_STEP,
    tol=BARYCENTER_TOL,
    max_iter=BARYCENTER_MAX_ITER,
    audit_probes=AUDIT_PROBES,
    seed=0,
):
    """
    Barycenter of a discrete measure by the Karcher iteration.

    Iterates x <- exp_x(step * r(x)), r(x) = sum_i w_i log_x(x_i), until |r(x)| <= tol. A step is halved until
    it does not increase the variance (up to float noise) and shrinks |r|, so the history never increases and
    over-relaxed steps cannot oscillate around the minimiser. The result is a local minimiser of V_mu; a
    LocalMinimumWarning is issued if some support point has a smaller variance.

    Parameters
    ----------
    mu : DiscreteMeasure
        Measure on a model space.
    x0 : Point, optional
        Starting point. Defaults to the support point of smallest variance.
    step : float, optional
        Step size. Defaults to 1.
    tol : float, optional
        Residual tolerance. Defaults to 1e-10.
    max_iter : int, optional
        Maximum number of steps. Defaults to 10000.
    audit_probes : int, optional
        Random probes of the first-order audit. Defaults to 16.
    seed : int, optional
        Seed of the first-order audit. Defaults to 0.

    Returns
    -------
    BarycenterResult

    Raises
    ------
    TypeError
        If mu lives on a finite metric space.
    SafeZoneError
        On spheres, if two support points are at distance D_kappa / 2 or more.
    ConvergenceError
        If the residual is still above tol after max_iter steps, or if no halving of the step decreases the
        variance.
    CutLocusError
        If an antipodal log is met.
    """
    if not isinstance(mu, DiscreteMeasure):
        raise TypeError("mu must be a DiscreteMeasure")
    space = mu.space
    if not space.supports_geodesics:
        raise TypeError("barycenters need a model space")
    if not step > 0:
        raise ValueError("step must be positive")
    check_safe_zone(mu)

    support_variances = [variance(mu, x) for x in mu.support]
    if x0 is None:
        x = mu.support[int(np.argmin(support_variances))]
    else:
        if x0.space != space:
            raise SpaceMismatchError("x0 does not belong to the space of mu")
        x = x0

    current = variance(mu, x)
    history = [current]
    iterations = 0
    residual_vector = _mean_log(mu, x)
    residual = residual_vector.norm()
    while residual > tol:
        if iterations >= max_iter:
            raise ConvergenceError(
                "barycenter iteration did not converge in %d steps (residual %r)" % (max_iter, residual)
            )
        scale = step
        candidate = space.exp(residual_vector * scale)
        candidate_variance = variance(mu, candidate)
        candidate_vector = _mean_log(mu, candidate)
        slack = _VARIANCE_SLACK * max(1.0, current)
        backtracks = 0
        while candidate_variance > current + slack or not candidate_vector.norm() < residual:
            if backtracks >= _MAX_BACKTRACKS:
                break
            scale *= 0.5
            backtracks += 1
            candidate = space.exp(residual_vector * scale)
            candidate_variance = variance(mu, candidate)
            candidate_vector = _mean_log(mu, candidate)
        if candidate_variance > current + slack:
            raise ConvergenceError(
                "no step along the residual decreases the variance at iteration %d (residual %r)"
                % (iterations, residual)
            )
        if not candidate_vector.norm() < residual:
            LOGGER.warning("residual did not shrink after %d halvings at iteration %d", backtracks, iterations)
        elif backtracks:
            LOGGER.debug("step halved %d times at iteration %d", backtracks, iterations)
        x, current = candidate, candidate_variance
        history.append(current)
        iterations += 1
        residual_vector = candidate_vector
        residual = residual_vector.norm()
        LOGGER.debug("iteration %d: variance %r, residual %r", iterations, current, residual)

    if min(support_variances) < current - 1e-12 * max(1.0, current):
        warnings.warn(
            "barycenter iteration stopped at variance %r above the best support point (%r)"
            % (current, min(support_variances)),
            LocalMinimumWarning,
        )
    audit = first_order_audit(mu, x, audit_probes, seed)
    LOGGER.debug("barycenter after %d iterations: variance %r, audit %r", iterations, current, audit)
    return BarycenterResult(x, current, iterations, residual, audit, history)


def first_order_audit(mu, x_star, probes=AUDIT_PROBES, seed=0):
    """
    max |sum_i w_i <log_x*(x_i), u>| over probes random unit tangent vectors u and the +- frame at x*.

    Parameters
    ----------
    mu : DiscreteMeasure
    x_star : Point
        Candidate barycenter.
    probes : int, optional
        Number of random unit probes. Defaults to 16.
    seed : int, optional
        Seed of the probes. Defaults to 0.

    Returns
    -------
    float

    Raises
    ------
    CutLocusError
        If x_star is antipodal to a support point.
    """
    if not isinstance(mu, DiscreteMeasure):
        raise TypeError("mu must be a DiscreteMeasure")
    if x_star.space != mu.space:
        raise SpaceMismatchError("x_star does not belong to the space of mu")
    space = mu.space
    r = _mean_log(mu, x_star)
    frame = space.tangent_basis(x_star)
    probes_list = frame + [-u for u in frame]
    rng = np.random.default_rng(seed)
    probes_list += [space.random_unit_tangent(rng, x_star) for _ in range(probes)]
    return max(abs(r.inner(u)) for u in probes_list)


def grid_search_variance(mu, center, radius, resolution=GRID_RESOLUTION):
    """
    Minimum of V_mu over a resolution x resolution geodesic-polar grid of B(center, radius).

    Only for 2-dimensional model spaces.

    Parameters
    ----------
    mu : DiscreteMeasure
    center : Point
        Center of the grid.
    radius : float
        Radius of the grid (< D_kappa on spheres).
    resolution : int, optional
        Number of radii and of angles. Defaults to 200.

    Returns
    -------
    (Point, float)
        Best grid point and its variance.
    """
    space = mu.space
    if not space.supports_geodesics or space.dim != 2:
        raise ValueError("grid_search_variance only handles 2-dimensional model spaces")
    if center.space != space:
        raise SpaceMismatchError("center does not belong to the space of mu")
    if space.kind == SPHERE and not radius < space.diameter:
        raise SafeZoneError("grid radius must be smaller than D_kappa")

    e1, e2 = (b.vector for b in space.tangent_basis(center))
    radii = np.linspace(0.0, radius, resolution)
    angles = np.linspace(0.0, 2.0 * math.pi, resolution, endpoint=False)
    rr, aa = np.meshgrid(radii, angles, indexing="ij")
    vectors = (rr * np.cos(aa))[..., np.newaxis] * e1 + (rr * np.sin(aa))[..., np.newaxis] * e2
    vectors = vectors.reshape(-1, space.ambient_dim)
    grid = space._exp_raw(center.coords[np.newaxis, :], vectors)

    support = np.stack([x.coords for x in mu.support])
    distances = space._dist_raw(grid[:, np.newaxis, :], support[np.newaxis, :, :])
    variances = (distances**2) @ mu.weights
    best = int(np.argmin(variances))
    return space.project(grid[best]), float(variances[best])
