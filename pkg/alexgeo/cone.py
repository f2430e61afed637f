#!python
# coding: utf-8

"""
Tangent cone arithmetic.

ConePoint and the Euclidean cone metric over an abstract direction set, inner products and norms of model-space
tangent vectors, and the numeric limits defining angles, separation rates and midpoints of geodesics issued
from a common point.
"""

import logging
import math
from dataclasses import dataclass
from typing import Hashable
import numpy as np
from .comparison import _half_angle
from .constants import LIMIT_HALVINGS, LIMIT_ORDER, LIMIT_RTOL, LIMIT_T0
from .exceptions import SpaceMismatchError
from .geodesic import Geodesic
from .numerics import numeric_limit
from .tangentvector import TangentVector


LOGGER = logging.getLogger(__name__)


##############
# Cone points
##############


@dataclass(frozen=True, eq=False)
class ConePoint:
    """
    Class [xi, s] of the Euclidean cone over a direction set.

    All points of radius 0 are the tip of the cone and compare equal whatever their label.

    Attributes
    ----------
    label : hashable
        Direction (element of the direction set).
    radius : float
        Non-negative radius s.
    """

    label: Hashable
    radius: float

    def __post_init__(self):
        if isinstance(self.radius, bool) or not isinstance(self.radius, (int, float, np.number)):
            raise TypeError("radius must be a number")
        if not self.radius >= 0:
            raise ValueError("radius must be non-negative")
        object.__setattr__(self, "radius", float(self.radius))

    @property
    def is_tip(self):
        """return is_tip."""
        return self.radius == 0.0

    def scaled(self, factor):
        """
        lambda [xi, s] = [xi, lambda s] for lambda >= 0.

        Returns
        -------
        ConePoint
        """
        if not factor >= 0:
            raise ValueError("cone points can only be scaled by non-negative factors")
        return ConePoint(self.label, self.radius * factor)

    def __eq__(self, other):
        if not isinstance(other, ConePoint):
            return NotImplemented
        if self.is_tip and other.is_tip:
            return True
        return self.label == other.label and self.radius == other.radius

    def __hash__(self):
        if self.is_tip:
            return hash(0.0)
        return hash((self.label, self.radius))


def _check_angular_distance(angular_distance):
    angular_distance = float(angular_distance)
    if not 0.0 <= angular_distance <= math.pi:
        raise ValueError("angular_distance must be in [0, pi], got %r" % angular_distance)
    return angular_distance


def cone_distance(a, b, angular_distance):
    """
    Cone metric d_c([xi, s], [zeta, t]) = sqrt(s**2 - 2 s t cos(theta) + t**2).

    Evaluated as sqrt((s - t)**2 + 4 s t sin(theta/2)**2).

    Parameters
    ----------
    a, b : ConePoint
        Cone points.
    angular_distance : float
        Distance theta in [0, pi] between the labels of a and b.

    Returns
    -------
    float

    Raises
    ------
    ValueError
        If angular_distance is outside [0, pi].
    """
    if not isinstance(a, ConePoint) or not isinstance(b, ConePoint):
        raise TypeError("a and b must be ConePoint objects")
    theta = _check_angular_distance(angular_distance)
    s, t = a.radius, b.radius
    return math.sqrt((s - t) ** 2 + 4.0 * s * t * math.sin(0.5 * theta) ** 2)


def cone_inner_product(a, b, angular_distance):
    """
    Cone inner product <[xi, s], [zeta, t]> = s t cos(theta).

    Parameters
    ----------
    a, b : ConePoint
        Cone points.
    angular_distance : float
        Distance theta in [0, pi] between the labels of a and b.

    Returns
    -------
    float
    """
    if not isinstance(a, ConePoint) or not isinstance(b, ConePoint):
        raise TypeError("a and b must be ConePoint objects")
    theta = _check_angular_distance(angular_distance)
    return a.radius * b.radius * math.cos(theta)


######################
# Tangent vectors
######################


def inner_product(u, v):
    """
    <u, v>_p of two tangent vectors at the same base point.

    Raises
    ------
    SpaceMismatchError
        If the base points differ.
    """
    if not isinstance(u, TangentVector):
        raise TypeError("u must be a TangentVector")
    return u.inner(v)


def norm(u):
    """|u|_p = |u - 0_p|_p."""
    if not isinstance(u, TangentVector):
        raise TypeError("u must be a TangentVector")
    return u.norm()


###############################
# Geodesics from a common point
###############################


def metric_speed(g, t=None):
    """
    Metric speed d(gamma(0), gamma(t)) / t of a geodesic.

    Parameters
    ----------
    g : Geodesic
    t : float, optional
        Parameter in (0, tau]. Defaults to tau.

    Returns
    -------
    float
    """
    if not isinstance(g, Geodesic):
        raise TypeError("g must be a Geodesic")
    t = g.tau if t is None else float(t)
    if not t > 0:
        raise ValueError("t must be positive")
    return g.space.distance(g.base, g.point_at(t)) / t


def geodesic_direction(g):
    """
    Direction of a geodesic: its initial velocity normalised to unit norm.

    Returns
    -------
    TangentVector
    """
    if not isinstance(g, Geodesic):
        raise TypeError("g must be a Geodesic")
    return g.velocity.unit()


def _common_base(g1, g2):
    if not isinstance(g1, Geodesic) or not isinstance(g2, Geodesic):
        raise TypeError("g1 and g2 must be Geodesic objects")
    if g1.space != g2.space:
        raise SpaceMismatchError("geodesics belong to different spaces")
    if not np.allclose(g1.base.coords, g2.base.coords, rtol=0.0, atol=1e-12):
        raise SpaceMismatchError("geodesics must start at a common point")
    return g1.space


def _initial_step(g1, g2):
    # keeps t * speed below 0.1 * max(1, length)
    tau = min(g1.tau, g2.tau)
    return min(LIMIT_T0, LIMIT_T0 * tau) / max(1.0, g1.speed, g2.speed)


def angle_between_geodesics(g1, g2, halvings=LIMIT_HALVINGS, rtol=LIMIT_RTOL):
    """
    Angle between two geodesics issued from a common point p.

    Limit as t -> 0 of the Euclidean comparison angle at p of the triangle {p, g1(t), g2(t)}, evaluated at
    t = t0 * 2**-k and Richardson extrapolated (the comparison angle is even in t).

    Parameters
    ----------
    g1, g2 : Geodesic
        Non-constant geodesics with a common base point.
    halvings : int, optional
        Maximum number of halvings of t0. Defaults to 12.
    rtol : float, optional
        Convergence tolerance of the extrapolation. Defaults to 1e-8.

    Returns
    -------
    float
        Angle in [0, pi].

    Raises
    ------
    SpaceMismatchError
        If the geodesics do not share their base point.
    ValueError
        If one of the geodesics is constant.
    ExtrapolationError
        If the extrapolated limit does not stabilise.
    """
    space = _common_base(g1, g2)
    if g1.speed == 0.0 or g2.speed == 0.0:
        raise ValueError("angles are only defined between non-constant geodesics")
    p = g1.base

    def comparison(t):
        x, y = g1.point_at(t), g2.point_at(t)
        return _half_angle(0.0, space.distance(p, x), space.distance(p, y), space.distance(x, y))

    angle = numeric_limit(comparison, _initial_step(g1, g2), halvings, LIMIT_ORDER, rtol)
    return min(math.pi, max(0.0, angle))


def geodesic_separation_rate(g1, g2, halvings=LIMIT_HALVINGS, rtol=LIMIT_RTOL):
    """
    |g1 - g2|_p = lim d(g1(t), g2(t)) / t for geodesics issued from a common point.

    Parameters
    ----------
    g1, g2 : Geodesic
        Geodesics with a common base point.
    halvings : int, optional
        Maximum number of halvings of t0. Defaults to 12.
    rtol : float, optional
        Convergence tolerance of the extrapolation. Defaults to 1e-8.

    Returns
    -------
    float

    Raises
    ------
    SpaceMismatchError
        If the geodesics do not share their base point.
    ExtrapolationError
        If the extrapolated limit does not stabilise.
    """
    space = _common_base(g1, g2)

    def separation(t):
        return space.distance(g1.point_at(t), g2.point_at(t)) / t

    return max(0.0, numeric_limit(separation, _initial_step(g1, g2), halvings, LIMIT_ORDER, rtol))


def midpoint_limit(g1, g2, halvings=LIMIT_HALVINGS, rtol=LIMIT_RTOL):
    """
    4 lim d(p, m_t)**2 / t**2, m_t the midpoint of g1(t) and g2(t).

    Equals |u|**2 + 2 <u, v> + |v|**2 for the initial velocities u and v.

    Parameters
    ----------
    g1, g2 : Geodesic
        Geodesics with a common base point p.
    halvings : int, optional
        Maximum number of halvings of t0. Defaults to 12.
    rtol : float, optional
        Convergence tolerance of the extrapolation. Defaults to 1e-8.

    Returns
    -------
    float

    Raises
    ------
    TypeError
        If the space has no midpoints (finite metric spaces).
    ExtrapolationError
        If the extrapolated limit does not stabilise.
    """
    space = _common_base(g1, g2)
    p = g1.base

    def midpoint_ratio(t):
        x, y = g1.point_at(t), g2.point_at(t)
        midpoint = x if x == y else space.geodesic(x, y).point_at(0.5)
        return 4.0 * space.distance(p, midpoint) ** 2 / t**2

    return max(0.0, numeric_limit(midpoint_ratio, _initial_step(g1, g2), halvings, LIMIT_ORDER, rtol))
