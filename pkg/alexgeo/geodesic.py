#!python
# coding: utf-8

"""
Geodesic - Constant speed shortest path of a model space.
"""

import numpy as np
from .constants import SPHERE


class Geodesic:
    """
    Represents the geodesic gamma: [0, tau] -> M, gamma(t) = exp(t * velocity).

    Attributes
    ----------
    base : Point
        gamma(0).
    velocity : TangentVector
        Initial velocity at base.
    tau : float
        End of the parameter domain.
    space : ModelSpace
        Space of the geodesic.
    speed : float
        Metric speed |gamma'| (norm of the velocity).
    length : float
        speed * tau.
    endpoint : Point
        gamma(tau).

    Methods
    -------
    point_at(t)
        gamma(t).
    sample(count)
        count equally spaced points gamma(0), ..., gamma(tau).
    rescaled(factor)
        Same trace traversed factor times faster (velocity * factor on [0, tau / factor]).
    restricted(tau)
        Same geodesic on a shorter domain [0, tau].

    Raises
    ------
    TypeError
        When calling __init__, if velocity is not a TangentVector or tau is not a positive number.
    ValueError
        When calling __init__ on a sphere, if speed * tau >= D_kappa.
        When calling point_at(), if t is outside [0, tau].
    """

    __slots__ = ("_velocity", "_tau")

    def __init__(self, base, velocity, tau=1.0):
        """
        Initializes the geodesic.

        Parameters
        ----------
        base : Point
            gamma(0).
        velocity : TangentVector
            Initial velocity, based at base.
        tau : float, optional
            End of the parameter domain. Defaults to 1.

        Raises
        ------
        TypeError
            If velocity is not a TangentVector based at base or tau is not a positive number.
        ValueError
            On spheres, if speed * tau >= D_kappa (the geodesic would not be minimizing).
        """
        if not hasattr(velocity, "base") or not hasattr(velocity, "inner"):
            raise TypeError("velocity must be a TangentVector")
        if velocity.base != base:
            raise TypeError("velocity must be based at base")
        if isinstance(tau, bool) or not isinstance(tau, (int, float, np.number)) or not tau > 0:
            raise TypeError("tau must be a positive number")
        self._velocity = velocity
        self._tau = float(tau)
        if base.space.kind == SPHERE and self.length >= base.space.diameter:
            raise ValueError("geodesic of length %r is not minimizing on this sphere" % self.length)

    @classmethod
    def between(cls, a, b, tau=1.0):
        """
        Geodesic [0, tau] -> M from a to b.

        Parameters
        ----------
        a, b : Point
            End points.
        tau : float, optional
            End of the parameter domain. Defaults to 1.

        Returns
        -------
        Geodesic
        """
        return a.space.geodesic(a, b, tau)

    @property
    def base(self):
        """return base."""
        return self._velocity.base

    @property
    def velocity(self):
        """return velocity."""
        return self._velocity

    @property
    def tau(self):
        """return tau."""
        return self._tau

    @property
    def space(self):
        """return space."""
        return self._velocity.space

    @property
    def speed(self):
        """return speed."""
        return self._velocity.norm()

    @property
    def length(self):
        """return length."""
        return self.speed * self._tau

    @property
    def endpoint(self):
        """return endpoint."""
        return self.point_at(self._tau)

    def point_at(self, t):
        """
        Point gamma(t).

        Parameters
        ----------
        t : float
            Parameter in [0, tau].

        Returns
        -------
        Point

        Raises
        ------
        ValueError
            If t is outside [0, tau].
        """
        t = float(t)
        slack = 1e-12 * max(1.0, self._tau)
        if not -slack <= t <= self._tau + slack:
            raise ValueError("t = %r is outside of the domain [0, %r]" % (t, self._tau))
        t = min(max(t, 0.0), self._tau)
        if t == 0.0:
            return self.base
        return self.space.exp(self._velocity * t)

    def sample(self, count):
        """
        Equally spaced points of the geodesic.

        Parameters
        ----------
        count : int
            Number of points (>= 2).

        Returns
        -------
        list of Point
        """
        if isinstance(count, bool) or not isinstance(count, int) or count < 2:
            raise TypeError("count must be an int >= 2")
        return [self.point_at(t) for t in np.linspace(0.0, self._tau, count)]

    def rescaled(self, factor):
        """
        Reparametrisation t -> gamma(factor * t) on [0, tau / factor].

        Parameters
        ----------
        factor : float
            Positive speed factor.

        Returns
        -------
        Geodesic
        """
        if not factor > 0:
            raise ValueError("factor must be positive")
        return Geodesic(self.base, self._velocity * factor, self._tau / factor)

    def restricted(self, tau):
        """
        Restriction of the geodesic to [0, tau].

        Returns
        -------
        Geodesic
        """
        if not 0 < tau <= self._tau:
            raise ValueError("tau must be in (0, %r]" % self._tau)
        return Geodesic(self.base, self._velocity, tau)

    def __repr__(self):
        return "alexgeo.Geodesic(base=%s, velocity=%s, tau=%r)" % (
            self.base.tolist(),
            self._velocity.tolist(),
            self._tau,
        )
