#!python
# coding: utf-8

"""
DiscreteMeasure - Finitely supported probability measure on a space.
"""

import numpy as np
from .constants import WEIGHT_SUM_TOL
from .exceptions import SpaceMismatchError
from .point import Point


class DiscreteMeasure:
    """
    Represents mu = sum_i w_i delta_{x_i}.
    Iterating over the measure yields (point, weight) pairs.

    Attributes
    ----------
    support : tuple of Point
        Support points x_i (same space).
    weights : numpy.ndarray
        Read-only positive weights w_i summing to 1.
    space : ModelSpace
        Space of the support.
    size : int
        Number of support points.

    Methods
    -------
    uniform(points), dirac(point), normalized(points, weights), random(space, count, rng, center=None, radius=1.0)
        Alternate __init__ methods.
    integrate(f)
        sum_i w_i f(x_i).
    describe()
        Dictionary description (support coordinates and weights).

    Raises
    ------
    TypeError
        When calling __init__, if support is empty or contains something other than Points, or weights is not a
        sequence of numbers of the same length.
    ValueError
        When calling __init__, if a weight is not positive or the weights do not sum to 1 within 1e-12.
    SpaceMismatchError
        When calling __init__, if the support points belong to different spaces.
    """

    def __init__(self, support, weights):
        """
        Initializes the measure.

        Parameters
        ----------
        support : sequence of Point
            Support points.
        weights : sequence of float
            Positive weights summing to 1.
        """
        support = tuple(support)
        if not support or not all(isinstance(x, Point) for x in support):
            raise TypeError("support must be a non empty sequence of Point objects")
        space = support[0].space
        if any(x.space != space for x in support):
            raise SpaceMismatchError("support points belong to different spaces")
        try:
            weights = np.array(weights, dtype=float)
        except (TypeError, ValueError) as exc:
            raise TypeError("weights must be a sequence of numbers") from exc
        if weights.shape != (len(support),):
            raise TypeError("weights must have one entry per support point")
        if not np.all(weights > 0):
            raise ValueError("weights must be positive")
        if abs(float(weights.sum()) - 1.0) > WEIGHT_SUM_TOL:
            raise ValueError("weights must sum to 1 (sum is %r)" % float(weights.sum()))
        weights.setflags(write=False)
        self._support = support
        self._weights = weights

    @classmethod
    def uniform(cls, points):
        """Uniform measure on the given points."""
        points = list(points)
        if not points:
            raise TypeError("points must not be empty")
        return cls(points, np.full(len(points), 1.0 / len(points)))

    @classmethod
    def dirac(cls, point):
        """Point mass delta_point."""
        return cls([point], [1.0])

    @classmethod
    def normalized(cls, points, weights):
        """Measure with weights proportional to the given positive weights."""
        weights = np.array(weights, dtype=float)
        total = weights.sum()
        if not total > 0:
            raise ValueError("weights must have a positive sum")
        return cls(points, weights / total)

    @classmethod
    def random(cls, space, count, rng, center=None, radius=1.0):
        """
        Uniform measure on count random points of the ball B(center, radius).

        Parameters
        ----------
        space : ModelSpace
            Model space.
        count : int
            Number of support points.
        rng : numpy.random.Generator
            Random generator.
        center : Point, optional
            Defaults to space.origin().
        radius : float, optional
            Defaults to 1.

        Returns
        -------
        DiscreteMeasure
        """
        if isinstance(count, bool) or not isinstance(count, (int, np.integer)) or count < 1:
            raise TypeError("count must be a positive int")
        return cls.uniform([space.random_point(rng, center, radius) for _ in range(count)])

    @property
    def support(self):
        """return support."""
        return self._support

    @property
    def weights(self):
        """return weights."""
        return self._weights

    @property
    def space(self):
        """return space."""
        return self._support[0].space

    @property
    def size(self):
        """return size."""
        return len(self._support)

    def integrate(self, f):
        """
        Integral of f against the measure.

        Parameters
        ----------
        f : callable
            Point -> float (e.g. a ScalarField).

        Returns
        -------
        float
        """
        return float(sum(w * f(x) for x, w in self))

    def describe(self):
        """
        Dictionary description.

        Returns
        -------
        dict
            {'points': list of coordinates, 'weights': list of floats}.
        """
        return {"points": [x.tolist() for x in self._support], "weights": self._weights.tolist()}

    def __iter__(self):
        return iter(zip(self._support, (float(w) for w in self._weights)))

    def __len__(self):
        return len(self._support)

    def __repr__(self):
        return "alexgeo.DiscreteMeasure(size=%d, space=%r)" % (self.size, self.space)
