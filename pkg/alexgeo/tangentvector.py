#!python
# coding: utf-8

"""
TangentVector - Represents an element of the tangent cone T_pM of a model space.
"""

import math
import numpy as np
from .exceptions import SpaceMismatchError


class TangentVector:
    """
    Represents one tangent vector, i.e. an element [xi, s] of the tangent cone at its base point.

    On model spaces the tangent cone is the tangent space itself. Vectors are stored by their ambient components
    (tangent to the sphere, Minkowski-orthogonal to the hyperboloid) and every cone operation delegates to the
    Riemannian inner product. The full linear structure of the tangent space is available (+, -, real scaling);
    the cone operations are the subset with non-negative scalars.

    Attributes
    ----------
    base : Point
        Base point p.
    space : ModelSpace
        Space of the base point.
    vector : numpy.ndarray
        Read-only ambient components.
    magnitude : float
        Norm |v|_p (the radius s of [xi, s]).
    is_tip : bool
        True for the tip 0_p (magnitude 0).

    Methods
    -------
    inner(other)
        Inner product <u, v>_p.
    norm()
        Norm |u|_p.
    unit()
        Direction of the vector as a unit vector.
    tolist()
        Ambient components as a list of floats.

    Raises
    ------
    TypeError
        When calling __init__, if base is not a Point of a model space or vector has the wrong shape.
    ManifoldError
        When calling __init__ with check=True, if vector is not tangent at base.
    SpaceMismatchError
        When combining vectors with different base points.
    """

    __slots__ = ("_base", "_vector")

    def __init__(self, base, vector, check=True):
        """
        Initializes a tangent vector.

        Parameters
        ----------
        base : Point
            Base point.
        vector : array-like of float
            Ambient components.
        check : bool, optional
            Validate tangency. Defaults to True.

        Raises
        ------
        TypeError
            If base is not a Point of a model space or vector has the wrong shape.
        ManifoldError
            If check is True and vector is not tangent at base.
        """
        if not hasattr(base, "space"):
            raise TypeError("base must be a Point")
        self._base = base
        self._vector = base.space._check_tangent(base, vector, check)

    @property
    def base(self):
        """return base."""
        return self._base

    @property
    def space(self):
        """return space."""
        return self._base.space

    @property
    def vector(self):
        """return vector."""
        return self._vector

    @property
    def magnitude(self):
        """return magnitude."""
        return self.norm()

    @property
    def is_tip(self):
        """return is_tip."""
        return not np.any(self._vector)

    def _require_same_base(self, other):
        if not isinstance(other, TangentVector):
            raise TypeError("expected a TangentVector, got %s" % type(other).__name__)
        if other.base is not self._base and not (
            other.space == self.space
            and np.allclose(other.base.coords, self._base.coords, rtol=0.0, atol=1e-12)
        ):
            raise SpaceMismatchError("tangent vectors have different base points")

    def inner(self, other):
        """
        Inner product <u, v>_p = s t cos(angle between the directions).

        Parameters
        ----------
        other : TangentVector
            Vector with the same base point.

        Returns
        -------
        float

        Raises
        ------
        SpaceMismatchError
            If the base points differ.
        """
        self._require_same_base(other)
        return float(self.space._inner_raw(self._vector, other.vector))

    def norm(self):
        """
        Norm |u|_p = |u - 0_p|_p.

        Returns
        -------
        float
        """
        return math.sqrt(max(float(self.space._inner_raw(self._vector, self._vector)), 0.0))

    def unit(self):
        """
        Unit vector with the direction of self.

        Returns
        -------
        TangentVector

        Raises
        ------
        ValueError
            If self is the tip (the tip has no direction).
        """
        norm = self.norm()
        if norm == 0.0:
            raise ValueError("the tip 0_p has no direction")
        return self / norm

    def tolist(self):
        """return ambient components as a list of floats."""
        return [float(c) for c in self._vector]

    def _new(self, vector):
        return TangentVector(self._base, vector, check=False)

    def __add__(self, other):
        self._require_same_base(other)
        return self._new(self._vector + other.vector)

    def __sub__(self, other):
        self._require_same_base(other)
        return self._new(self._vector - other.vector)

    def __neg__(self):
        return self._new(-self._vector)

    def __mul__(self, scalar):
        if isinstance(scalar, bool) or not isinstance(scalar, (int, float, np.number)):
            return NotImplemented
        return self._new(float(scalar) * self._vector)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        if isinstance(scalar, bool) or not isinstance(scalar, (int, float, np.number)):
            return NotImplemented
        return self._new(self._vector / float(scalar))

    def __eq__(self, other):
        """
        Two tangent vectors are equal if they share the base point and components.
        All vectors of magnitude 0 at the same base point are the tip 0_p and compare equal.
        """
        if not isinstance(other, TangentVector):
            return NotImplemented
        if other.base != self._base:
            return False
        return bool(np.array_equal(self._vector, other.vector))

    def __hash__(self):
        return hash((self._base, self._vector.tobytes()))

    def __repr__(self):
        return "alexgeo.TangentVector(base=%s, vector=%s)" % (self._base.tolist(), self.tolist())
