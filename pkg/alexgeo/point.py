#!python
# coding: utf-8

"""
Point - Represents a single point of a ModelSpace.
"""

import numpy as np


class Point:
    """
    Represents one point of a model space.

    For Euclidean spaces the coordinates are the usual d coordinates. Spheres and hyperbolic spaces are stored
    extrinsically, with d+1 ambient coordinates (sphere of radius 1/sqrt(kappa) in R^(d+1), upper sheet of the
    hyperboloid <x,x>_Mink = 1/kappa). Points of a finite metric space are row indices of its distance matrix.

    Attributes
    ----------
    space : ModelSpace
        Space the point belongs to.
    coords : numpy.ndarray or int
        Read-only ambient coordinates, or the index of the point for finite metric spaces.

    Methods
    -------
    tolist()
        Returns the coordinates as a list of floats (or the index for finite metric spaces).

    Raises
    ------
    TypeError
        When calling __init__, if space is not a ModelSpace or coords cannot be read as numbers.
    ManifoldError
        When calling __init__ with check=True, if coords do not lie on the manifold.
    """

    __slots__ = ("_space", "_coords")

    def __init__(self, space, coords, check=True):
        """
        Initializes a point of the given space.

        Parameters
        ----------
        space : ModelSpace
            Space the point belongs to.
        coords : array-like of float or int
            Ambient coordinates (or row index for finite metric spaces).
        check : bool, optional
            Validate that coords lie on the manifold. Defaults to True.

        Raises
        ------
        TypeError
            If space is not a ModelSpace or coords cannot be read as numbers.
        ManifoldError
            If check is True and coords are not on the manifold.
        """
        if not hasattr(space, "_check_coords"):
            raise TypeError("space must be a ModelSpace")
        self._space = space
        self._coords = space._check_coords(coords, check)

    @property
    def space(self):
        """return space."""
        return self._space

    @property
    def coords(self):
        """return coords."""
        return self._coords

    def tolist(self):
        """
        Coordinates as plain Python numbers.

        Returns
        -------
        list of float or int
            Ambient coordinates, or the row index for finite metric spaces.
        """
        if isinstance(self._coords, int):
            return self._coords
        return [float(c) for c in self._coords]

    def __eq__(self, other):
        """
        Two points are equal if they belong to the same space and have identical coordinates.
        """
        if not isinstance(other, Point):
            return NotImplemented
        if self._space != other.space:
            return False
        if isinstance(self._coords, int):
            return self._coords == other.coords
        return bool(np.array_equal(self._coords, other.coords))

    def __hash__(self):
        if isinstance(self._coords, int):
            return hash((self._space, self._coords))
        return hash((self._space, self._coords.tobytes()))

    def __repr__(self):
        return "alexgeo.Point(%s, %s)" % (self._space.kind, self.tolist())
