#!python
# coding: utf-8

"""
ModelSpace - Exact geometry of the model spaces (Euclidean space, round sphere, hyperbolic space) and of
finite metric spaces given by a distance matrix.

Besides the ModelSpace class this module exposes the model-space operations as functions:
distance, exp_map, log_map, geodesic_point and path_length.
"""

import logging
import math
import numpy as np
from .constants import (
    ANTIPODAL_TOL,
    EUCLIDEAN,
    FINITE_METRIC,
    GEODESIC_SPACE_KINDS,
    HYPERBOLIC,
    MANIFOLD_TOL,
    METRIC_TOL,
    SPACE_KINDS,
    SPHERE,
)
from .exceptions import (
    CutLocusError,
    ManifoldError,
    MetricError,
    SpaceMismatchError,
)
from .geodesic import Geodesic
from .point import Point
from .tangentvector import TangentVector


LOGGER = logging.getLogger(__name__)


class ModelSpace:
    """
    Descriptor and geometry of a model space.

    Spheres (kappa > 0) are the spheres of radius 1/sqrt(kappa) in R^(d+1); hyperbolic spaces (kappa < 0) are the
    upper sheets of the hyperboloids <x,x>_Mink = 1/kappa in Minkowski space R^(1,d), with
    <x,y>_Mink = -x0*y0 + x1*y1 + ... + xd*yd. Finite metric spaces only answer distance queries.

    Attributes
    ----------
    kind : 'euclidean', 'sphere', 'hyperbolic' or 'finite_metric'
        Kind of space.
    dim : int or None
        Intrinsic dimension (None for finite metric spaces).
    kappa : float or None
        Constant sectional curvature (None for finite metric spaces).
    dmatrix : numpy.ndarray or None
        Read-only distance matrix of a finite metric space.
    size : int or None
        Number of points of a finite metric space.
    ambient_dim : int or None
        Length of the coordinate vectors (d for Euclidean spaces, d+1 for spheres and hyperbolic spaces).
    diameter : float
        D_kappa for model spaces (pi/sqrt(kappa) for spheres, inf otherwise); largest distance for finite metrics.
    radius : float
        Curvature radius 1/sqrt(|kappa|) (inf for Euclidean spaces).

    Methods
    -------
    euclidean(dim), sphere(dim, kappa=1.0), hyperbolic(dim, kappa=-1.0), finite_metric(dmatrix)
        Alternate __init__ methods.
    model_plane(kappa)
        The kappa-plane M2_kappa (dimension 2 model space of curvature kappa).
    point(coords), origin(), project(coords), points()
        Point constructors.
    tangent(p, vector), zero(p), project_tangent(p, vector), tangent_basis(p)
        TangentVector constructors.
    distance(a, b), exp(v), log(p, x), geodesic(a, b, tau=1.0)
        Geometry.
    random_point(rng, center=None, radius=1.0), random_unit_tangent(rng, p)
        Random sampling.
    distances_from(x, points), pairwise_distances(points)
        Vectorised distance queries.
    describe()
        Dictionary description of the space (used in reports).

    Raises
    ------
    TypeError
        When calling __init__, if kind, dim, kappa or dmatrix are of the wrong type.
    ValueError
        When calling __init__, if kappa does not match kind.
    MetricError
        When calling __init__, if dmatrix is not a metric.
    """

    def __init__(self, kind, dim=None, kappa=None, dmatrix=None):
        """
        Initializes the model space.

        Parameters
        ----------
        kind : 'euclidean', 'sphere', 'hyperbolic' or 'finite_metric'
            Kind of space.
        dim : int, optional
            Intrinsic dimension. Required for model spaces, ignored for finite metric spaces.
        kappa : float, optional
            Curvature. Defaults to 0 (Euclidean), 1 (sphere) and -1 (hyperbolic).
        dmatrix : array-like, optional
            n x n distance matrix. Required for finite metric spaces.

        Raises
        ------
        TypeError
            If kind, dim, kappa or dmatrix are of the wrong type.
        ValueError
            If kappa does not match kind.
        MetricError
            If dmatrix is not symmetric, has non zero diagonal, non positive off-diagonal entries or violates the
            triangle inequality.
        """
        if not (isinstance(kind, str) and kind in SPACE_KINDS):
            raise TypeError("kind must be one of: %s" % ", ".join(SPACE_KINDS))
        self._kind = kind

        if kind == FINITE_METRIC:
            self._dim = None
            self._kappa = None
            self._dmatrix = self._check_dmatrix(dmatrix)
            return

        if isinstance(dim, bool) or not isinstance(dim, (int, np.integer)) or dim < 1:
            raise TypeError("dim must be a positive int")
        self._dim = int(dim)
        self._dmatrix = None

        default_kappa = {EUCLIDEAN: 0.0, SPHERE: 1.0, HYPERBOLIC: -1.0}[kind]
        if kappa is None:
            kappa = default_kappa
        if isinstance(kappa, bool) or not isinstance(kappa, (int, float, np.number)):
            raise TypeError("kappa must be a real number")
        kappa = float(kappa)
        if (
            (kind == EUCLIDEAN and kappa != 0.0)
            or (kind == SPHERE and not kappa > 0.0)
            or (kind == HYPERBOLIC and not kappa < 0.0)
        ):
            raise ValueError(
                "kappa must be 0 for euclidean, > 0 for sphere and < 0 for hyperbolic spaces"
            )
        self._kappa = kappa

    @classmethod
    def euclidean(cls, dim):
        """Euclidean space R^dim."""
        return cls(EUCLIDEAN, dim=dim)

    @classmethod
    def sphere(cls, dim, kappa=1.0):
        """Round sphere of dimension dim and curvature kappa > 0."""
        return cls(SPHERE, dim=dim, kappa=kappa)

    @classmethod
    def hyperbolic(cls, dim, kappa=-1.0):
        """Hyperbolic space of dimension dim and curvature kappa < 0."""
        return cls(HYPERBOLIC, dim=dim, kappa=kappa)

    @classmethod
    def finite_metric(cls, dmatrix):
        """Finite metric space given by a distance matrix."""
        return cls(FINITE_METRIC, dmatrix=dmatrix)

    @classmethod
    def model_plane(cls, kappa):
        """
        The kappa-plane M2_kappa.

        Parameters
        ----------
        kappa : float
            Curvature.

        Returns
        -------
        ModelSpace
            Euclidean plane, round 2-sphere or hyperbolic plane of curvature kappa.
        """
        kappa = float(kappa)
        if kappa > 0:
            return cls.sphere(2, kappa)
        if kappa < 0:
            return cls.hyperbolic(2, kappa)
        return cls.euclidean(2)

    @property
    def kind(self):
        """return kind."""
        return self._kind

    @property
    def dim(self):
        """return dim."""
        return self._dim

    @property
    def kappa(self):
        """return kappa."""
        return self._kappa

    @property
    def dmatrix(self):
        """return dmatrix."""
        return self._dmatrix

    @property
    def size(self):
        """return size."""
        if self._dmatrix is None:
            return None
        return self._dmatrix.shape[0]

    @property
    def ambient_dim(self):
        """return ambient_dim."""
        if self._kind == FINITE_METRIC:
            return None
        if self._kind == EUCLIDEAN:
            return self._dim
        return self._dim + 1

    @property
    def diameter(self):
        """return diameter."""
        if self._kind == FINITE_METRIC:
            return float(self._dmatrix.max())
        if self._kind == SPHERE:
            return math.pi / math.sqrt(self._kappa)
        return math.inf

    @property
    def radius(self):
        """return radius."""
        if self._kind in (SPHERE, HYPERBOLIC):
            return 1.0 / math.sqrt(abs(self._kappa))
        return math.inf

    @property
    def supports_geodesics(self):
        """return supports_geodesics."""
        return self._kind in GEODESIC_SPACE_KINDS

    ###########
    # Points
    ###########

    def point(self, coords):
        """
        Validated point of this space.

        Parameters
        ----------
        coords : array-like of float or int
            Ambient coordinates (row index for finite metric spaces).

        Returns
        -------
        Point

        Raises
        ------
        ManifoldError
            If coords are not on the manifold.
        """
        return Point(self, coords)

    def origin(self):
        """
        Canonical base point: the origin of R^d, the pole (1/sqrt(kappa), 0, ..., 0) of the sphere or the vertex
        (1/sqrt(-kappa), 0, ..., 0) of the hyperboloid.

        Returns
        -------
        Point
        """
        self._require_geodesics()
        coords = np.zeros(self.ambient_dim)
        if self._kind != EUCLIDEAN:
            coords[0] = self.radius
        return Point(self, coords, check=False)

    def points(self):
        """
        All points of a finite metric space.

        Returns
        -------
        list of Point
        """
        if self._kind != FINITE_METRIC:
            raise TypeError("points() is only available for finite metric spaces")
        return [Point(self, i, check=False) for i in range(self.size)]

    def project(self, coords):
        """
        Point closest to the given ambient coordinates (renormalisation onto the sphere or the hyperboloid).

        Parameters
        ----------
        coords : array-like of float
            Ambient coordinates.

        Returns
        -------
        Point
        """
        self._require_geodesics()
        coords = self._as_vector(coords, "coords")
        return Point(self, self._project_raw(coords), check=False)

    ##################
    # Tangent vectors
    ##################

    def tangent(self, p, vector):
        """
        Validated tangent vector at p.

        Parameters
        ----------
        p : Point
            Base point.
        vector : array-like of float
            Ambient components.

        Returns
        -------
        TangentVector
        """
        return TangentVector(p, vector)

    def zero(self, p):
        """
        The tip 0_p of the tangent cone at p.

        Returns
        -------
        TangentVector
        """
        self._require_point(p)
        return TangentVector(p, np.zeros(self.ambient_dim), check=False)

    def project_tangent(self, p, vector):
        """
        Orthogonal projection of an ambient vector onto the tangent space at p.

        Returns
        -------
        TangentVector
        """
        self._require_point(p)
        vector = self._as_vector(vector, "vector")
        return TangentVector(p, self._project_tangent_raw(p.coords, vector), check=False)

    def tangent_basis(self, p):
        """
        Orthonormal basis of the tangent space at p, in ambient coordinates.

        Built by Gram-Schmidt (for the metric of the space) on the projections of the ambient canonical basis,
        taken in order of decreasing projected norm.

        Parameters
        ----------
        p : Point
            Base point.

        Returns
        -------
        list of TangentVector
            dim vectors.
        """
        self._require_point(p)
        self._require_geodesics()
        if self._kind == EUCLIDEAN:
            return [TangentVector(p, e, check=False) for e in np.eye(self._dim)]

        candidates = [self._project_tangent_raw(p.coords, e) for e in np.eye(self.ambient_dim)]
        norms = np.array([math.sqrt(max(self._inner_raw(c, c), 0.0)) for c in candidates])
        basis = []
        for index in np.argsort(-norms, kind="stable"):
            w = candidates[index]
            for b in basis:
                w = w - self._inner_raw(w, b) * b
            norm_w = math.sqrt(max(self._inner_raw(w, w), 0.0))
            if norm_w > 1e-8:
                basis.append(w / norm_w)
            if len(basis) == self._dim:
                break
        return [TangentVector(p, b, check=False) for b in basis]

    ############
    # Geometry
    ############

    def distance(self, a, b):
        """
        Distance between two points.

        Parameters
        ----------
        a, b : Point
            Points of this space.

        Returns
        -------
        float
            d(a, b) >= 0. At most D_kappa on spheres.

        Raises
        ------
        SpaceMismatchError
            If a or b belong to another space.
        """
        self._require_point(a)
        self._require_point(b)
        if self._kind == FINITE_METRIC:
            return float(self._dmatrix[a.coords, b.coords])
        return float(self._dist_raw(a.coords, b.coords))

    def exp(self, v):
        """
        Exponential map: end point gamma(1) of the geodesic with gamma(0) = v.base and initial velocity v.

        Parameters
        ----------
        v : TangentVector
            Tangent vector of this space.

        Returns
        -------
        Point

        Raises
        ------
        CutLocusError
            On spheres, if |v| >= D_kappa.
        """
        if not isinstance(v, TangentVector):
            raise TypeError("v must be a TangentVector")
        self._require_point(v.base)
        if self._kind == SPHERE and v.norm() >= self.diameter:
            raise CutLocusError(
                "tangent vector of norm %r reaches the conjugate distance %r" % (v.norm(), self.diameter)
            )
        return Point(self, self._exp_raw(v.base.coords, v.vector), check=False)

    def log(self, p, x):
        """
        Logarithmic map: initial velocity of the geodesic [0, 1] -> M from p to x.

        Parameters
        ----------
        p, x : Point
            Points of this space.

        Returns
        -------
        TangentVector
            Tangent vector at p of norm d(p, x). The tip 0_p when x == p.

        Raises
        ------
        CutLocusError
            If p and x are antipodal on a sphere (non unique geodesic).
        """
        self._require_point(p)
        self._require_point(x)
        self._require_geodesics()
        return TangentVector(p, self._log_raw(p.coords, x.coords), check=False)

    def geodesic(self, a, b, tau=1.0):
        """
        Geodesic [0, tau] -> M from a to b.

        Returns
        -------
        Geodesic
        """
        v = self.log(a, b)
        return Geodesic(a, v / float(tau), tau)

    def distances_from(self, x, points):
        """
        Distances from x to each of the given points.

        Parameters
        ----------
        x : Point
            Reference point.
        points : iterable of Point
            Points of this space.

        Returns
        -------
        numpy.ndarray
        """
        self._require_point(x)
        points = list(points)
        for point in points:
            self._require_point(point)
        if self._kind == FINITE_METRIC:
            return self._dmatrix[x.coords, [point.coords for point in points]].astype(float)
        if not points:
            return np.zeros(0)
        stacked = np.stack([point.coords for point in points])
        return self._dist_raw(stacked, x.coords[np.newaxis, :])

    def pairwise_distances(self, points):
        """
        Matrix of pairwise distances.

        Parameters
        ----------
        points : sequence of Point
            Points of this space.

        Returns
        -------
        numpy.ndarray
            n x n symmetric matrix with zero diagonal.
        """
        points = list(points)
        for point in points:
            self._require_point(point)
        if self._kind == FINITE_METRIC:
            indices = [point.coords for point in points]
            return self._dmatrix[np.ix_(indices, indices)].astype(float)
        stacked = np.stack([point.coords for point in points])
        matrix = self._dist_raw(stacked[:, np.newaxis, :], stacked[np.newaxis, :, :])
        matrix = 0.5 * (matrix + matrix.T)
        np.fill_diagonal(matrix, 0.0)
        return matrix

    ###########
    # Sampling
    ###########

    def random_unit_tangent(self, rng, p):
        """
        Uniformly distributed unit tangent vector at p.

        Parameters
        ----------
        rng : numpy.random.Generator
            Random generator.
        p : Point
            Base point.

        Returns
        -------
        TangentVector
        """
        basis = self.tangent_basis(p)
        coefficients = rng.standard_normal(len(basis))
        while not np.any(coefficients):
            coefficients = rng.standard_normal(len(basis))
        coefficients /= np.linalg.norm(coefficients)
        vector = sum(c * b.vector for c, b in zip(coefficients, basis))
        return TangentVector(p, vector, check=False)

    def random_point(self, rng, center=None, radius=1.0):
        """
        Random point of the closed geodesic ball B(center, radius).

        The direction is uniform on the unit tangent sphere at center and the distance to center is
        radius * U**(1/dim), U uniform on [0, 1].

        Parameters
        ----------
        rng : numpy.random.Generator
            Random generator.
        center : Point, optional
            Center of the ball. Defaults to origin().
        radius : float, optional
            Radius of the ball (< D_kappa on spheres). Defaults to 1.

        Returns
        -------
        Point
        """
        if center is None:
            center = self.origin()
        if self._kind == SPHERE and radius >= self.diameter:
            raise CutLocusError("ball radius must be smaller than D_kappa")
        direction = self.random_unit_tangent(rng, center)
        r = radius * rng.uniform() ** (1.0 / self._dim)
        return self.exp(direction * r)

    def describe(self):
        """
        Description of the space.

        Returns
        -------
        dict
            {'kind', 'dim', 'kappa'} (plus 'size' for finite metric spaces).
        """
        description = {"kind": self._kind, "dim": self._dim, "kappa": self._kappa}
        if self._kind == FINITE_METRIC:
            description["size"] = self.size
        return description

    ######################
    # Validation helpers
    ######################

    def _require_geodesics(self):
        if not self.supports_geodesics:
            raise TypeError("finite metric spaces only support distance queries")

    def _require_point(self, p):
        if not isinstance(p, Point):
            raise TypeError("expected a Point, got %s" % type(p).__name__)
        if p.space is not self and p.space != self:
            raise SpaceMismatchError("point belongs to a different space")

    def _as_vector(self, values, name):
        try:
            vector = np.array(values, dtype=float)
        except (TypeError, ValueError) as exc:
            raise TypeError("%s must be an array of numbers" % name) from exc
        if vector.shape != (self.ambient_dim,):
            raise TypeError("%s must have %d ambient coordinates" % (name, self.ambient_dim))
        if not np.all(np.isfinite(vector)):
            raise ValueError("%s must be finite" % name)
        return vector

    def _check_coords(self, coords, check):
        """Validates and freezes coordinates for Point.__init__."""
        if self._kind == FINITE_METRIC:
            if isinstance(coords, bool) or not isinstance(coords, (int, np.integer)):
                raise TypeError("finite metric points are row indices (int)")
            coords = int(coords)
            if not 0 <= coords < self.size:
                raise ManifoldError("index %d outside of the %d point space" % (coords, self.size))
            return coords

        vector = self._as_vector(coords, "coords")
        if check:
            if self._kind == SPHERE:
                defect = abs(float(vector @ vector) - 1.0 / self._kappa)
                if defect > MANIFOLD_TOL * max(1.0, 1.0 / self._kappa):
                    raise ManifoldError("point is not on the sphere (|x|^2 - 1/kappa = %r)" % defect)
            elif self._kind == HYPERBOLIC:
                defect = abs(self._inner_raw(vector, vector) - 1.0 / self._kappa)
                if defect > MANIFOLD_TOL * max(1.0, vector[0] ** 2) or vector[0] <= 0:
                    raise ManifoldError("point is not on the upper sheet of the hyperboloid")
        vector.setflags(write=False)
        return vector

    def _check_tangent(self, base, vector, check):
        """Validates and freezes ambient components for TangentVector.__init__."""
        self._require_point(base)
        self._require_geodesics()
        vector = self._as_vector(vector, "vector")
        if check and self._kind != EUCLIDEAN:
            defect = abs(self._inner_raw(vector, base.coords))
            scale = max(1.0, float(np.linalg.norm(vector)) * float(np.linalg.norm(base.coords)))
            if defect > MANIFOLD_TOL * scale:
                raise ManifoldError("vector is not tangent at its base point (defect %r)" % defect)
        vector.setflags(write=False)
        return vector

    @staticmethod
    def _check_dmatrix(dmatrix):
        try:
            matrix = np.array(dmatrix, dtype=float)
        except (TypeError, ValueError) as exc:
            raise TypeError("dmatrix must be a square matrix of numbers") from exc
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1] or matrix.shape[0] < 1:
            raise TypeError("dmatrix must be a square matrix of numbers")
        if not np.all(np.isfinite(matrix)):
            raise MetricError("distance matrix entries must be finite")
        if not np.array_equal(matrix, matrix.T):
            raise MetricError("distance matrix must be symmetric")
        if np.any(np.diag(matrix) != 0.0):
            raise MetricError("distance matrix must have a zero diagonal")
        off_diagonal = ~np.eye(matrix.shape[0], dtype=bool)
        if np.any(matrix[off_diagonal] <= 0.0):
            raise MetricError("distances between distinct points must be positive")
        scale = METRIC_TOL * max(1.0, float(matrix.max()))
        for j in range(matrix.shape[0]):
            # d(i, k) <= d(i, j) + d(j, k) for every i, k
            excess = matrix - (matrix[:, j : j + 1] + matrix[j : j + 1, :])
            if np.any(excess > scale):
                i, k = np.unravel_index(int(np.argmax(excess)), excess.shape)
                raise MetricError(
                    "triangle inequality fails for points (%d, %d, %d)" % (i, j, k)
                )
        matrix.setflags(write=False)
        return matrix

    ######################################
    # Raw kernels (vectorised on axis -1)
    ######################################

    def _inner_raw(self, u, v):
        """Ambient inner product: Euclidean, or Minkowski for hyperbolic spaces."""
        product = np.sum(np.multiply(u, v), axis=-1)
        if self._kind == HYPERBOLIC:
            product = product - 2.0 * np.multiply(u[..., 0], v[..., 0])
        return product

    def _norm_raw(self, v):
        return np.sqrt(np.maximum(self._inner_raw(v, v), 0.0))

    def _project_raw(self, x):
        if self._kind == SPHERE:
            return x * (self.radius / np.linalg.norm(x, axis=-1, keepdims=True))
        if self._kind == HYPERBOLIC:
            projected = np.array(x, dtype=float, copy=True)
            projected[..., 0] = np.sqrt(self.radius**2 + np.sum(x[..., 1:] ** 2, axis=-1))
            return projected
        return x

    def _project_tangent_raw(self, p, v):
        if self._kind == EUCLIDEAN:
            return np.array(v, dtype=float)
        # <p, p> = 1/kappa on both the sphere and the hyperboloid
        coefficient = self._inner_raw(v, p) * self._kappa
        return v - np.expand_dims(coefficient, -1) * p

    def _dist_raw(self, a, b):
        if self._kind == EUCLIDEAN:
            return np.linalg.norm(np.subtract(a, b), axis=-1)
        radius = self.radius
        if self._kind == SPHERE:
            # R * arccos(kappa <a, b>), evaluated as 2R atan2(|a - b|, |a + b|)
            chord = np.linalg.norm(np.subtract(a, b), axis=-1)
            cochord = np.linalg.norm(np.add(a, b), axis=-1)
            return 2.0 * radius * np.arctan2(chord, cochord)
        # R * arccosh(kappa <a, b>_Mink), evaluated through the Minkowski chord
        difference = np.subtract(a, b)
        chord = np.sqrt(np.maximum(self._inner_raw(difference, difference), 0.0))
        return 2.0 * radius * np.arcsinh(chord / (2.0 * radius))

    def _exp_raw(self, p, v):
        if self._kind == EUCLIDEAN:
            return np.add(p, v)
        radius = self.radius
        norm_v = np.expand_dims(self._norm_raw(v), -1)
        theta = norm_v / radius
        safe_norm = np.where(norm_v > 0.0, norm_v, 1.0)
        if self._kind == SPHERE:
            x = np.cos(theta) * p + (radius * np.sin(theta) / safe_norm) * v
        else:
            x = np.cosh(theta) * p + (radius * np.sinh(theta) / safe_norm) * v
        return self._project_raw(x)

    def _log_raw(self, p, x):
        if self._kind == EUCLIDEAN:
            return np.subtract(x, p)
        d = float(self._dist_raw(p, x))
        if d == 0.0:
            return np.zeros(self.ambient_dim)
        if self._kind == SPHERE and math.pi - d / self.radius < ANTIPODAL_TOL:
            raise CutLocusError("log map is not unique at antipodal points")
        u = self._project_tangent_raw(p, np.subtract(x, p))
        norm_u = float(self._norm_raw(u))
        if norm_u == 0.0:
            return np.zeros(self.ambient_dim)
        return (d / norm_u) * u

    def __eq__(self, other):
        """
        Two spaces are equal if they have the same kind, dimension, curvature and distance matrix.
        """
        if not isinstance(other, ModelSpace):
            return NotImplemented
        if self is other:
            return True
        if (self._kind, self._dim, self._kappa) != (other.kind, other.dim, other.kappa):
            return False
        if self._dmatrix is None or other.dmatrix is None:
            return self._dmatrix is None and other.dmatrix is None
        return bool(np.array_equal(self._dmatrix, other.dmatrix))

    def __hash__(self):
        if self._dmatrix is None:
            return hash((self._kind, self._dim, self._kappa))
        return hash((self._kind, self._dmatrix.tobytes()))

    def __repr__(self):
        if self._kind == FINITE_METRIC:
            return "alexgeo.ModelSpace(finite_metric, size=%d)" % self.size
        return "alexgeo.ModelSpace(%s, dim=%d, kappa=%r)" % (self._kind, self._dim, self._kappa)


###########################
# Model-space operations
###########################


def _common_space(a, b):
    if not isinstance(a, Point) or not isinstance(b, Point):
        raise TypeError("a and b must be Point objects")
    if a.space != b.space:
        raise SpaceMismatchError("points belong to different spaces")
    return a.space


def distance(a, b):
    """
    Distance between two points of the same space.

    Parameters
    ----------
    a, b : Point
        Points of the same space.

    Returns
    -------
    float

    Raises
    ------
    SpaceMismatchError
        If a and b belong to different spaces.
    """
    return _common_space(a, b).distance(a, b)


def exp_map(v):
    """
    End point of the geodesic issued from v.base with initial velocity v.

    Parameters
    ----------
    v : TangentVector

    Returns
    -------
    Point

    Raises
    ------
    CutLocusError
        On spheres, if |v| >= D_kappa.
    """
    if not isinstance(v, TangentVector):
        raise TypeError("v must be a TangentVector")
    return v.space.exp(v)


def log_map(p, x):
    """
    Initial velocity of the geodesic [0, 1] -> M from p to x.

    Parameters
    ----------
    p, x : Point
        Points of the same space.

    Returns
    -------
    TangentVector

    Raises
    ------
    CutLocusError
        If p and x are antipodal on a sphere.
    """
    return _common_space(p, x).log(p, x)


def geodesic_point(g, t):
    """
    Point g(t) of a geodesic.

    Parameters
    ----------
    g : Geodesic
    t : float
        Parameter in [0, g.tau].

    Returns
    -------
    Point
    """
    if not isinstance(g, Geodesic):
        raise TypeError("g must be a Geodesic")
    return g.point_at(t)


def path_length(samples, count=100):
    """
    Length of the polyline through the given points (a lower bound of the length of any path through them).

    Parameters
    ----------
    samples : sequence of Point or Geodesic
        At least two points of the same space, or a geodesic to be sampled at count equally spaced parameters.
    count : int, optional
        Number of samples when samples is a Geodesic. Defaults to 100.

    Returns
    -------
    float

    Raises
    ------
    ValueError
        If fewer than two points are given.
    SpaceMismatchError
        If the points belong to different spaces.
    """
    if isinstance(samples, Geodesic):
        samples = samples.sample(count)
    samples = list(samples)
    if len(samples) < 2:
        raise ValueError("path_length needs at least two points")
    space = samples[0].space
    total = 0.0
    for a, b in zip(samples[:-1], samples[1:]):
        if b.space != space:
            raise SpaceMismatchError("points belong to different spaces")
        total += space.distance(a, b)
    return total
