#!python
# coding: utf-8

"""
Constants used throughout the whole package.
These include the names of the supported spaces, catalog fields, check statuses and verdicts,
as well as every default tolerance and budget used by the numerical routines.
"""

import math

# SPACE KINDS
EUCLIDEAN = "euclidean"
SPHERE = "sphere"
HYPERBOLIC = "hyperbolic"
FINITE_METRIC = "finite_metric"
SPACE_KINDS = (EUCLIDEAN, SPHERE, HYPERBOLIC, FINITE_METRIC)
GEODESIC_SPACE_KINDS = (EUCLIDEAN, SPHERE, HYPERBOLIC)

# TOLERANCES
MANIFOLD_TOL = 1e-10  # on-manifold and tangency checks
ANTIPODAL_TOL = 1e-8  # angular gap to the cut locus below which log is refused
METRIC_TOL = 1e-12  # triangle inequality slack for distance matrices
ANGLE_SUM_TOL = 1e-9  # 4-point condition slack
SIDE_COMPARISON_TOL = 1e-9
CERTIFY_SLACK = 1e-9  # midpoint convexity slack
WEIGHT_SUM_TOL = 1e-12
GAP_RTOL = 1e-7  # Jensen verdict: gap >= -GAP_RTOL * (1 + |bound|)
GRADIENT_CROSSCHECK_TOL = 1e-5
DIRECTION_SUP_TOL = 1e-6

# NUMERIC LIMITS (tangent cone)
LIMIT_T0 = 0.1
LIMIT_HALVINGS = 12
LIMIT_ORDER = 2  # error expansion in t**2
LIMIT_RTOL = 1e-8

# DIFFERENTIALS
DIFFERENTIAL_LEVELS = 20  # dyadic grid t = tau * 2**-k, k = 0..20
DIFFERENTIAL_RTOL = 1e-8
DIFFERENTIAL_TAU = 0.5  # length of the probing geodesic for unit directions
SUP_MONOTONE_SLACK = 1e-7

# GRADIENT SEARCH
GRADIENT_MULTISTART = 32
GRADIENT_SWEEPS = 20
GRADIENT_XATOL = 1e-10

# CERTIFICATION
CERTIFY_BUDGET = 32
CERTIFY_LEVELS = 5  # dyadic grid with 2**5 + 1 points per geodesic

# CURVATURE AUDIT
QUADRUPLE_BUDGET = 50000
EXHAUSTIVE_BELOW = 15
BISECTION_RESOLUTION = 1e-3
MAX_REPORTED_VIOLATIONS = 100

# BARYCENTER
BARYCENTER_STEP = 1.0
BARYCENTER_TOL = 1e-10
BARYCENTER_MAX_ITER = 10000
AUDIT_PROBES = 16
GRID_RESOLUTION = 200

# CHECK STATUSES
PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"
CHECK_STATUSES = (PASS, FAIL, INCONCLUSIVE)

# CONVEXITY MODES
CONVEX = "convex"
CONCAVE = "concave"
MODES = (CONVEX, CONCAVE)

# JENSEN VERDICTS
HOLDS = "Holds"
VIOLATED = "Violated"
ALPHA_REFUTED = "AlphaRefuted"
UNCERTIFIED = "Uncertified"
ERROR = "Error"
VERDICTS = (HOLDS, VIOLATED, ALPHA_REFUTED, UNCERTIFIED, ERROR)

# SCALAR FIELD CATALOG
SQUARED_DISTANCE_TO = "SquaredDistanceTo"
DISTANCE_TO = "DistanceTo"
LINEAR = "Linear"
NEG_SQUARED_DISTANCE_TO = "NegSquaredDistanceTo"
CONSTANT = "Constant"
FIELD_CATALOG = (
    SQUARED_DISTANCE_TO,
    DISTANCE_TO,
    LINEAR,
    NEG_SQUARED_DISTANCE_TO,
    CONSTANT,
)

# CAMPAIGN OUTPUT
SEED_ENV_VAR = "ALEXGEO_SEED"
FLOAT_FORMAT = "%.17g"
CSV_HEADER = (
    "scenario",
    "trial",
    "seed",
    "space",
    "kappa",
    "dim",
    "field",
    "alpha",
    "f_star",
    "integral_f",
    "variance_star",
    "gap",
    "verdict",
)

# EXIT CODES
EXIT_OK = 0
EXIT_VIOLATED = 1
EXIT_CONFIG = 2

TWO_PI = 2.0 * math.pi
