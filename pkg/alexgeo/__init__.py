#!python
# coding: utf-8

"""
alexgeo

Numerical companion to comparison geometry with curvature bounded below.
Model spaces (Euclidean, spheres, hyperboloids) and finite metric spaces, comparison angles and the 4-point
condition, tangent cones, semiconcave functions and their gradients, barycenters of discrete measures and the
alpha-convex Jensen inequality f(x*) <= int f dmu - (alpha/2) V*_mu.

ex:
    > import alexgeo
    > plane = alexgeo.ModelSpace.euclidean(2)
    > mu = alexgeo.DiscreteMeasure.uniform([plane.point([1, 0]), plane.point([-1, 0])])
    > alexgeo.solve_barycenter(mu).point.tolist()
    [0.0, 0.0]

ex:
    > import alexgeo
    > alexgeo.comparison_angle(0, 1, 1, 2 ** 0.5)
    1.5707963267948966

ex:
    > import alexgeo
    > with open('dist.csv', newline='') as matrix_file:
    >   space = alexgeo.DistanceMatrixReader(matrix_file).read()
    > alexgeo.estimate_curvature_lower_bound(space, kappa_lo=-1, kappa_hi=1).kappa_max_estimate
"""

__author__ = "alexgeo developers"
__credits__ = ["alexgeo developers"]
__version__ = "0.1.0"
__license__ = "GPLv3"


from .constants import *
from .exceptions import *
from .point import Point
from .modelspace import ModelSpace, distance, exp_map, geodesic_point, log_map, path_length
from .tangentvector import TangentVector
from .geodesic import Geodesic
from .numerics import numeric_limit, richardson_extrapolate
from .results import CheckResult
from .comparison import (
    ComparisonTriangle,
    CurvatureAuditReport,
    build_comparison_triangle,
    c_kappa,
    comparison_angle,
    comparison_cosine,
    estimate_curvature_lower_bound,
    find_four_point_violation,
    four_point_check,
    model_diameter,
    s_kappa,
    side_comparison_check,
    versine_kappa,
)
from .cone import (
    ConePoint,
    angle_between_geodesics,
    cone_distance,
    cone_inner_product,
    geodesic_direction,
    geodesic_separation_rate,
    inner_product,
    metric_speed,
    midpoint_limit,
    norm,
)
from .scalarfield import ScalarField
from .semiconcave import (
    Ball,
    CertificationResult,
    Witness,
    certify_alpha,
    differential,
    differential_along,
    direction_sup_inequality_check,
    estimate_lipschitz,
    gradient,
    max_unit_differential,
)
from .measure import DiscreteMeasure
from .barycenter import (
    BarycenterResult,
    check_safe_zone,
    first_order_audit,
    grid_search_variance,
    solve_barycenter,
    variance,
)
from .recordformat import RecordFormat
from .scenario import Scenario
from .reader import DistanceMatrixReader, MeasureReader, ScenarioReader
from .writer import JsonWriter, SummaryWriter
from .jensen import JensenReport, interpolation_checks, jensen_check, linearization_diagnostic, run_campaign
