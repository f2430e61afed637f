#!python
# coding: utf-8

"""
Jensen inequality f(x*) <= int f dmu - (alpha/2) V*_mu for geodesically alpha-convex fields.

jensen_check runs the whole pipeline on one scenario trial (certification of the alpha claim, barycenter,
first-order audit, report), linearization_diagnostic breaks the gap down per support point and run_campaign
runs every trial of a configuration file and writes the JSON and CSV reports.
"""

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import List, Optional
import numpy as np
from .barycenter import check_safe_zone, solve_barycenter
from .constants import (
    ALPHA_REFUTED,
    CONVEX,
    ERROR,
    EXIT_CONFIG,
    EXIT_OK,
    EXIT_VIOLATED,
    GAP_RTOL,
    HOLDS,
    SEED_ENV_VAR,
    UNCERTIFIED,
    VERDICTS,
    VIOLATED,
)
from .exceptions import ConfigurationError
from .geodesic import Geodesic
from .measure import DiscreteMeasure
from .point import Point
from .reader import ScenarioReader
from .scenario import Scenario
from .semiconcave import Ball, certify_alpha, gradient
from .writer import JsonWriter, SummaryWriter


LOGGER = logging.getLogger(__name__)


@dataclass
class JensenReport:
    """
    Outcome of one Jensen trial.

    Attributes
    ----------
    scenario, trial, seed : str, int, int
        Trial identification.
    space : dict
        Description of the space.
    field : str
        Catalog name of f.
    alpha : float
        Modulus claim.
    alpha_certified : bool
    verdict : 'Holds', 'Violated', 'AlphaRefuted', 'Uncertified' or 'Error'
    f_at_barycenter, integral_f, variance_star, bound, gap : float or None
        f(x*), sum_i w_i f(x_i), V_mu(x*), integral_f - (alpha/2) variance_star and bound - f(x*).
    per_point_checks : list of float
        Linearization residuals, one per support point.
    interpolation_checks : list of float
        Slack of the alpha-convexity interpolation at t = 1/2 along [x*, x_i], one per support point.
    barycenter : list of float or None
        Coordinates of x*.
    iterations : int or None
    first_order_audit : float or None
    witness : dict or None
        Refuting geodesic for AlphaRefuted trials.
    error : str or None
        Error message for failed trials.
    """

    scenario: str
    trial: int
    seed: int
    space: dict
    field: str
    alpha: float
    alpha_certified: bool = False
    verdict: str = ERROR
    f_at_barycenter: Optional[float] = None
    integral_f: Optional[float] = None
    variance_star: Optional[float] = None
    bound: Optional[float] = None
    gap: Optional[float] = None
    per_point_checks: List[float] = field(default_factory=list)
    interpolation_checks: List[float] = field(default_factory=list)
    barycenter: Optional[list] = None
    iterations: Optional[int] = None
    first_order_audit: Optional[float] = None
    witness: Optional[dict] = None
    error: Optional[str] = None
    measure: Optional[DiscreteMeasure] = field(default=None, repr=False, compare=False)
    barycenter_point: Optional[Point] = field(default=None, repr=False, compare=False)

    def to_dict(self):
        """
        JSON friendly dictionary (the measure and the barycenter Point are left out, the coordinates stay).

        Returns
        -------
        dict
        """
        return {
            "scenario": self.scenario,
            "trial": self.trial,
            "seed": self.seed,
            "space": self.space,
            "field": self.field,
            "alpha": self.alpha,
            "alpha_certified": self.alpha_certified,
            "verdict": self.verdict,
            "f_at_barycenter": self.f_at_barycenter,
            "integral_f": self.integral_f,
            "variance_star": self.variance_star,
            "bound": self.bound,
            "gap": self.gap,
            "per_point_checks": list(self.per_point_checks),
            "interpolation_checks": list(self.interpolation_checks),
            "barycenter": self.barycenter,
            "iterations": self.iterations,
            "first_order_audit": self.first_order_audit,
            "witness": self.witness,
            "error": self.error,
        }


def _certification_ball(measure):
    """Ball centred at the support point of smallest variance and covering the support."""
    space = measure.space
    matrix = space.pairwise_distances(measure.support)
    variances = (matrix**2) @ measure.weights
    center = int(np.argmin(variances))
    return Ball(measure.support[center], float(matrix[center].max()))


def _is_certified(certification, measure):
    """A claim certified on zero sampled geodesics only counts on a point mass."""
    return certification.certified and (certification.geodesics_checked > 0 or measure.size == 1)


def jensen_check(scenario, trial=0):
    """
    Jensen pipeline on one trial of a scenario.

    Certifies the alpha claim of the field on a ball covering the support, solves the barycenter, audits the
    first-order condition and fills the report. The verdict is 'Holds' iff the claim is certified and
    gap >= -1e-7 (1 + |bound|), 'Violated' otherwise; a refuted claim short-circuits with verdict 'AlphaRefuted'
    and the refuting witness. With certify_budget = 0 no geodesic is sampled, so the claim is not certified: the
    gap is still computed but the verdict is 'Uncertified' whatever its sign (a point mass stays certified).

    Parameters
    ----------
    scenario : Scenario
    trial : int, optional
        Trial number (the trial seed is scenario.seed + trial). Defaults to 0.

    Returns
    -------
    JensenReport

    Raises
    ------
    SafeZoneError
        If the support is too spread out on a sphere.
    ConvergenceError
        If the barycenter solver or the gradient search do not converge.
    """
    if not isinstance(scenario, Scenario):
        raise TypeError("scenario must be a Scenario")
    options = scenario.options
    seed = scenario.trial_seed(trial)
    measure = scenario.measure_for(trial)
    f = scenario.field
    alpha = f.alpha_claim
    check_safe_zone(measure)

    report = JensenReport(
        scenario.name, trial, seed, scenario.space.describe(), f.name, alpha, measure=measure
    )
    certification = certify_alpha(
        f,
        _certification_ball(measure),
        alpha,
        CONVEX,
        budget=options["certify_budget"],
        seed=seed,
        levels=options["certify_levels"],
    )
    if not certification.certified:
        report.verdict = ALPHA_REFUTED
        report.witness = certification.witness.to_dict()
        LOGGER.info("%s trial %d: alpha = %r refuted", scenario.name, trial, alpha)
        return report

    result = solve_barycenter(
        measure,
        tol=options["tol"],
        max_iter=options["max_iter"],
        audit_probes=options["audit_probes"],
        seed=seed,
    )
    x_star = result.point
    report.alpha_certified = _is_certified(certification, measure)
    report.barycenter_point = x_star
    report.barycenter = x_star.tolist()
    report.iterations = result.iterations
    report.first_order_audit = result.first_order_report
    report.f_at_barycenter = f(x_star)
    report.integral_f = measure.integrate(f)
    report.variance_star = result.variance_at_point
    report.bound = report.integral_f - 0.5 * alpha * report.variance_star
    report.gap = report.bound - report.f_at_barycenter
    if not report.alpha_certified:
        report.verdict = UNCERTIFIED
    elif report.gap >= -GAP_RTOL * (1.0 + abs(report.bound)):
        report.verdict = HOLDS
    else:
        report.verdict = VIOLATED

    if options["diagnostic"]:
        report.per_point_checks = linearization_diagnostic(scenario, report)
        report.interpolation_checks = interpolation_checks(f, measure, x_star, alpha)
    LOGGER.info("%s trial %d: gap %r, verdict %s", scenario.name, trial, report.gap, report.verdict)
    return report


def linearization_diagnostic(scenario, report):
    """
    Per support point residuals r_i = f(x_i) + <log_x*(x_i), grad(-f)(x*)> - (alpha/2) d(x*, x_i)**2 - f(x*).

    Every r_i is non-negative for an alpha-convex f, and sum_i w_i r_i equals the gap up to the first-order
    residual of x*. grad(-f) is the closed-form gradient when available, otherwise the numeric gradient of the
    (-alpha)-concave field -f.

    Parameters
    ----------
    scenario : Scenario
    report : JensenReport
        Completed report (certified claim and barycenter).

    Returns
    -------
    list of float

    Raises
    ------
    ValueError
        If the report has no barycenter (refuted or failed trial).
    """
    if report.barycenter_point is None or report.measure is None:
        raise ValueError("linearization_diagnostic needs a report with a barycenter")
    f = scenario.field
    x_star = report.barycenter_point
    space = x_star.space
    alpha = report.alpha

    negative = f.negated()
    grad = None if scenario.options["numeric_gradient"] else negative.gradient_at(x_star)
    if grad is None:
        grad = gradient(
            negative,
            x_star,
            negative.alpha_claim,
            search_budget=scenario.options["search_budget"],
            seed=report.seed,
        )
    residuals = []
    for x, _ in report.measure:
        log = space.log(x_star, x)
        residual = f(x) + log.inner(grad) - 0.5 * alpha * log.norm() ** 2 - report.f_at_barycenter
        residuals.append(residual)
    return residuals


def interpolation_checks(f, measure, x_star, alpha, t=0.5):
    """
    Slack of (1-t) f(x*) + t f(x_i) - (alpha/2) t (1-t) d(x*, x_i)**2 - f(gamma_i(t)) for the geodesics gamma_i
    from x* to the support points (non-negative for an alpha-convex f).

    Returns
    -------
    list of float
    """
    space = measure.space
    f_star = f(x_star)
    slacks = []
    for x, _ in measure:
        if x == x_star:
            slacks.append(0.0)
            continue
        geodesic = Geodesic.between(x_star, x)
        d = geodesic.length
        rhs = (1.0 - t) * f_star + t * f(x) - 0.5 * alpha * t * (1.0 - t) * d**2
        slacks.append(rhs - f(geodesic.point_at(t)))
    return slacks


###########
# Campaign
###########


def _run_trial(task):
    """Runs one (config entry, index, trial, seed override) task; errors become 'Error' reports."""
    entry, index, trial, seed_override = task
    scenario = Scenario.from_dict(entry, index, seed_override)
    try:
        return jensen_check(scenario, trial)
    except (ArithmeticError, RuntimeError, ValueError) as exc:
        LOGGER.warning("%s trial %d failed: %s", scenario.name, trial, exc)
        return JensenReport(
            scenario.name,
            trial,
            scenario.trial_seed(trial),
            scenario.space.describe(),
            scenario.field.name,
            scenario.field.alpha_claim,
            verdict=ERROR,
            error="%s: %s" % (type(exc).__name__, exc),
        )


def _seed_override():
    value = os.environ.get(SEED_ENV_VAR)
    if value is None or value == "":
        return None
    try:
        seed = int(value)
    except ValueError as exc:
        raise ConfigurationError("%s must be an integer, got %r" % (SEED_ENV_VAR, value)) from exc
    if seed < 0:
        raise ConfigurationError("%s must be non-negative" % SEED_ENV_VAR)
    return seed


def run_campaign(config_path, out_path, csv_path=None, jobs=1):
    """
    Runs every trial of a configuration file.

    Reports are written as a JSON array to out_path and, when csv_path is given, as a CSV summary with one row per
    trial. Rows are ordered by scenario then trial whatever the number of jobs. The ALEXGEO_SEED environment
    variable overrides the base seed of every scenario.

    Parameters
    ----------
    config_path : str or path-like
        JSON configuration with a top-level 'scenarios' array.
    out_path : str or path-like
        JSON report path.
    csv_path : str or path-like, optional
        CSV summary path.
    jobs : int, optional
        Number of worker processes. Defaults to 1.

    Returns
    -------
    int
        0 when every trial holds or has a refuted alpha claim, 1 if a trial is violated or failed, 2 on
        configuration or I/O errors.
    """
    try:
        seed_override = _seed_override()
        with open(config_path, "r", encoding="utf-8") as config_file:
            scenarios = ScenarioReader(config_file, seed_override).read()
    except (OSError, ConfigurationError) as exc:
        LOGGER.error("cannot load %s: %s", config_path, exc)
        return EXIT_CONFIG

    tasks = [
        (scenario.config, scenario.index, trial, seed_override)
        for scenario in scenarios
        for trial in range(scenario.trials)
    ]
    LOGGER.info("running %d trials of %d scenarios with %d jobs", len(tasks), len(scenarios), jobs)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_run_trial, tasks))
    else:
        reports = [_run_trial(task) for task in tasks]

    try:
        with open(out_path, "w", encoding="utf-8") as out_file:
            JsonWriter(out_file).write(reports)
        if csv_path is not None:
            with open(csv_path, "w", encoding="utf-8", newline="") as csv_file:
                writer = SummaryWriter(csv_file)
                writer.writeheader()
                writer.writerows(reports)
    except OSError as exc:
        LOGGER.error("cannot write reports: %s", exc)
        return EXIT_CONFIG

    counts = {verdict: 0 for verdict in VERDICTS}
    for report in reports:
        counts[report.verdict] += 1
    LOGGER.info("campaign finished: %s", ", ".join("%s %d" % item for item in counts.items()))
    if counts[VIOLATED] or counts[ERROR]:
        return EXIT_VIOLATED
    return EXIT_OK
