#!python
# coding: utf-8

"""
alexgeo command line interface.

    alexgeo jensen --config scenarios.json --out report.json [--csv summary.csv] [--jobs N]
    alexgeo barycenter --measure measure.json [--tol r] [--max-iter N] --out result.json
    alexgeo curv-audit --matrix dist.csv --kappa-min r --kappa-max r [--budget N] [--seed N] --out report.json

Exit codes: 0 on success, 1 on violated or failed trials and numerical failures, 2 on configuration and I/O
errors.
"""

import argparse
import logging
import sys
from . import __version__
from .barycenter import solve_barycenter
from .comparison import estimate_curvature_lower_bound
from .constants import (
    BARYCENTER_MAX_ITER,
    BARYCENTER_TOL,
    BISECTION_RESOLUTION,
    EXIT_CONFIG,
    EXIT_OK,
    EXIT_VIOLATED,
    QUADRUPLE_BUDGET,
)
from .exceptions import ConfigurationError, ConvergenceError, InconclusiveAuditError
from .jensen import run_campaign
from .reader import DistanceMatrixReader, MeasureReader
from .writer import JsonWriter


LOGGER = logging.getLogger(__name__)


def _positive_int(value):
    number = int(value)
    if number < 1:
        raise argparse.ArgumentTypeError("%r is not a positive integer" % value)
    return number


def _positive_float(value):
    number = float(value)
    if not number > 0:
        raise argparse.ArgumentTypeError("%r is not a positive number" % value)
    return number


def build_parser():
    """
    Argument parser of the alexgeo command.

    Returns
    -------
    argparse.ArgumentParser
    """
    parser = argparse.ArgumentParser(
        prog="alexgeo", description="Numerical checks of comparison geometry on model spaces."
    )
    parser.add_argument("--version", action="version", version="%(prog)s " + __version__)
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG log messages"
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    jensen = subparsers.add_parser("jensen", help="run a Jensen inequality campaign")
    jensen.add_argument("--config", required=True, help="JSON campaign configuration")
    jensen.add_argument("--out", required=True, help="JSON report path")
    jensen.add_argument("--csv", default=None, help="CSV summary path")
    jensen.add_argument("--jobs", type=_positive_int, default=1, help="number of worker processes")

    barycenter = subparsers.add_parser("barycenter", help="barycenter of a discrete measure")
    barycenter.add_argument("--measure", required=True, help="JSON measure file")
    barycenter.add_argument("--tol", type=_positive_float, default=BARYCENTER_TOL, help="residual tolerance")
    barycenter.add_argument("--max-iter", type=_positive_int, default=BARYCENTER_MAX_ITER, help="iteration cap")
    barycenter.add_argument("--out", required=True, help="JSON result path")

    audit = subparsers.add_parser("curv-audit", help="curvature lower bound of a distance matrix")
    audit.add_argument("--matrix", required=True, help="CSV distance matrix (no header)")
    audit.add_argument("--kappa-min", type=float, required=True, help="lower end of the curvature range")
    audit.add_argument("--kappa-max", type=float, required=True, help="upper end of the curvature range")
    audit.add_argument("--budget", type=_positive_int, default=QUADRUPLE_BUDGET, help="random quadruple budget")
    audit.add_argument("--seed", type=int, default=0, help="quadruple sampling seed")
    audit.add_argument(
        "--resolution", type=_positive_float, default=BISECTION_RESOLUTION, help="bisection resolution"
    )
    audit.add_argument("--out", required=True, help="JSON report path")
    return parser


def _write_json(path, obj):
    with open(path, "w", encoding="utf-8") as out_file:
        JsonWriter(out_file).write(obj)


def _barycenter(args):
    try:
        with open(args.measure, "r", encoding="utf-8") as measure_file:
            measure = MeasureReader(measure_file).read()
    except (OSError, ConfigurationError) as exc:
        LOGGER.error("cannot load %s: %s", args.measure, exc)
        return EXIT_CONFIG
    try:
        result = solve_barycenter(measure, tol=args.tol, max_iter=args.max_iter)
    except (ConvergenceError, ValueError) as exc:
        LOGGER.error("barycenter failed: %s", exc)
        return EXIT_VIOLATED
    try:
        _write_json(args.out, result)
    except OSError as exc:
        LOGGER.error("cannot write %s: %s", args.out, exc)
        return EXIT_CONFIG
    LOGGER.info("barycenter %s, variance %r", result.point.tolist(), result.variance_at_point)
    return EXIT_OK


def _curv_audit(args):
    if not args.kappa_min < args.kappa_max:
        LOGGER.error("--kappa-min must be smaller than --kappa-max")
        return EXIT_CONFIG
    try:
        with open(args.matrix, "r", encoding="utf-8", newline="") as matrix_file:
            space = DistanceMatrixReader(matrix_file).read()
    except (OSError, ValueError) as exc:
        LOGGER.error("cannot load %s: %s", args.matrix, exc)
        return EXIT_CONFIG
    try:
        report = estimate_curvature_lower_bound(
            space,
            kappa_lo=args.kappa_min,
            kappa_hi=args.kappa_max,
            budget=args.budget,
            seed=args.seed,
            resolution=args.resolution,
        )
    except (InconclusiveAuditError, ValueError) as exc:
        LOGGER.error("curvature audit failed: %s", exc)
        return EXIT_VIOLATED
    try:
        _write_json(args.out, report)
    except OSError as exc:
        LOGGER.error("cannot write %s: %s", args.out, exc)
        return EXIT_CONFIG
    if report.kappa_max_estimate is None:
        LOGGER.error(
            "4-point condition fails at --kappa-min %r (%d violations), no bound in range",
            args.kappa_min,
            len(report.violations),
        )
        return EXIT_VIOLATED
    LOGGER.info("kappa_max estimate %r", report.kappa_max_estimate)
    return EXIT_OK


def main(argv=None):
    """
    Entry point of the alexgeo command.

    Parameters
    ----------
    argv : list of str, optional
        Arguments (defaults to sys.argv[1:]).

    Returns
    -------
    int
        Exit code.
    """
    args = build_parser().parse_args(argv)
    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(level=level, format="%(asctime)s %(name)s %(levelname)s: %(message)s")

    if args.command == "jensen":
        return run_campaign(args.config, args.out, args.csv, args.jobs)
    if args.command == "barycenter":
        return _barycenter(args)
    return _curv_audit(args)


if __name__ == "__main__":
    sys.exit(main())
