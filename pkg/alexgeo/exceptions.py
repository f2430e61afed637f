#!python
# coding: utf-8

"""
Exceptions and warnings raised by alexgeo.

Wrong argument types raise the builtin TypeError. Everything below signals a geometric or numerical
condition and derives from ValueError (bad input data) or RuntimeError (a computation that did not settle).
"""


class SpaceMismatchError(ValueError):
    """Points, vectors or geodesics from different spaces (or base points) were combined."""


class ManifoldError(ValueError):
    """Coordinates are not on the manifold, or a vector is not tangent at its base point."""


class CutLocusError(ValueError):
    """A log map at an antipodal pair, or a tangent vector reaching the conjugate distance."""


class DegenerateTriangleError(ValueError):
    """Zero side adjacent to the apex, triangle inequality failure or perimeter overflow."""


class SafeZoneError(ValueError):
    """A region or a support leaves the domain where geodesics and logs are unique."""


class MetricError(ValueError):
    """A distance matrix is not a metric."""


class ConfigurationError(ValueError):
    """A scenario, measure or matrix file cannot be turned into alexgeo objects."""


class ConvergenceError(RuntimeError):
    """An iterative solver or search exhausted its budget."""


class ExtrapolationError(ConvergenceError):
    """A numeric limit did not stabilise within its tolerance."""


class InconclusiveAuditError(RuntimeError):
    """Every checked quadruple had an undefined comparison angle."""


class GradientMismatchWarning(UserWarning):
    """Numeric and closed-form gradients disagree beyond tolerance."""


class LocalMinimumWarning(UserWarning):
    """A barycenter iteration stopped at a point with larger variance than some support point."""
