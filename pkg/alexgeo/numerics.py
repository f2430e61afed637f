#!python
# coding: utf-8

"""
Numerical limits by Richardson extrapolation.
"""

import logging
import numpy as np
from .exceptions import ExtrapolationError


LOGGER = logging.getLogger(__name__)


def richardson_extrapolate(base_values, p, r=2.0):
    """
    Richardson extrapolation of a sequence of approximations.

    Given approximations A(h), A(h/r), A(h/r**2), ... of a limit A with error expansion
    c1 h**p + c2 h**(2p) + ..., successive tableau columns eliminate the terms h**p, h**(2p), ...

    Parameters
    ----------
    base_values : sequence of float
        Approximations at step sizes decreasing by the factor r.
    p : int
        Order of the leading error term.
    r : float, optional
        Step size reduction factor. Defaults to 2.

    Returns
    -------
    float
        The most extrapolated tableau entry.

    Raises
    ------
    ValueError
        If base_values is empty.
    """
    n = len(base_values)
    if n < 1:
        raise ValueError("richardson_extrapolate needs at least one value")
    vals = [float(v) for v in base_values]
    for j in range(1, n):
        factor = r ** (p * j)
        for k in range(n - 1, j - 1, -1):
            vals[k] = (factor * vals[k] - vals[k - 1]) / (factor - 1.0)
    return vals[-1]


def numeric_limit(func, t0, halvings, order=2, rtol=1e-8):
    """
    Limit of func(t) as t -> 0+.

    func is sampled at t0 * 2**-k, k = 0..halvings, and the sequence is Richardson extrapolated with the given
    error order. The limit is declared when two consecutive extrapolants differ by less than
    rtol * max(1, |value|).

    Parameters
    ----------
    func : callable
        float -> float.
    t0 : float
        Largest sampling parameter.
    halvings : int
        Maximum number of halvings of t0.
    order : int, optional
        Order of the error expansion in t (2 for even expansions). Defaults to 2.
    rtol : float, optional
        Convergence tolerance. Defaults to 1e-8.

    Returns
    -------
    float

    Raises
    ------
    ExtrapolationError
        If the extrapolants do not stabilise within halvings steps.
    """
    values = []
    previous = None
    change = np.inf
    for k in range(halvings + 1):
        values.append(float(func(t0 / 2.0**k)))
        estimate = richardson_extrapolate(values, order)
        if previous is not None:
            change = abs(estimate - previous)
            LOGGER.debug("limit level %d: estimate %r, change %r", k, estimate, change)
            if change <= rtol * max(1.0, abs(estimate)):
                return estimate
        previous = estimate
    raise ExtrapolationError(
        "numeric limit did not stabilise after %d halvings (last change %r)" % (halvings, change)
    )
