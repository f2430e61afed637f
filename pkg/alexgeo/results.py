#!python
# coding: utf-8

"""
CheckResult - Outcome of a numerical check (pass, fail or inconclusive).
"""

from dataclasses import dataclass, field
from typing import Optional
from .constants import CHECK_STATUSES, FAIL, INCONCLUSIVE, PASS


@dataclass(frozen=True)
class CheckResult:
    """
    Outcome of a check.

    Attributes
    ----------
    status : 'pass', 'fail' or 'inconclusive'
        Outcome.
    value : float or None
        Signed quantity measured by the check (angle-sum excess over 2*pi, comparison deficit, inequality gap).
        Positive values are violations.
    details : dict
        Check specific values (angles, distances, both sides of an inequality).
    """

    status: str
    value: Optional[float] = None
    details: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.status not in CHECK_STATUSES:
            raise TypeError("status must be one of: %s" % ", ".join(CHECK_STATUSES))

    @property
    def passed(self):
        """return passed."""
        return self.status == PASS

    @property
    def failed(self):
        """return failed."""
        return self.status == FAIL

    @property
    def inconclusive(self):
        """return inconclusive."""
        return self.status == INCONCLUSIVE
