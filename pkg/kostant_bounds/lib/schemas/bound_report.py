"""
Bound report schema.
Carries a log-scale lower/upper pair together with the method that produced it.
"""

from enum import StrEnum

import msgspec

__all__ = ['BoundMethod', 'BoundReport']


class BoundMethod(StrEnum):
    """
    Producer of a bound.
    """

    ENTROPY_AT_FLOW = 'entropy_at_flow'
    ENTROPY_OPT = 'entropy_opt'
    LIDSKII = 'lidskii'
    CLOSED_FORM = 'closed_form'
    ASYMPTOTIC = 'asymptotic'


class BoundReport(msgspec.Struct, frozen=True, forbid_unknown_fields=True):
    """
    Natural-log bounds on log K_n(N).

    Attributes:
        log_lower: Lower bound on log K.
        log_upper: Optional upper bound on log K.
        method: Producing method.
        certified: True when the inequality is proven and was applied to exactly feasible data.

    Config:
        frozen: Reports are immutable values
    """

    log_lower: float
    log_upper: float | None = None
    method: BoundMethod = BoundMethod.ENTROPY_AT_FLOW
    certified: bool = False

    def __post_init__(self):
        """
        Certified pairs must be ordered.
        """

        if self.certified and self.log_upper is not None and self.log_lower > self.log_upper:
            raise ValueError(f'Certified bounds out of order: {self.log_lower} > {self.log_upper}')
