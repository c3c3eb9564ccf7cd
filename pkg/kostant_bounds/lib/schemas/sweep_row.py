"""
Sweep table row schema.
One row per family member: the exact count next to every bound evaluated for it.
"""

import msgspec

from kostant_bounds.config.constants import SWEEP_COLUMNS

__all__ = ['SweepRow']


class SweepRow(msgspec.Struct, frozen=True, kw_only=True):
    """
    Exact count and bounds for one member of a family sweep.

    Attributes:
        n: Last vertex of the netflow.
        family: Family tag.
        params: Compact parameter string of the family.
        K: Exact count as a decimal string; None when the counter hit its limit.
        log_lower_avg: Entropy lower bound at the vertex average (or midpoint).
        log_lower_lidskii: Lidskii lower bound log m_n; None for netflows with negative entries.
        log_upper: Entropy upper bound from the capacity optimizer.
        gap: log_upper minus the best available lower bound.

    Config:
        frozen: Rows are emitted once and never changed
        kw_only: Columns are always named
    """

    n: int
    family: str
    params: str
    K: str | None = None
    log_lower_avg: float | None = None
    log_lower_lidskii: float | None = None
    log_upper: float | None = None
    gap: float | None = None

    def values(self) -> list:
        """
        Field values in table column order.
        """

        return [getattr(self, column) for column in SWEEP_COLUMNS]
