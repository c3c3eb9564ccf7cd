"""
SweepService evaluates a named family over a range of sizes.

For every n it places the exact count next to the entropy lower bound at the reference flow,
the Lidskii lower bound and the capacity upper bound, so the table shows how tight each bound is.
"""

from __future__ import annotations

from collections.abc import Iterable
from concurrent.futures import ThreadPoolExecutor

from kostant_bounds.application.services.entropy_bounds import lower_bound_at, upper_bound_at
from kostant_bounds.application.services.exact_count import count_exact
from kostant_bounds.application.services.lidskii import lidskii_bounds
from kostant_bounds.application.services.scaling_opt import solve_entropy
from kostant_bounds.application.services.vertex_average import reference_flow
from kostant_bounds.config.base_settings import get_settings
from kostant_bounds.domain.families import NamedFamily, family
from kostant_bounds.domain.netflow import NetflowVector
from kostant_bounds.lib.errors import NetflowError, NoConvergenceError, ResourceLimitError
from kostant_bounds.lib.logger import logger
from kostant_bounds.lib.schemas import SweepRow

__all__ = ['SweepService']

settings = get_settings()


class SweepService:
    """
    Orchestrates exact counting and every bound over one family.

    Each method degrades independently: a counter or enumerator hitting its limit leaves its
    column empty instead of failing the row.

    Attributes:
        threads: Worker count for evaluating sizes in parallel.
    """

    def __init__(self, threads: int | None = None) -> None:
        self.threads = threads or settings.count.THREADS

    @staticmethod
    def _exact(netflow: NetflowVector) -> int | None:
        try:
            return count_exact(netflow)
        except ResourceLimitError as exc:
            logger.warning('Exact count skipped', netflow=str(netflow), reason=exc.message)
            return None

    @staticmethod
    def _lower_avg(netflow: NetflowVector, params: NamedFamily) -> float | None:
        kind = 'midpoint' if params.tag == 'two_rho' else 'average'
        try:
            return lower_bound_at(reference_flow(netflow, kind), netflow).log_lower
        except ResourceLimitError as exc:
            logger.warning('Vertex average skipped', netflow=str(netflow), reason=exc.message)
            return None

    @staticmethod
    def _lower_lidskii(netflow: NetflowVector) -> float | None:
        try:
            return lidskii_bounds(netflow).log_lower
        except NetflowError:
            return None
        except ResourceLimitError as exc:
            logger.warning('Lidskii bound skipped', netflow=str(netflow), reason=exc.message)
            return None

    @staticmethod
    def _upper(netflow: NetflowVector) -> float | None:
        try:
            result = solve_entropy(netflow)
        except NoConvergenceError as exc:
            logger.warning('Capacity upper bound skipped', netflow=str(netflow), reason=exc.message)
            return None
        return upper_bound_at(result.flow, netflow, result.gap).log_upper

    def row(self, params: NamedFamily, n: int) -> SweepRow:
        """
        Evaluate one family member.

        Args:
            params: Family tag and parameters.
            n: Last vertex.

        Returns:
            The table row; unavailable columns are None.
        """

        netflow = family(params, n)
        exact = self._exact(netflow)
        lower_avg = self._lower_avg(netflow, params)
        lower_lidskii = self._lower_lidskii(netflow)
        upper = self._upper(netflow)

        lowers = [value for value in (lower_avg, lower_lidskii) if value is not None]
        gap = upper - max(lowers) if upper is not None and lowers else None
        logger.debug('Sweep row evaluated', family=params.tag, n=n, exact=exact is not None)
        return SweepRow(
            n=n,
            family=params.tag,
            params=params.describe(),
            K=None if exact is None else str(exact),
            log_lower_avg=lower_avg,
            log_lower_lidskii=lower_lidskii,
            log_upper=upper,
            gap=gap,
        )

    def run(self, params: NamedFamily, n_range: Iterable[int]) -> list[SweepRow]:
        """
        Evaluate every size in `n_range`; rows come back in n order whatever the thread count.

        Raises:
            UnsupportedFamilyError: Unknown family tag.
            BadParamsError: Parameters outside the family's range.
        """

        sizes = sorted(set(n_range))
        for n in sizes:
            family(params, n)
        if self.threads == 1:
            return [self.row(params, n) for n in sizes]
        with ThreadPoolExecutor(max_workers=self.threads) as executor:
            return list(executor.map(lambda n: self.row(params, n), sizes))
