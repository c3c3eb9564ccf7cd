"""
The Lidskii formula for the Kostant partition function.

For N_i >= 0,

    K_n(N) = sum_j prod_i C(N_i + n - 1 - i, j_i) K(j - delta),

over weak compositions j of C(n, 2) into n parts, delta = (n-1, ..., 1, 0). The inner value
K(j - delta) is a Kostant value on the n vertices 0..n-1: j - delta has length n, not n+1.
Only compositions with j_i <= N_i + n - i - 1 and j dominating delta give nonzero terms.
"""

import math
from collections.abc import Iterator
from dataclasses import dataclass

from kostant_bounds.application.services.closed_forms import catalan
from kostant_bounds.application.services.exact_count import KostantCounter, inversions_at_most
from kostant_bounds.config.base_settings import get_settings
from kostant_bounds.domain.netflow import NetflowVector
from kostant_bounds.lib.errors import NegativeEntryError, RegimeViolationError, ResourceLimitError
from kostant_bounds.lib.schemas import BoundMethod, BoundReport, WeakComposition

__all__ = [
    'LidskiiTerm',
    'cry_large_t_bounds',
    'cry_large_t_counts',
    'lidskii_bounds',
    'lidskii_count',
    'lidskii_term',
    'lidskii_terms',
    'm_n',
    'positive_compositions',
    's_plus',
]

settings = get_settings()


@dataclass(frozen=True, slots=True)
class LidskiiTerm:
    """
    One summand of the Lidskii formula.

    Attributes:
        composition: The weak composition j.
        binomial: prod_i C(N_i + n - 1 - i, j_i).
        kostant: K(j - delta) on n vertices.
    """

    composition: WeakComposition
    binomial: int
    kostant: int

    @property
    def term(self) -> int:
        return self.binomial * self.kostant


def _require_nonnegative(netflow: NetflowVector) -> None:
    if any(value < 0 for value in netflow.entries[:-1]):
        raise NegativeEntryError(details={'entries': list(netflow.entries)})


def positive_compositions(netflow: NetflowVector, cap: int | None = None) -> Iterator[WeakComposition]:
    """
    Compositions j of C(n, 2) with j_i <= N_i + n - i - 1 and j dominating delta,
    descending lexicographically (largest j_0 first).

    Raises:
        NegativeEntryError: If some N_i < 0 for i < n.
        ResourceLimitError: If more than `cap` compositions are produced.
    """

    _require_nonnegative(netflow)
    cap = cap or settings.count.MAX_COMPOSITIONS
    n = netflow.n
    total = math.comb(n, 2)
    bounds = [netflow.entries[i] + n - i - 1 for i in range(n)]
    parts = [0] * n
    produced = 0

    def place(i: int, remaining: int, excess: int) -> Iterator[WeakComposition]:
        # excess = prefix sum of j - delta so far, kept nonnegative
        nonlocal produced
        if i == n - 1:
            if remaining <= bounds[i]:
                parts[i] = remaining
                produced += 1
                if produced > cap:
                    raise ResourceLimitError('Lidskii composition cap exceeded', details={'cap': cap})
                yield WeakComposition(tuple(parts))
            return
        delta_i = n - 1 - i
        low = max(0, delta_i - excess)
        for value in range(min(bounds[i], remaining), low - 1, -1):
            parts[i] = value
            yield from place(i + 1, remaining - value, excess + value - delta_i)

    yield from place(0, total, 0)


def _binomial(netflow: NetflowVector, parts: tuple[int, ...]) -> int:
    n = netflow.n
    return math.prod(math.comb(netflow.entries[i] + n - 1 - i, part) for i, part in enumerate(parts))


def lidskii_term(netflow: NetflowVector, composition: WeakComposition, counter: KostantCounter | None = None) -> int:
    """
    prod_i C(N_i + n - 1 - i, j_i) K(j - delta); zero when j does not dominate delta.
    """

    _require_nonnegative(netflow)
    if len(composition.parts) != netflow.n or not composition.dominates_delta:
        return 0
    binomial = _binomial(netflow, composition.parts)
    if not binomial:
        return 0
    counter = counter or KostantCounter()
    return binomial * counter.count(composition.shifted)


def lidskii_terms(netflow: NetflowVector) -> Iterator[LidskiiTerm]:
    """
    Every nonzero Lidskii summand, in composition order.
    """

    counter = KostantCounter()
    for composition in positive_compositions(netflow):
        yield LidskiiTerm(
            composition=composition,
            binomial=_binomial(netflow, composition.parts),
            kostant=counter.count(composition.shifted),
        )


def lidskii_count(netflow: NetflowVector) -> int:
    """
    K_n(N) through the Lidskii formula.
    """

    return sum(term.term for term in lidskii_terms(netflow))


def s_plus(netflow: NetflowVector) -> int:
    """
    Number of nonzero Lidskii terms; J_{n-1,t} for (t, 0, ..., 0, -t).
    """

    _require_nonnegative(netflow)
    entries = netflow.entries
    if netflow.n >= 2 and entries[0] > 0 and not any(entries[1:-1]):  # noqa: PLR2004
        return inversions_at_most(netflow.n - 1, entries[0])
    return sum(1 for _ in positive_compositions(netflow))


def m_n(netflow: NetflowVector) -> int:
    """
    The largest Lidskii term.
    """

    return max(term.term for term in lidskii_terms(netflow))


def lidskii_bounds(netflow: NetflowVector) -> BoundReport:
    """
    Certified log m_n <= log K_n(N) <= log(s_plus m_n).
    """

    largest = m_n(netflow)
    return BoundReport(
        log_lower=math.log(largest),
        log_upper=math.log(s_plus(netflow) * largest),
        method=BoundMethod.LIDSKII,
        certified=True,
    )


def cry_large_t_counts(n: int, t: int) -> tuple[int, int]:
    """
    Exact (lower, upper) = (C(t+n-1, C(n,2)) prod_{i<=n-2} C_i, (n-1)! lower) for t >= n^3/2.

    Raises:
        RegimeViolationError: If 2t < n^3.
    """

    if n < 1 or 2 * t < n**3:
        raise RegimeViolationError(details={'n': n, 't': t, 'min_t': n**3 / 2})
    lower = math.comb(t + n - 1, math.comb(n, 2)) * math.prod(catalan(i) for i in range(n - 1))
    return lower, math.factorial(n - 1) * lower


def cry_large_t_bounds(n: int, t: int) -> BoundReport:
    """
    Logs of `cry_large_t_counts`.
    """

    lower, upper = cry_large_t_counts(n, t)
    return BoundReport(
        log_lower=math.log(lower), log_upper=math.log(upper), method=BoundMethod.LIDSKII, certified=True
    )
