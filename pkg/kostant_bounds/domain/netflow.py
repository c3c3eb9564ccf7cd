"""
Netflow vectors on the complete DAG with vertices 0..n.

A netflow N = (N_0, ..., N_{n-1}, -sum N_i) is stored with its partial sums s_k and the
row/column marginals alpha = (s_0, ..., s_{n-1}) and beta = (s_{n-1}, ..., s_0) of the
transportation embedding.
"""

from collections.abc import Sequence
from dataclasses import dataclass, field
from itertools import accumulate

from kostant_bounds.lib.errors import EmptyPolytopeError, LengthMismatchError, NetflowError, NonZeroSumError

__all__ = ['NetflowVector', 'dominates', 'make_netflow', 'parse_netflow']


@dataclass(frozen=True, slots=True)
class NetflowVector:
    """
    Validated integer netflow.

    Attributes:
        entries: N_0..N_n, summing to zero.
        n: Number of the last vertex (entries has length n+1).
        partial_sums: s_0..s_{n-1}, all nonnegative.
    """

    entries: tuple[int, ...]
    n: int = field(init=False)
    partial_sums: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, 'n', len(self.entries) - 1)
        object.__setattr__(self, 'partial_sums', tuple(accumulate(self.entries[:-1])))

    @property
    def alpha(self) -> tuple[int, ...]:
        return self.partial_sums

    @property
    def beta(self) -> tuple[int, ...]:
        return self.partial_sums[::-1]

    @property
    def total(self) -> int:
        """
        Total flow s_{n-1} delivered to the sink.
        """

        return self.partial_sums[-1] if self.partial_sums else 0

    def reverse(self) -> 'NetflowVector':
        """
        Netflow of the reversed DAG (vertex i becomes n-i); K is invariant under this map.
        """

        return NetflowVector(tuple(-value for value in reversed(self.entries)))

    def __str__(self) -> str:
        return ','.join(str(value) for value in self.entries)


def make_netflow(entries: Sequence[int]) -> NetflowVector:
    """
    Build a validated NetflowVector.

    Args:
        entries: N_0..N_n as signed integers.

    Returns:
        The netflow with cached partial sums.

    Raises:
        NetflowError: If fewer than two entries are given.
        NonZeroSumError: If the entries do not sum to zero.
        EmptyPolytopeError: If some partial sum s_k is negative.
    """

    values = tuple(int(value) for value in entries)
    if len(values) < 2:  # noqa: PLR2004
        raise NetflowError('A netflow needs at least two entries', details={'entries': list(values)})
    if sum(values) != 0:
        raise NonZeroSumError(details={'entries': list(values), 'sum': sum(values)})
    netflow = NetflowVector(values)
    negative = [k for k, s in enumerate(netflow.partial_sums) if s < 0]
    if negative:
        raise EmptyPolytopeError(details={'entries': list(values), 'negative_cuts': negative})
    return netflow


def parse_netflow(text: str) -> NetflowVector:
    """
    Parse comma-separated signed integers, e.g. ``1,1,1,-3``.
    """

    try:
        values = [int(part) for part in text.replace(' ', '').split(',') if part]
    except ValueError as exc:
        raise NetflowError(f'Cannot parse netflow `{text}`') from exc
    return make_netflow(values)


def dominates(first: Sequence[int], second: Sequence[int]) -> bool:
    """
    Dominance order: every prefix sum of `first` is at least the matching prefix sum of `second`.

    Raises:
        LengthMismatchError: If the sequences differ in length.
    """

    if len(first) != len(second):
        raise LengthMismatchError(details={'lengths': [len(first), len(second)]})
    return all(a >= b for a, b in zip(accumulate(first), accumulate(second), strict=True))
