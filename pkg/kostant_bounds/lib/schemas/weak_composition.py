"""
Weak compositions of C(n, 2) indexing the Lidskii sum.
"""

from itertools import accumulate

import msgspec

__all__ = ['WeakComposition']


class WeakComposition(msgspec.Struct, frozen=True):
    """
    A weak composition j = (j_0, ..., j_{n-1}).

    Attributes:
        parts: Nonnegative parts summing to C(n, 2)
    """

    parts: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.parts)

    @property
    def shifted(self) -> tuple[int, ...]:
        """
        j - delta with delta = (n-1, ..., 1, 0); a netflow on n vertices.
        """

        n = len(self.parts)
        return tuple(part - (n - 1 - i) for i, part in enumerate(self.parts))

    @property
    def dominates_delta(self) -> bool:
        """
        True when j dominates delta, i.e. every prefix of j - delta is nonnegative.
        """

        return all(prefix >= 0 for prefix in accumulate(self.shifted))
