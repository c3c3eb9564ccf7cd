"""
Dual variables of the capacity optimization.
"""

from collections.abc import Iterable

import msgspec

__all__ = ['ScalingPoint', 'ScalingTraceRow']


class ScalingPoint(msgspec.Struct, frozen=True):
    """
    Scaling vectors (x_0..x_{n-1}, y_0..y_{n-1}) of Phi'(x, y) = prod_{i+j<=n} 1/(1 - x_i y_j).

    The gauge x -> c x, y -> y / c is fixed by balancing the mean logs of x and y.

    Attributes:
        x: Row scalings
        y: Column scalings
    """

    x: tuple[float, ...]
    y: tuple[float, ...]

    def is_feasible(self, cells: Iterable[tuple[int, int]]) -> bool:
        """
        True when x_i y_j < 1 on every given cell.
        """

        return all(self.x[i] * self.y[c] < 1.0 for i, c in cells)


class ScalingTraceRow(msgspec.Struct, frozen=True, array_like=True):
    """
    One sweep of the optimizer.

    Attributes:
        sweep: Sweep number, starting at 1
        residual: Marginal residual after the sweep
        dual: Dual objective after the sweep
        phase: `scaling` or `gradient`
    """

    sweep: int
    residual: float
    dual: float
    phase: str = 'scaling'
