"""
Points of the flow polytope F_n(N) and their transportation embedding.

A flow is stored by its upper entries f_{ij} (0 <= i < j <= n), row i holding
(f_{i,i+1}, ..., f_{i,n}), together with the derived entries
g_j = sum_{i<j} (N_i - f_{ij}) for 0 < j < n.

The embedding phi places f_{ij} at (i, n-j) and g_j at (j, n-j) of an n x n matrix;
cells with i + c > n are zero. Row sums are alpha, column sums are beta.
"""

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction
from numbers import Real

from kostant_bounds.domain.netflow import NetflowVector
from kostant_bounds.lib.errors import InfeasibleFlowError, LengthMismatchError
from kostant_bounds.lib.numeric import as_fraction

__all__ = [
    'FlowMatrix',
    'active_cells',
    'combine',
    'embed',
    'project_box',
    'project_ps',
    'rationalize',
    'repair_upper',
    'support_cells',
]

FLOAT_MARGINAL_TOL = 1e-12


def _is_integral(value: Real) -> bool:
    if isinstance(value, int):
        return True
    if isinstance(value, Fraction):
        return value.denominator == 1
    return False


@dataclass(frozen=True, slots=True)
class FlowMatrix:
    """
    A (not necessarily integral) point of F_n(N).

    Attributes:
        n: Last vertex of the DAG; the embedding is n x n.
        upper: Row i is (f_{i,i+1}, ..., f_{i,n}).
        subdiag: g_1..g_{n-1}.
        integral: True when every entry is an integer.
    """

    n: int
    upper: tuple[tuple[Real, ...], ...]
    subdiag: tuple[Real, ...]
    integral: bool

    @classmethod
    def from_upper(cls, netflow: NetflowVector, upper: Sequence[Sequence[Real]]) -> 'FlowMatrix':
        """
        Build a flow from its upper entries and validate it against the netflow.

        Args:
            netflow: The owning netflow vector.
            upper: Row i holds f_{i,i+1}..f_{i,n}.

        Returns:
            The validated flow with derived subdiagonal entries.

        Raises:
            InfeasibleFlowError: On negative entries or violated netflow constraints.
        """

        n = netflow.n
        rows = tuple(tuple(row) for row in upper)
        if len(rows) != n or any(len(row) != n - i for i, row in enumerate(rows)):
            raise LengthMismatchError('Upper entries do not match the netflow size', details={'n': n})

        exact = all(not isinstance(value, float) for row in rows for value in row)
        scale = max(1, netflow.total)
        inflow = [0] * (n + 1)
        for i, row in enumerate(rows):
            for offset, value in enumerate(row):
                if value < 0:
                    raise InfeasibleFlowError(details={'edge': (i, i + 1 + offset), 'value': str(value)})
                inflow[i + 1 + offset] += value
            residual = sum(row) - inflow[i] - netflow.entries[i]
            violated = residual != 0 if exact else abs(residual) > FLOAT_MARGINAL_TOL * scale
            if violated:
                raise InfeasibleFlowError(
                    'Netflow constraint violated', details={'vertex': i, 'residual': str(residual)}
                )

        subdiag = tuple(netflow.partial_sums[j - 1] - inflow[j] for j in range(1, n))
        for j, value in enumerate(subdiag, start=1):
            if value < (0 if exact else -FLOAT_MARGINAL_TOL * scale):
                raise InfeasibleFlowError('Negative subdiagonal entry', details={'j': j, 'g': str(value)})
        if not exact:
            subdiag = tuple(max(0.0, float(value)) for value in subdiag)

        integral = all(_is_integral(value) for row in rows for value in row) and all(
            _is_integral(value) for value in subdiag
        )
        return cls(n=n, upper=rows, subdiag=subdiag, integral=integral)

    @classmethod
    def from_embedded(cls, netflow: NetflowVector, matrix: Sequence[Sequence[Real]]) -> 'FlowMatrix':
        """
        Inverse of `embed`: read f_{ij} from cell (i, n-j).
        """

        n = netflow.n
        upper = [[matrix[i][n - j] for j in range(i + 1, n + 1)] for i in range(n)]
        return cls.from_upper(netflow, upper)

    @property
    def exact(self) -> bool:
        """
        True when no entry is a float.
        """

        return all(not isinstance(value, float) for value in self.entries())

    def flow(self, i: int, j: int) -> Real:
        """
        The entry f_{ij}, 0 <= i < j <= n.
        """

        return self.upper[i][j - i - 1]

    def entries(self) -> Iterator[Real]:
        """
        Every entry of the embedding that lies on the support.
        """

        for row in self.upper:
            yield from row
        yield from self.subdiag

    def cells(self) -> Iterator[tuple[int, int, Real]]:
        """
        Support cells (row, column, value) of the embedding.
        """

        n = self.n
        for i, row in enumerate(self.upper):
            for offset, value in enumerate(row):
                yield i, n - (i + 1 + offset), value
        for j, value in enumerate(self.subdiag, start=1):
            yield j, n - j, value

    def out_flows(self) -> tuple[Real, ...]:
        """
        x_i = sum_{j>i} f_{ij} for i = 0..n-1.
        """

        return tuple(sum(row) for row in self.upper)


def support_cells(n: int) -> list[tuple[int, int]]:
    """
    Cells {(i, c) : i + c <= n} of the n x n embedding, row-major.
    """

    return [(i, c) for i in range(n) for c in range(n) if i + c <= n]


def active_cells(netflow: NetflowVector) -> list[tuple[int, int]]:
    """
    Support cells not forced to zero by a zero cut.

    The edge cell of f_{ij} is forced to zero when s_k = 0 for some i <= k < j; the cell of
    g_j when s_{j-1} = 0 or s_j = 0.
    """

    n, s = netflow.n, netflow.partial_sums
    active = []
    for i, c in support_cells(n):
        if i + c == n:
            if s[i - 1] > 0 and s[i] > 0:
                active.append((i, c))
        elif all(s[k] > 0 for k in range(i, n - c)):
            active.append((i, c))
    return active


def embed(flow: FlowMatrix, netflow: NetflowVector) -> list[list[Real]]:
    """
    The transportation embedding phi(f) as a dense n x n matrix.

    Raises:
        InfeasibleFlowError: If the flow does not belong to this netflow.
    """

    if flow.n != netflow.n:
        raise InfeasibleFlowError('Flow and netflow sizes differ', details={'flow_n': flow.n, 'n': netflow.n})
    checked = FlowMatrix.from_upper(netflow, flow.upper)
    zero = 0.0 if not checked.exact else 0
    matrix: list[list[Real]] = [[zero] * netflow.n for _ in range(netflow.n)]
    for i, c, value in checked.cells():
        matrix[i][c] = value
    return matrix


def combine(first: FlowMatrix, second: FlowMatrix, weight: Real, netflow: NetflowVector) -> FlowMatrix:
    """
    The convex combination weight * first + (1 - weight) * second.
    """

    upper = [
        [weight * a + (1 - weight) * b for a, b in zip(row_a, row_b, strict=True)]
        for row_a, row_b in zip(first.upper, second.upper, strict=True)
    ]
    return FlowMatrix.from_upper(netflow, upper)


def rationalize(flow: FlowMatrix, netflow: NetflowVector, max_denominator: int) -> FlowMatrix:
    """
    Rationalize float entries and repair them exactly onto the netflow constraints.

    Vertices are processed in order; the outflow residual of vertex i is moved onto its
    largest outgoing edge.

    Raises:
        InfeasibleFlowError: If the repaired point leaves the polytope.
    """

    if flow.exact:
        return FlowMatrix.from_upper(netflow, flow.upper)
    return repair_upper(netflow, flow.upper, max_denominator)


def repair_upper(netflow: NetflowVector, values: Sequence[Sequence[Real]], max_denominator: int) -> FlowMatrix:
    """
    Exact flow closest in spirit to approximate upper entries (see `rationalize`).

    Args:
        netflow: The owning netflow.
        values: Approximate upper entries, row i holding f_{i,i+1}..f_{i,n}.
        max_denominator: Denominator bound of the rationalization.

    Raises:
        InfeasibleFlowError: If the repaired point leaves the polytope.
    """

    n = netflow.n
    upper = [[as_fraction(max(value, 0), max_denominator) for value in row] for row in values]
    inflow = [Fraction(0)] * (n + 1)
    for i, row in enumerate(upper):
        residual = netflow.entries[i] + inflow[i] - sum(row)
        if residual:
            largest = max(range(len(row)), key=row.__getitem__)
            row[largest] += residual
        for offset, value in enumerate(row):
            inflow[i + 1 + offset] += value
    return FlowMatrix.from_upper(netflow, upper)


def project_ps(flow: FlowMatrix, netflow: NetflowVector) -> list[Real]:
    """
    Projection onto the Pitman-Stanley polytope: the sink inflows (f_{0n}, ..., f_{n-2,n}).

    The image satisfies sum_{i<=j} f_{in} <= sum_{i<=j} N_i for every j.
    """

    n = netflow.n
    point = [flow.flow(i, n) for i in range(n - 1)]
    running = 0
    for j, value in enumerate(point):
        running += value
        assert running <= netflow.partial_sums[j] + FLOAT_MARGINAL_TOL * max(1, netflow.total)  # noqa: S101
    return point


def project_box(flow: FlowMatrix, netflow: NetflowVector) -> list[Real]:
    """
    Projection onto the parallelepiped prod_i [N_i, s_i]: x_i = sum_{j>i} f_{ij}.
    """

    point = list(flow.out_flows())
    slack = FLOAT_MARGINAL_TOL * max(1, netflow.total)
    for i, value in enumerate(point):
        assert netflow.entries[i] - slack <= value <= netflow.partial_sums[i] + slack  # noqa: S101
    return point
