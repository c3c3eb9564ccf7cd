"""
Exact evaluation of the Kostant partition function.

`count_exact` peels the sink of the complete DAG: every integer flow restricts to a split
of the sink demand over the earlier vertices, and the remaining flow is an integer flow
of the truncated netflow. Results are memoised on the residual netflow vector.
"""

from __future__ import annotations

import math
import threading
from collections.abc import Iterator, Sequence
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from itertools import accumulate

import networkx as nx
import sympy

from kostant_bounds.config.base_settings import get_settings
from kostant_bounds.domain.flow_matrix import FlowMatrix
from kostant_bounds.domain.netflow import NetflowVector
from kostant_bounds.lib.errors import BadParamsError, DisconnectedError, ResourceLimitError
from kostant_bounds.lib.logger import logger
from kostant_bounds.lib.schemas import Dag

__all__ = [
    'KostantCounter',
    'count_brute',
    'count_exact',
    'count_paths',
    'count_unit_flows_det',
    'count_unit_flows_perm',
    'fit_recurrence',
    'inversion_numbers',
    'inversions_at_most',
    'iter_integer_flows',
    'partition_count',
    'unit_flow_matrix',
]

settings = get_settings()


def _sink_splits(prefix: Sequence[int], demand: int) -> Iterator[tuple[int, ...]]:
    """
    Splits (f_0, ..., f_{m-1}) of `demand` with sum_{i<=k} f_i <= prefix[k] for every k.

    `demand` equals prefix[-1] for a netflow, so the last part is always nonnegative.
    """

    m = len(prefix)
    # a running sum after position i may not exceed any later prefix bound
    caps = list(accumulate(reversed(prefix), min))[::-1]
    split = [0] * m

    def place(i: int, running: int) -> Iterator[tuple[int, ...]]:
        if i == m - 1:
            split[i] = demand - running
            yield tuple(split)
            return
        for value in range(min(caps[i], demand) - running + 1):
            split[i] = value
            yield from place(i + 1, running + value)

    yield from place(0, 0)


class KostantCounter:
    """
    Memoised counter of integer flows with a bounded state table.

    The memo is shared by every call on the same instance; access is serialised by a lock so
    an instance may be shared between worker threads.

    Attributes:
        max_states: Largest number of memoised residual netflows.
    """

    def __init__(self, max_states: int | None = None) -> None:
        self.max_states = max_states or settings.count.MAX_STATES
        self._memo: dict[tuple[int, ...], int] = {}
        self._lock = threading.RLock()

    @property
    def states(self) -> int:
        return len(self._memo)

    def count(self, entries: Sequence[int]) -> int:
        """
        K of a netflow given by its entries (sum zero, nonnegative prefix sums).
        """

        values = tuple(entries)
        reversed_values = tuple(-value for value in reversed(values))
        # the answer is orientation-free; peel the smaller sink demand
        if abs(reversed_values[-1]) < abs(values[-1]):
            values = reversed_values
        with self._lock:
            return self._count(values)

    def _count(self, values: tuple[int, ...]) -> int:
        if len(values) == 1:
            return 1
        cached = self._memo.get(values)
        if cached is not None:
            return cached

        head = values[:-1]
        prefix = list(accumulate(head))
        total = 0
        for split in _sink_splits(prefix, -values[-1]):
            total += self._count(tuple(value - taken for value, taken in zip(head, split, strict=True)))

        self._memo[values] = total
        if len(self._memo) > self.max_states:
            raise ResourceLimitError(
                'Dynamic programming state cap exceeded', details={'max_states': self.max_states}
            )
        return total


def count_exact(netflow: NetflowVector, max_states: int | None = None) -> int:
    """
    K_n(N), the number of integer flows on the complete DAG with netflow N.

    Args:
        netflow: A validated netflow vector.
        max_states: Memo cap; defaults to `KOSTANT_MAX_STATES`.

    Returns:
        The exact count.

    Raises:
        ResourceLimitError: If the memo grows beyond the cap.
    """

    counter = KostantCounter(max_states)
    value = counter.count(netflow.entries)
    logger.debug('Exact count finished', netflow=str(netflow), states=counter.states)
    return value


class _Budget:
    """
    Visit counter shared by the brute-force workers.
    """

    def __init__(self, cap: int) -> None:
        self.cap = cap
        self.visited = 0
        self._lock = threading.Lock()

    def spend(self) -> None:
        with self._lock:
            self.visited += 1
            if self.visited > self.cap:
                raise ResourceLimitError('Enumeration cap exceeded', details={'cap': self.cap})


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """
    Weak compositions of `total` into `parts` parts, lexicographically descending.
    """

    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first, *rest)


def _iter_upper(
    netflow: NetflowVector,
    budget: _Budget,
    vertex: int = 0,
    inflow: tuple[int, ...] | None = None,
    rows: tuple[tuple[int, ...], ...] = (),
) -> Iterator[tuple[tuple[int, ...], ...]]:
    n = netflow.n
    inflow = inflow if inflow is not None else (0,) * (n + 1)
    if vertex == n:
        yield rows
        return
    outflow = netflow.entries[vertex] + inflow[vertex]
    if outflow < 0:
        return
    for row in _compositions(outflow, n - vertex):
        budget.spend()
        updated = list(inflow)
        for offset, value in enumerate(row):
            updated[vertex + 1 + offset] += value
        yield from _iter_upper(netflow, budget, vertex + 1, tuple(updated), (*rows, row))


def iter_integer_flows(netflow: NetflowVector, cap: int | None = None) -> Iterator[FlowMatrix]:
    """
    Every integral point of F_n(N), vertex by vertex and lexicographically descending.

    Raises:
        ResourceLimitError: If more than `cap` partial flows are visited.
    """

    budget = _Budget(cap or settings.count.BRUTE_CAP)
    for rows in _iter_upper(netflow, budget):
        yield FlowMatrix.from_upper(netflow, rows)


def count_brute(netflow: NetflowVector, cap: int | None = None, threads: int | None = None) -> int:
    """
    K_n(N) by exhaustive enumeration; an oracle independent of `count_exact`.

    With several threads the first vertex's choices are fanned out over a pool; the
    visit cap is shared.

    Raises:
        ResourceLimitError: If more than `cap` partial flows are visited.
    """

    budget = _Budget(cap or settings.count.BRUTE_CAP)
    threads = threads or settings.count.THREADS
    n = netflow.n
    first_rows = list(_compositions(netflow.entries[0], n)) if netflow.entries[0] >= 0 else []

    def count_from(row: tuple[int, ...]) -> int:
        budget.spend()
        inflow = [0] * (n + 1)
        for offset, value in enumerate(row):
            inflow[1 + offset] += value
        return sum(1 for _ in _iter_upper(netflow, budget, 1, tuple(inflow), (row,)))

    if threads > 1 and len(first_rows) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            total = sum(pool.map(count_from, first_rows))
    else:
        total = sum(count_from(row) for row in first_rows)
    logger.debug('Brute-force count finished', netflow=str(netflow), visited=budget.visited)
    return total


def _require_connected(dag: Dag) -> nx.MultiDiGraph:
    graph = dag.to_networkx()
    if dag.n_vertices < 2 or not nx.is_weakly_connected(graph):  # noqa: PLR2004
        raise DisconnectedError(details={'n_vertices': dag.n_vertices, 'edges': [list(e) for e in dag.edges]})
    return graph


def unit_flow_matrix(dag: Dag, sign: int = -1) -> list[list[int]]:
    """
    The n x n matrix with `sign` on the subdiagonal and the multiplicity of edge (i, j+1) at (i, j).

    sign = -1 gives N_G, sign = +1 gives M_G.
    """

    n = dag.n_vertices - 1
    matrix = [[0] * n for _ in range(n)]
    for i in range(1, n):
        matrix[i][i - 1] = sign
    for i, j in dag.edges:
        matrix[i][j - 1] += 1
    return matrix


def count_unit_flows_det(dag: Dag) -> int:
    """
    Number of unit flows from the first to the last vertex of a connected DAG, as det(N_G).

    Raises:
        DisconnectedError: If the DAG is not weakly connected.
    """

    _require_connected(dag)
    return int(sympy.Matrix(unit_flow_matrix(dag, sign=-1)).det(method='bareiss'))


def count_unit_flows_perm(dag: Dag) -> int:
    """
    The same count as perm(M_G), by Ryser's formula.
    """

    _require_connected(dag)
    matrix = unit_flow_matrix(dag, sign=1)
    n = len(matrix)
    total = 0
    for mask in range(1, 1 << n):
        columns = [j for j in range(n) if mask >> j & 1]
        product = 1
        for row in matrix:
            product *= sum(row[j] for j in columns)
            if not product:
                break
        total += (-1) ** len(columns) * product
    return (-1) ** n * total


def count_paths(dag: Dag) -> int:
    """
    Number of directed paths from vertex 0 to the last vertex, parallel edges counted separately.
    """

    graph = _require_connected(dag)
    ways = dict.fromkeys(graph.nodes, 0)
    ways[0] = 1
    for node in nx.topological_sort(graph):
        for _, successor in graph.out_edges(node):
            ways[successor] += ways[node]
    return ways[dag.n_vertices - 1]


def inversion_numbers(n: int) -> list[int]:
    """
    I_{n,0..C(n,2)}: coefficients of [n]_q! = prod_{k=1}^n (1 + q + ... + q^{k-1}).
    """

    if n < 0:
        raise BadParamsError('n must be nonnegative', details={'n': n})
    coefficients = [1]
    for k in range(2, n + 1):
        product = [0] * (len(coefficients) + k - 1)
        for degree, value in enumerate(coefficients):
            for shift in range(k):
                product[degree + shift] += value
        coefficients = product
    return coefficients


def inversions_at_most(n: int, k: int) -> int:
    """
    J_{n,k}: permutations of n letters with at most k inversions.
    """

    if k < 0:
        raise BadParamsError('k must be nonnegative', details={'k': k})
    if k >= math.comb(n, 2):
        return math.factorial(n)
    return sum(inversion_numbers(n)[: k + 1])


def partition_count(t: int) -> int:
    """
    p(t) by Euler's pentagonal number recurrence.
    """

    if t < 0:
        raise BadParamsError('t must be nonnegative', details={'t': t})
    table = [1] + [0] * t
    for m in range(1, t + 1):
        total, k = 0, 1
        while True:
            first = m - k * (3 * k - 1) // 2
            if first < 0:
                break
            second = m - k * (3 * k + 1) // 2
            sign = 1 if k % 2 else -1
            total += sign * table[first]
            if second >= 0:
                total += sign * table[second]
            k += 1
        table[m] = total
    return table[t]


def fit_recurrence(sequence: Sequence[int], max_order: int, holdout: int = 3) -> list[Fraction] | None:
    """
    Minimal-order linear recurrence a_k = sum_{i=1}^d c_i a_{k-i} fitted by exact elimination.

    The coefficients of each order d are solved from the d equations just before the held-out
    tail and accepted only if they reproduce the last `holdout` terms.

    Args:
        sequence: Integer terms.
        max_order: Largest order tried.
        holdout: Number of tail terms used for validation.

    Returns:
        c_1..c_d of the smallest fitting order, or None.
    """

    terms = [sympy.Integer(value) for value in sequence]
    length = len(terms)
    for order in range(1, max_order + 1):
        end = length - holdout
        start = end - order
        if start - order < 0:
            break
        system = sympy.Matrix([[terms[k - i] for i in range(1, order + 1)] for k in range(start, end)])
        rhs = sympy.Matrix([terms[k] for k in range(start, end)])
        if system.det() == 0:
            logger.debug('Singular recurrence system skipped', order=order)
            continue
        coefficients = system.LUsolve(rhs)
        if all(
            sum(coefficients[i - 1] * terms[k - i] for i in range(1, order + 1)) == terms[k]
            for k in range(end, length)
        ):
            return [Fraction(int(c.p), int(c.q)) for c in coefficients]
    return None
