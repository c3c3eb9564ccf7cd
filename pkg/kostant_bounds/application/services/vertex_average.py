"""
Vertices of flow polytopes and their averages.

Positive netflows have n! vertices, one outgoing edge per vertex; (t, 0, ..., 0, -t) has one
vertex per path from 0 to n. Other netflows are handled by spanning-tree bases for small n.
"""

from collections.abc import Iterator
from fractions import Fraction
from itertools import combinations, product

import networkx as nx

from kostant_bounds.config.base_settings import get_settings
from kostant_bounds.domain.flow_matrix import FlowMatrix
from kostant_bounds.domain.netflow import NetflowVector, make_netflow
from kostant_bounds.lib.errors import BadParamsError, NonPositiveEntryError, ResourceLimitError
from kostant_bounds.lib.logger import logger

__all__ = [
    'average_cry',
    'average_positive',
    'average_vertices',
    'enumerate_vertices',
    'is_cry',
    'is_positive',
    'midpoint_2rho',
    'reference_flow',
]

settings = get_settings()


def is_positive(netflow: NetflowVector) -> bool:
    return all(value > 0 for value in netflow.entries[:-1])


def is_cry(netflow: NetflowVector) -> bool:
    return netflow.entries[0] > 0 and all(value == 0 for value in netflow.entries[1:-1])


def average_positive(netflow: NetflowVector) -> FlowMatrix:
    """
    Exact vertex average of F_n(N) for N_i > 0: row i carries c_{n-i} on every edge, where
    c_k = N_{n-k}/(k+1) + s_{n-k}/(k(k+1)).

    Raises:
        NonPositiveEntryError: If some N_i <= 0 for i < n.
    """

    if not is_positive(netflow):
        raise NonPositiveEntryError(details={'entries': list(netflow.entries)})
    n, entries, s = netflow.n, netflow.entries, netflow.partial_sums
    upper = []
    for i in range(n):
        k = n - i
        c_k = Fraction(entries[i], k + 1) + Fraction(s[i], k * (k + 1))
        upper.append([c_k] * k)
    return FlowMatrix.from_upper(netflow, upper)


def _cry_cell(n: int, i: int, c: int) -> Fraction:
    if i == 0 and c == 0:
        return Fraction(1, 2 ** (n - 1))
    if i == 0 or c == 0:
        return Fraction(1, 2 ** (n - i - c))
    if i + c == n:
        return Fraction(1, 2)
    return Fraction(1, 2 ** (n - i - c + 1))


def average_cry(n: int, t: int) -> FlowMatrix:
    """
    Exact vertex average of F_n(t, 0, ..., 0, -t): t times a matrix of powers of 1/2.

    Raises:
        BadParamsError: If n < 2 or t < 1.
    """

    if n < 2 or t < 1:  # noqa: PLR2004
        raise BadParamsError(details={'n': n, 't': t})
    netflow = make_netflow([t] + [0] * (n - 1) + [-t])
    matrix = [[t * _cry_cell(n, i, c) if i + c <= n else Fraction(0) for c in range(n)] for i in range(n)]
    return FlowMatrix.from_embedded(netflow, matrix)


def midpoint_2rho(n: int, t: int) -> FlowMatrix:
    """
    The point with every edge flow t on F_n(t 2rho); its subdiagonal is t k (n-k).

    A heuristic stand-in for the vertex average, which has no known closed form.

    Raises:
        BadParamsError: If n < 2 or t < 1.
    """

    if n < 2 or t < 1:  # noqa: PLR2004
        raise BadParamsError(details={'n': n, 't': t})
    netflow = make_netflow([t * (n - 2 * k) for k in range(n + 1)])
    return FlowMatrix.from_upper(netflow, [[t] * (n - i) for i in range(n)])


def _positive_vertices(netflow: NetflowVector) -> Iterator[FlowMatrix]:
    n = netflow.n
    for targets in product(*(range(i + 1, n + 1) for i in range(n))):
        inflow = [0] * (n + 1)
        upper = []
        for i, j in enumerate(targets):
            row = [0] * (n - i)
            row[j - i - 1] = netflow.entries[i] + inflow[i]
            inflow[j] += row[j - i - 1]
            upper.append(row)
        yield FlowMatrix.from_upper(netflow, upper)


def _cry_vertices(netflow: NetflowVector) -> Iterator[FlowMatrix]:
    n, t = netflow.n, netflow.entries[0]
    for mask in range(1 << (n - 1)):
        path = [0] + [k for k in range(1, n) if mask >> (k - 1) & 1] + [n]
        upper = [[0] * (n - i) for i in range(n)]
        for i, j in zip(path, path[1:], strict=False):
            upper[i][j - i - 1] = t
        yield FlowMatrix.from_upper(netflow, upper)


def _tree_flow(netflow: NetflowVector, edges: tuple[tuple[int, int], ...]) -> dict[tuple[int, int], int] | None:
    """
    The unique flow supported on a spanning tree, by peeling leaves; None if it is negative.
    """

    residual = list(netflow.entries)
    adjacency: dict[int, set[tuple[int, int]]] = {v: set() for v in range(netflow.n + 1)}
    for edge in edges:
        adjacency[edge[0]].add(edge)
        adjacency[edge[1]].add(edge)
    flows = {}
    leaves = [v for v, incident in adjacency.items() if len(incident) == 1]
    while leaves:
        leaf = leaves.pop()
        if len(adjacency[leaf]) != 1:
            continue
        edge = adjacency[leaf].pop()
        tail, head = edge
        other = head if leaf == tail else tail
        value = residual[leaf] if leaf == tail else -residual[leaf]
        if value < 0:
            return None
        flows[edge] = value
        residual[other] += value if leaf == tail else -value
        adjacency[other].discard(edge)
        if len(adjacency[other]) == 1:
            leaves.append(other)
    return flows


def _generic_vertices(netflow: NetflowVector) -> Iterator[FlowMatrix]:
    n = netflow.n
    all_edges = [(i, j) for i in range(n + 1) for j in range(i + 1, n + 1)]
    seen = set()
    for edges in combinations(all_edges, n):
        graph = nx.Graph(edges)
        graph.add_nodes_from(range(n + 1))
        if not nx.is_tree(graph):
            continue
        flows = _tree_flow(netflow, edges)
        if flows is None:
            continue
        upper = tuple(tuple(flows.get((i, j), 0) for j in range(i + 1, n + 1)) for i in range(n))
        if upper in seen:
            continue
        seen.add(upper)
        yield FlowMatrix.from_upper(netflow, upper)


def enumerate_vertices(netflow: NetflowVector) -> list[FlowMatrix]:
    """
    All vertices of F_n(N), duplicate-free, sorted lexicographically by upper entries.

    Raises:
        ResourceLimitError: If n exceeds the configured limit of the applicable method.
    """

    n = netflow.n
    if not any(netflow.partial_sums):
        return [FlowMatrix.from_upper(netflow, [[0] * (n - i) for i in range(n)])]
    if is_positive(netflow) or is_cry(netflow):
        if n > settings.vertex.STRUCTURED_MAX_N:
            raise ResourceLimitError(details={'n': n, 'max_n': settings.vertex.STRUCTURED_MAX_N})
        source = _positive_vertices(netflow) if is_positive(netflow) else _cry_vertices(netflow)
    else:
        if n > settings.vertex.GENERIC_MAX_N:
            raise ResourceLimitError(
                'Generic vertex enumeration is limited to small n',
                details={'n': n, 'max_n': settings.vertex.GENERIC_MAX_N},
            )
        source = _generic_vertices(netflow)
    vertices = sorted(source, key=lambda vertex: vertex.upper)
    logger.debug('Vertices enumerated', netflow=str(netflow), count=len(vertices))
    return vertices


def average_vertices(netflow: NetflowVector) -> FlowMatrix:
    """
    Exact mean of `enumerate_vertices`.
    """

    vertices = enumerate_vertices(netflow)
    count = len(vertices)
    upper = [
        [Fraction(sum(vertex.upper[i][k] for vertex in vertices), count) for k in range(netflow.n - i)]
        for i in range(netflow.n)
    ]
    return FlowMatrix.from_upper(netflow, upper)


def reference_flow(netflow: NetflowVector, kind: str = 'average') -> FlowMatrix:
    """
    Point at which the entropy lower bound is evaluated.

    Args:
        netflow: The netflow vector.
        kind: `average` for the exact vertex average (closed form where known), `midpoint`
            for the all-t point of a t 2rho netflow.

    Raises:
        BadParamsError: If `kind` is unknown or `midpoint` is requested for a netflow that is not t 2rho.
        ResourceLimitError: If the average needs a vertex enumeration beyond its limit.
    """

    n = netflow.n
    match kind:
        case 'average':
            if is_positive(netflow):
                return average_positive(netflow)
            if is_cry(netflow) and n >= 2:  # noqa: PLR2004
                return average_cry(n, netflow.entries[0])
            return average_vertices(netflow)
        case 'midpoint':
            t, remainder = divmod(netflow.entries[0], n)
            if remainder or list(netflow.entries) != [t * (n - 2 * k) for k in range(n + 1)]:
                raise BadParamsError('Midpoint flow needs a t 2rho netflow', details={'entries': list(netflow.entries)})
            return midpoint_2rho(n, t)
    raise BadParamsError(f'Unknown reference flow `{kind}`')
