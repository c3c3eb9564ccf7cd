"""
Elementary inequalities and summation tools the closed-form bounds rest on.

Every check returns plain booleans or floats so it can run as a property suite; the
vectorised sandwiches evaluate all n <= n_max at once.
"""

import math
from collections.abc import Callable, Sequence

import networkx as nx
import numpy as np
import sympy
from scipy import integrate, optimize, special

from kostant_bounds.lib.errors import DomainViolationError
from kostant_bounds.lib.logger import logger
from kostant_bounds.lib.numeric import h

from .closed_forms import catalan_product

__all__ = [
    'appendix_sandwiches',
    'catalan_product_remainder',
    'entropy_ineq_check',
    'euler_maclaurin',
    'spanning_trees_laplacian',
    'spanning_trees_staircase',
    'unimodal_sum_lb',
]

RELATIVE_SLACK = 1e-9

RealFunction = Callable[[float], float]


def _integral(function: RealFunction, a: float, b: float) -> float:
    value, _ = integrate.quad(function, a, b, limit=200)
    return float(value)


def euler_maclaurin(
    f: RealFunction, derivatives: Sequence[RealFunction], a: int, b: int, p: int
) -> tuple[float, float]:
    """
    Euler-Maclaurin approximation of sum_{k=a}^b f(k) with its remainder bound.

    Args:
        f: The summand.
        derivatives: derivatives[k] is the (k+1)-th derivative of f; at least p of them.
        a: First index.
        b: Last index, b > a.
        p: Odd order of the expansion.

    Returns:
        (approximation, bound) with |sum - approximation| <= bound, where
        bound = 2 zeta(p) / (2 pi)^p * int_a^b |f^(p)|. For p = 1 the bound is infinite.

    Raises:
        DomainViolationError: If a >= b, p is not a positive odd integer or derivatives are missing.
    """

    if a >= b or p < 1 or p % 2 == 0 or len(derivatives) < p:
        raise DomainViolationError(details={'a': a, 'b': b, 'p': p, 'derivatives': len(derivatives)})

    bernoulli = special.bernoulli(p)
    terms = [_integral(f, a, b), (f(a) + f(b)) / 2]
    for k in range(1, (p - 1) // 2 + 1):
        derivative = derivatives[2 * k - 2]
        terms.append(bernoulli[2 * k] / math.factorial(2 * k) * (derivative(b) - derivative(a)))

    top = derivatives[p - 1]
    bound = 2 * float(special.zeta(p)) / (2 * math.pi) ** p * _integral(lambda x: abs(top(x)), a, b)
    return math.fsum(terms), bound


def unimodal_sum_lb(f: RealFunction, a: float, b: float) -> float:
    """
    Lower bound int_a^b f - max_{[a,b]} f on the sum of a unimodal f over the integers in (a, b).

    Raises:
        DomainViolationError: If a >= b.
    """

    if a >= b:
        raise DomainViolationError(details={'a': a, 'b': b})
    inner = optimize.minimize_scalar(lambda x: -f(x), bounds=(a, b), method='bounded')
    peak = max(f(a), f(b), -float(inner.fun))
    return _integral(f, a, b) - peak


def entropy_ineq_check(t: float) -> bool:
    """
    For t > 0 check, in logs, e(t + 1/2) >= e^{h(t)} >= max{e(t + 1/2 - 1/(24t)), (e/t)^t}
    and e^{h(t)} >= et + 1. The middle lower term is skipped while t + 1/2 - 1/(24t) <= 0.

    Raises:
        DomainViolationError: If t <= 0.
    """

    if t <= 0:
        raise DomainViolationError(details={'t': t})
    value = h(t)
    slack = RELATIVE_SLACK * max(1.0, abs(value))
    lowers = [t * (1 - math.log(t)), math.log1p(math.e * t)]
    shifted = t + 0.5 - 1 / (24 * t)
    if shifted > 0:
        lowers.append(1 + math.log(shifted))
    upper = 1 + math.log(t + 0.5)
    return value <= upper + slack and all(lower <= value + slack for lower in lowers)


def _holds(lower: np.ndarray, upper: np.ndarray) -> bool:
    slack = RELATIVE_SLACK * np.maximum(1.0, np.maximum(np.abs(lower), np.abs(upper)))
    return bool(np.all(lower <= upper + slack))


def appendix_sandwiches(n_max: int, powers: Sequence[float] = (0, 0.5, 1, 2, 3)) -> dict[str, bool]:
    """
    Vectorised checks of the elementary sandwiches for n = 1..n_max.

    Keys: `exp_ratio` ((x/(x+1))^x >= 1/e and ((x+1)/x)^{x+1} >= e), `stirling`, `power_sum`
    (one entry per exponent in `powers`), `harmonic`, `klogk_sum` and `logk_over_k_sum`.

    Raises:
        DomainViolationError: If n_max < 1.
    """

    if n_max < 1:
        raise DomainViolationError(details={'n_max': n_max})
    n = np.arange(1, n_max + 1, dtype=float)
    log_n, log_n1 = np.log(n), np.log(n + 1)
    results: dict[str, bool] = {}

    results['exp_ratio'] = _holds(np.full_like(n, -1.0), n * (log_n - log_n1)) and _holds(
        np.ones_like(n), (n + 1) * (log_n1 - log_n)
    )

    log_factorials = special.gammaln(n + 1)
    base = n * log_n - n
    results['stirling'] = _holds(base + 0.5 * np.log(2 * np.pi * n), log_factorials) and _holds(
        log_factorials, base + 1 + 0.5 * log_n
    )

    k = np.arange(0, n_max + 1, dtype=float)
    for power in powers:
        sums = np.cumsum(k**power)[1:]
        lower = n ** (power + 1) / (power + 1)
        upper = (n + 1) ** (power + 1) / (power + 1)
        results[f'power_sum[p={power}]'] = _holds(lower, sums) and _holds(sums, upper)

    harmonic = np.cumsum(1 / n)
    results['harmonic'] = _holds(log_n1, harmonic) and _holds(harmonic, 1 + log_n)

    klogk = np.cumsum(n * log_n)
    results['klogk_sum'] = _holds(n**2 * log_n / 2 - n**2 / 4 + 0.25, klogk) and _holds(
        klogk, (n + 1) ** 2 * log_n1 / 2 - (n + 1) ** 2 / 4 + 0.25
    )

    log3_squared = math.log(3) ** 2
    logk_over_k = np.cumsum(log_n / n)
    lower = math.log(2) / 2 + (log_n1**2 - log3_squared) / 2
    upper = math.log(2) / 2 + math.log(3) / 3 + (log_n**2 - log3_squared) / 2
    results['logk_over_k_sum'] = _holds(lower, logk_over_k) and _holds(logk_over_k, upper)

    failed = [name for name, ok in results.items() if not ok]
    if failed:
        logger.warning('Appendix sandwiches failed', failed=failed, n_max=n_max)
    return results


def catalan_product_remainder(n: int) -> float:
    """
    log(C_1 ... C_{n-1}) - (n^2 log 2 - 3/2 n log n), the O(n) remainder of the product.

    Raises:
        DomainViolationError: If n < 1.
    """

    if n < 1:
        raise DomainViolationError(details={'n': n})
    return math.log(catalan_product(n)) - (n * n * math.log(2) - 1.5 * n * math.log(n))


def _staircase_graph(n: int) -> nx.Graph:
    """
    Bipartite graph of the embedding support: rows r0..r{n-1}, columns c0..c{n-1}, i + c <= n.
    """

    graph = nx.Graph()
    graph.add_nodes_from(f'r{i}' for i in range(n))
    graph.add_nodes_from(f'c{c}' for c in range(n))
    graph.add_edges_from((f'r{i}', f'c{c}') for i in range(n) for c in range(n) if i + c <= n)
    return graph


def spanning_trees_laplacian(n: int) -> int:
    """
    Spanning trees of the staircase bipartite graph by the matrix-tree theorem (exact determinant).
    """

    graph = _staircase_graph(n)
    laplacian = nx.laplacian_matrix(graph, nodelist=sorted(graph.nodes)).toarray()
    minor = sympy.Matrix(laplacian[1:, 1:].tolist())
    return int(minor.det(method='bareiss'))


def spanning_trees_staircase(n: int) -> int:
    """
    Spanning trees of the staircase bipartite graph underlying the embedding support: (n!)^2.

    Raises:
        DomainViolationError: If n < 1.
    """

    if n < 1:
        raise DomainViolationError(details={'n': n})
    return math.factorial(n) ** 2
