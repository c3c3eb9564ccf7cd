"""
Entropy lower and upper bounds on the number of integer flows.

For any point f of F_n(N) with transportation image A = phi(f),

    log K_n(N) >= max_k h(s_k) - 2 sum_k h(s_k) + sum_{i+j<=n} h(a_ij),

and log K_n(N) <= sup_f H(f). Every bound is a `math.fsum` of individual log terms, so two
evaluations that produce the same multiset of terms agree bit for bit.
"""

import math
from collections.abc import Iterable
from fractions import Fraction
from numbers import Real

from kostant_bounds.config.base_settings import get_settings
from kostant_bounds.domain.flow_matrix import FlowMatrix, embed, rationalize, support_cells
from kostant_bounds.domain.netflow import NetflowVector
from kostant_bounds.lib.errors import HypothesisViolationError, InfeasibleFlowError, ZeroMarginalError
from kostant_bounds.lib.logger import logger
from kostant_bounds.lib.numeric import h, log_factorial
from kostant_bounds.lib.schemas import BoundMethod, BoundReport

__all__ = [
    'correction_log',
    'correction_terms',
    'cry_explicit_log',
    'cry_product_log',
    'flow_entropy',
    'general_lower_bound',
    'h',
    'lower_bound_at',
    'matrix_product_log',
    'tesler_explicit_log',
    'tesler_product_log',
    'two_rho_product_log',
    'upper_bound_at',
    'volume_lower_bound',
]

settings = get_settings()


def _checked(flow: FlowMatrix, netflow: NetflowVector) -> FlowMatrix:
    if flow.n != netflow.n:
        raise InfeasibleFlowError('Flow and netflow sizes differ', details={'flow_n': flow.n, 'n': netflow.n})
    return FlowMatrix.from_upper(netflow, flow.upper)


def _certifiable(flow: FlowMatrix, netflow: NetflowVector) -> FlowMatrix:
    """
    Exact point of the polytope: float flows are rationalized and repaired first.
    """

    if flow.exact:
        return _checked(flow, netflow)
    repaired = rationalize(flow, netflow, settings.scaling.DENOMINATOR)
    logger.debug('Float flow rationalized before certification', n=netflow.n)
    return repaired


def correction_terms(partial_sums: Iterable[int]) -> list[float]:
    """
    The log terms max_k h(s_k) and -2 h(s_k) of the correction factor.
    """

    values = [h(s) for s in partial_sums]
    return [max(values, default=0.0)] + [-2.0 * value for value in values]


def correction_log(netflow: NetflowVector) -> float:
    """
    max_k h(s_k) - 2 sum_k h(s_k); never positive.
    """

    return math.fsum(correction_terms(netflow.partial_sums))


def flow_entropy(flow: FlowMatrix, netflow: NetflowVector) -> float:
    """
    H(f) = sum_{i<j} h(f_ij) + sum_{0<j<n} h(g_j).

    Raises:
        InfeasibleFlowError: If the flow is not a point of F_n(N).
    """

    checked = _checked(flow, netflow)
    return math.fsum(h(value) for value in checked.entries())


def lower_bound_at(flow: FlowMatrix, netflow: NetflowVector) -> BoundReport:
    """
    Certified lower bound on log K_n(N) at an explicit point of the polytope.

    Args:
        flow: Any point of F_n(N); float points are rationalized and repaired.
        netflow: The netflow vector.

    Returns:
        BoundReport with log_lower = correction_log(N) + H(f).

    Raises:
        InfeasibleFlowError: If the (repaired) flow is not a point of F_n(N).
    """

    exact = _certifiable(flow, netflow)
    terms = correction_terms(netflow.partial_sums) + [h(value) for value in exact.entries()]
    return BoundReport(log_lower=math.fsum(terms), method=BoundMethod.ENTROPY_AT_FLOW, certified=True)


def matrix_product_log(netflow: NetflowVector, flow: FlowMatrix) -> float:
    """
    The same bound read off the transportation image cell by cell.
    """

    matrix = embed(_certifiable(flow, netflow), netflow)
    terms = correction_terms(netflow.partial_sums)
    terms.extend(h(matrix[i][c]) for i, c in support_cells(netflow.n))
    return math.fsum(terms)


def upper_bound_at(
    f_star: FlowMatrix, netflow: NetflowVector, opt_gap: float, certified: bool = True
) -> BoundReport:
    """
    Upper bound log K_n(N) <= H(f_star) + opt_gap.

    The lower side of the report is the certified bound at the same flow.

    Args:
        f_star: Near-optimal flow from the capacity optimizer.
        netflow: The netflow vector.
        opt_gap: Optimality gap of f_star in nats.
        certified: Whether opt_gap is a rigorous dual gap.
    """

    exact = _certifiable(f_star, netflow)
    entropy_terms = [h(value) for value in exact.entries()]
    return BoundReport(
        log_lower=math.fsum(correction_terms(netflow.partial_sums) + entropy_terms),
        log_upper=math.fsum([*entropy_terms, max(opt_gap, 0.0)]),
        method=BoundMethod.ENTROPY_OPT,
        certified=certified,
    )


def volume_lower_bound(flow: FlowMatrix, netflow: NetflowVector) -> float:
    """
    Log of the lower bound e^{C(n,2)} n! max_i s_i prod_i s_i^{-2} prod_{i+j<=n} a_ij on the
    relative volume of phi(F_n(N)).

    Raises:
        ZeroMarginalError: If some s_k or some support entry a_ij is zero.
    """

    if any(s <= 0 for s in netflow.partial_sums):
        raise ZeroMarginalError(details={'partial_sums': list(netflow.partial_sums)})
    matrix = embed(_checked(flow, netflow), netflow)
    cells = [matrix[i][c] for i, c in support_cells(netflow.n)]
    if any(value <= 0 for value in cells):
        raise ZeroMarginalError('Zero support entry', details={'n': netflow.n})
    n = netflow.n
    terms = [math.comb(n, 2), log_factorial(n), math.log(max(netflow.partial_sums))]
    terms.extend(-2.0 * math.log(s) for s in netflow.partial_sums)
    terms.extend(math.log(value) for value in cells)
    return math.fsum(terms)


def _c_coefficients(netflow: NetflowVector) -> list[Fraction]:
    """
    c_1..c_n with c_k = N_{n-k}/(k+1) + s_{n-k}/(k(k+1)).
    """

    n, entries, s = netflow.n, netflow.entries, netflow.partial_sums
    return [Fraction(entries[n - k], k + 1) + Fraction(s[n - k], k * (k + 1)) for k in range(1, n + 1)]


def general_lower_bound(netflow: NetflowVector, variant: int = 1) -> BoundReport:
    """
    Closed lower bounds for netflows with nonnegative-ish entries.

    Variant 1: K >= n^{-2} prod_k e^{-h(s_k)} prod_{k=1}^n e^{k h(c_k)},
    valid when s_k >= max(0, -(n-k) N_k) for every k < n.

    Variant 2: K >= (n^2 e^n (n!)^2)^{-1} prod_{k=1}^n e^{(k-1) h(c_k)},
    additionally requiring N_k >= 1/(n-k) - (n-k+1).

    Raises:
        HypothesisViolationError: If the hypotheses of the variant fail.
    """

    n, entries, s = netflow.n, netflow.entries, netflow.partial_sums
    if variant not in (1, 2):
        raise HypothesisViolationError('Unknown variant', details={'variant': variant})
    failing = [k for k in range(n) if s[k] < max(0, -(n - k) * entries[k])]
    if variant == 2:  # noqa: PLR2004
        failing += [k for k in range(n) if entries[k] < Fraction(1, n - k) - (n - k + 1)]
    if failing:
        raise HypothesisViolationError(details={'variant': variant, 'indices': sorted(set(failing))})

    c = _c_coefficients(netflow)
    terms = [-2.0 * math.log(n)]
    if variant == 1:
        terms.extend(-h(value) for value in s)
        terms.extend(k * h(c[k - 1]) for k in range(1, n + 1))
    else:
        terms.extend([-float(n), -2.0 * log_factorial(n)])
        terms.extend((k - 1) * h(c[k - 1]) for k in range(1, n + 1))
    return BoundReport(log_lower=math.fsum(terms), method=BoundMethod.CLOSED_FORM, certified=True)


def _repeat(value: Real, times: int) -> list[float]:
    term = h(value)
    return [term] * times


def tesler_product_log(n: int) -> float:
    """
    The bound at the vertex average of F_n(1, ..., 1, -n) as a product over c_k = (n+1)/(k(k+1))
    and b_k = k(n-k)/(n-k+1).
    """

    terms = correction_terms(range(1, n + 1))
    for k in range(1, n + 1):
        terms.extend(_repeat(Fraction(n + 1, k * (k + 1)), k))
    terms.extend(h(Fraction((n - j) * j, n - j + 1)) for j in range(1, n))
    return math.fsum(terms)


def cry_product_log(n: int, t: int) -> float:
    """
    The bound at the vertex average of F_n(t, 0, ..., 0, -t):
    (2n-1) copies of -h(t) net, one h(t 2^{-(n-1)}) and n+2-k copies of h(t 2^{-k}).
    """

    terms = correction_terms([t] * n)
    terms.append(h(Fraction(t, 2 ** (n - 1))))
    for k in range(1, n):
        terms.extend(_repeat(Fraction(t, 2**k), n + 2 - k))
    return math.fsum(terms)


def two_rho_product_log(n: int, t: int) -> float:
    """
    The bound at the 2rho midpoint: C(n+1, 2) unit-t edges and subdiagonal t k(n-k).
    """

    terms = correction_terms([t * (k + 1) * (n - k) for k in range(n)])
    terms.extend(_repeat(t, math.comb(n + 1, 2)))
    terms.extend(h(t * k * (n - k)) for k in range(1, n))
    return math.fsum(terms)


def tesler_explicit_log(n: int) -> BoundReport:
    """
    log K_n(1, ..., 1, -n) >= (n+1)/4 log^2(n+1) - (n+1) log(n+1) + n - (2/e) sqrt(n+1) - 5/2 log n - 1.
    """

    if n < 1:
        raise HypothesisViolationError(details={'n': n})
    log_m = math.log(n + 1)
    value = math.fsum([
        (n + 1) / 4 * log_m**2,
        -(n + 1) * log_m,
        float(n),
        -2 / math.e * math.sqrt(n + 1),
        -2.5 * math.log(n),
        -1.0,
    ])
    return BoundReport(log_lower=value, method=BoundMethod.CLOSED_FORM, certified=True)


def cry_explicit_log(n: int, t: int) -> BoundReport:
    """
    Natural-log form of log_2 K_n(t,0,...,0,-t) >= (n+2)/2 L log_2(et/128) - 3n/t - L^3/2 - L^2/2,
    L = log_2(et), valid for L <= n-1.

    Raises:
        HypothesisViolationError: If t < 1 or log_2(et) > n-1.
    """

    if t < 1:
        raise HypothesisViolationError(details={'t': t})
    big_l = math.log2(math.e * t)
    if big_l > n - 1:
        raise HypothesisViolationError('log2(e t) must not exceed n - 1', details={'n': n, 't': t})
    value = math.fsum([
        (n + 2) / 2 * big_l * (big_l - 7),
        -3 * n / t,
        -(big_l**3) / 2,
        -(big_l**2) / 2,
    ])
    return BoundReport(log_lower=value * math.log(2), method=BoundMethod.CLOSED_FORM, certified=True)
