"""
Product formulas and asymptotic comparators for named netflow families.

Asymptotic reports are never certified: the underlying lower bounds carry unspecified
O-terms, so the numbers here are leading terms to compare against, not guarantees.
"""

import math
from fractions import Fraction

from kostant_bounds.domain.families import NamedFamily
from kostant_bounds.lib.errors import DomainViolationError, HypothesisViolationError, UnsupportedFamilyError
from kostant_bounds.lib.numeric import h, xlogx
from kostant_bounds.lib.schemas import BoundMethod, BoundReport

__all__ = [
    'asymptotic_bound',
    'big_f',
    'catalan',
    'catalan_product',
    'comparators',
    'f_bound_check',
    'klogk_approx',
    'log_big_f',
    'polynomial_growth_regimes',
    'quadratic_klogk',
    'staircase_count',
]


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def catalan_product(n: int) -> int:
    """
    C_1 C_2 ... C_{n-1}.
    """

    return math.prod(catalan(i) for i in range(1, n))


def big_f(t: int, n: int) -> Fraction:
    """
    F(t, n) = prod_{1<=i<j<=n} (2t+i+j-1)/(i+j-1), exactly.
    """

    if t < 0 or n < 1:
        raise DomainViolationError(details={'t': t, 'n': n})
    return math.prod(
        (Fraction(2 * t + i + j - 1, i + j - 1) for i in range(1, n + 1) for j in range(i + 1, n + 1)),
        start=Fraction(1),
    )


def log_big_f(t: float, n: int) -> float:
    """
    log F(t, n) summed factor by factor.
    """

    return math.fsum(
        math.log(2 * t + i + j - 1) - math.log(i + j - 1) for i in range(1, n + 1) for j in range(i + 1, n + 1)
    )


def staircase_count(t: int, n: int) -> int:
    """
    K_n(t, t+1, ..., t+n-1, -nt - C(n,2)) = C_1 ... C_{n-1} F(t, n).
    """

    value = catalan_product(n) * big_f(t, n)
    assert value.denominator == 1, f'C_1...C_{{n-1}} F({t}, {n}) is not an integer'  # noqa: S101
    return value.numerator


def _f(x: float) -> float:
    """
    x^2 log x - (1-x)^2 log(1-x)/2 - (1+x)^2 log(1+x)/2 + 2x log 2 on [0, 1].
    """

    return x * xlogx(x) - (1 - x) * xlogx(1 - x) / 2 - (1 + x) * xlogx(1 + x) / 2 + 2 * x * math.log(2)


def f_bound_check(t: int, n: int) -> tuple[float, float, bool]:
    """
    Check 0 >= log F(t,n) - (n+t)^2 f(t/(n+t)) >= -2(t+n).

    Returns:
        (log F, (n+t)^2 f(t/(n+t)), whether both inequalities hold).
    """

    log_f = log_big_f(t, n)
    approx = (n + t) ** 2 * _f(t / (n + t))
    slack = 1e-9 * max(1.0, abs(log_f), abs(approx))
    difference = log_f - approx
    return log_f, approx, -2 * (t + n) - slack <= difference <= slack


def polynomial_growth_regimes(a: Fraction, p: Fraction, n: float) -> dict[str, float]:
    """
    Leading terms of the polynomial growth lower bounds, every applicable regime side by side.

    For p = 1 both the a > 2 and the a <= 2 expressions are reported; they agree at a = 2.
    """

    if a <= 0 or p < 0:
        raise HypothesisViolationError(details={'a': str(a), 'p': str(p)})
    a_f, p_f, log_n = float(a), float(p), math.log(n)
    regimes: dict[str, float] = {}
    if p_f > 1:
        regimes['p>1'] = n**2 * log_n * (p_f - 1) / 2 + n**2 / 2 * (math.log(a_f * p_f) - 3 * (p_f - 1) / 2)
    elif p_f == 1:
        if a_f != 2:  # noqa: PLR2004
            coefficient = a_f / (2 * (a_f - 2)) * math.log(a_f / 2) + 1.5 - 2 * math.log(2)
            regimes['p=1,a>2'] = n**2 * coefficient
        regimes['p=1,a<=2'] = n**2 * (a_f - a_f * math.log(2))
    else:
        regimes['p<1'] = n ** (p_f + 1) * log_n**2 * a_f * (1 - p_f) ** 2 / (4 * (p_f + 1))
    return regimes


# N_i = n + i: the entropy bound at the vertex average with c_k relaxed by gamma
N_PLUS_I_GAMMA = 1 / 6
N_PLUS_I_COEFFICIENT = math.fsum([
    math.log(1.5),
    math.log(1 - N_PLUS_I_GAMMA**2),
    math.log((1 + N_PLUS_I_GAMMA) / (1 - N_PLUS_I_GAMMA)) / N_PLUS_I_GAMMA,
]) / 2
# log C_1...C_{n-1} F(n, n) / n^2 as n grows
N_PLUS_DELTA_COEFFICIENT = 9 * math.log(2) - 4.5 * math.log(3)


def _asymptotic_value(family: NamedFamily, n: float) -> float:
    tag, t, a = family.tag, family.t, family.a
    log_n = math.log(n)
    match tag:
        case 'power':
            regimes = polynomial_growth_regimes(a, family.p, n)
            if family.p == 1:
                return regimes['p=1,a>2'] if a > 2 else regimes['p=1,a<=2']  # noqa: PLR2004
            return next(iter(regimes.values()))
        case 'tesler':
            return n / 4 * log_n**2
        case 'dilated_tesler' | 'constant_an':
            if tag == 'dilated_tesler' and t == n:
                return float(n) ** 2
            scale = t / n if tag == 'dilated_tesler' else float(a)
            if scale < 1 / 12:
                raise HypothesisViolationError('Requires a >= 1/12', details={'a': str(scale)})
            return n**2 / 2 * (2 + math.log(scale))
        case 'linear':
            if a == 1:
                return N_PLUS_I_COEFFICIENT * n**2
            return n**2 / 2 * (1 + math.log(2 * float(a) + 1))
        case 'cry':
            if t < 1:
                raise HypothesisViolationError(details={'t': t})
            return math.log(2) * n / 2 * math.log2(t) ** 2
        case 'two_rho':
            if t < 1:
                raise HypothesisViolationError(details={'t': t})
            return n**2 / 2 * h(t)
        case 'staircase':
            if t < 0:
                raise HypothesisViolationError(details={'t': t})
            return n**2 * math.log(2) - 1.5 * n * log_n + (n + t) ** 2 * _f(t / (n + t))
    raise UnsupportedFamilyError(tag)


def asymptotic_bound(family: NamedFamily, n: float) -> BoundReport:
    """
    Leading term of the asymptotic lower bound on log K_n for a named family.

    Args:
        family: Family tag and parameters.
        n: Size; may be real for trend evaluation.

    Returns:
        An uncertified BoundReport carrying the leading term.

    Raises:
        HypothesisViolationError: If the parameters are outside the regime's hypotheses.
    """

    if n <= 1:
        raise HypothesisViolationError('Asymptotic terms need n > 1', details={'n': n})
    return BoundReport(log_lower=_asymptotic_value(family, n), method=BoundMethod.ASYMPTOTIC, certified=False)


def _double_factorial_log(m: int) -> float:
    return math.fsum(math.log(k) for k in range(m, 0, -2))


def comparators(family: NamedFamily, n: int) -> dict[str, BoundReport]:
    """
    Previously known bounds for a family, as certified log-scale reports.

    Keys name the bound: `cry` for (t+1)^{n-1} <= a_n(t) <= F(t,n); `dilated_tesler` for
    prod (it+1) <= K <= min((t+1)^{C(n,2)}, C_1...C_{n-1} F(t,n)); `shifted_staircase` for
    K >= C_1...C_{n-1} F(t-n+1, n) when t >= n-1; `oneill_tesler` for
    (2n-3)!! <= c_n <= 2^{C(n-2,2)-1} 3^n; `oneill_two_rho` for 3^{k^2-k-1} (t = 1) or
    (t+1/2)^{k^2} (t > 1) when n = 2k+1; `staircase` for the exact product and, at t = 0,
    `staircase_leading` for its uncertified leading term n^2 log 2 - 3/2 n log n.
    """

    t, reports = family.t, {}
    log_catalans = math.log(catalan_product(n))
    match family.tag:
        case 'cry':
            reports['cry'] = BoundReport(
                log_lower=(n - 1) * math.log(t + 1), log_upper=log_big_f(t, n),
                method=BoundMethod.CLOSED_FORM, certified=True,
            )
        case 'tesler' | 'dilated_tesler':
            t = 1 if family.tag == 'tesler' else t
            upper = min(math.comb(n, 2) * math.log(t + 1), log_catalans + log_big_f(t, n))
            reports['dilated_tesler'] = BoundReport(
                log_lower=math.fsum(math.log(i * t + 1) for i in range(1, n)), log_upper=upper,
                method=BoundMethod.CLOSED_FORM, certified=True,
            )
            if t >= n - 1:
                reports['shifted_staircase'] = BoundReport(
                    log_lower=log_catalans + log_big_f(t - n + 1, n), method=BoundMethod.CLOSED_FORM, certified=True
                )
            if t == 1 and n >= 2:  # noqa: PLR2004
                oneill_upper = (math.comb(n - 2, 2) - 1) * math.log(2) + n * math.log(3)
                reports['oneill_tesler'] = BoundReport(
                    log_lower=_double_factorial_log(2 * n - 3), log_upper=oneill_upper,
                    method=BoundMethod.CLOSED_FORM, certified=True,
                )
        case 'two_rho':
            if n % 2 == 1 and n >= 3:  # noqa: PLR2004
                k = n // 2
                lower = (k * k - k - 1) * math.log(3) if t == 1 else k * k * math.log(t + 0.5)
                reports['oneill_two_rho'] = BoundReport(
                    log_lower=lower, method=BoundMethod.CLOSED_FORM, certified=True
                )
        case 'staircase':
            exact = log_catalans + log_big_f(t, n)
            reports['staircase'] = BoundReport(
                log_lower=exact, log_upper=exact, method=BoundMethod.CLOSED_FORM, certified=True
            )
            if t == 0 and n > 1:
                reports['staircase_leading'] = BoundReport(
                    log_lower=n * n * math.log(2) - 1.5 * n * math.log(n), method=BoundMethod.ASYMPTOTIC
                )
        case 'linear':
            exact = log_catalans + log_big_f(math.ceil(family.a * n), n)
            reports['staircase'] = BoundReport(
                log_lower=exact, log_upper=exact, method=BoundMethod.CLOSED_FORM, certified=True
            )
            if family.a == 1:
                reports['n_plus_delta_leading'] = BoundReport(
                    log_lower=N_PLUS_DELTA_COEFFICIENT * n * n, method=BoundMethod.ASYMPTOTIC
                )
    return reports


def klogk_approx(a: int, b: int, c: float, d: float) -> float:
    """
    Main terms of sum_{k=a}^b k log(ck + d) with r = -d/c, from Euler-Maclaurin at order 3.

    Raises:
        DomainViolationError: If c = 0, a >= b or ct + d <= 0 somewhere on [a, b].
    """

    if c == 0 or a >= b or c * a + d <= 0 or c * b + d <= 0:
        raise DomainViolationError(details={'a': a, 'b': b, 'c': c, 'd': d})
    r = -d / c
    log_c = math.log(abs(c))
    log_a, log_b = math.log(abs(a - r)), math.log(abs(b - r))
    ratio = log_a - log_b
    return math.fsum([
        b * b / 2 * log_b,
        -a * a / 2 * log_a,
        r * r / 2 * ratio,
        b * b * log_c / 2,
        -a * a * log_c / 2,
        -((b + r) ** 2) / 4,
        (a + r) ** 2 / 4,
        b / 2 * log_b,
        a / 2 * log_a,
        (a + b) * log_c / 2,
        -ratio / 12,
    ])


def _quadratic_coefficient(xi: float) -> float:
    """
    (1/xi^2 - 1) log(1/(1 - xi^2)), continuous at xi = 0 with value 1.
    """

    if xi == 0:
        return 1.0
    x = xi * xi
    return (1 - x) * (-math.log1p(-x) / x)


def quadratic_klogk(xi: float, n: int) -> float:
    """
    Main terms of sum_{k=1}^n k log((n^2 - xi^2 k^2)/k^2).

    Raises:
        DomainViolationError: Unless 0 <= xi < 1 and n >= 1.
    """

    if not 0 <= xi < 1 or n < 1:
        raise DomainViolationError(details={'xi': xi, 'n': n})
    return math.fsum([
        n * n / 2 * _quadratic_coefficient(xi),
        n / 2 * math.log1p(-xi * xi),
        -math.log(n) / 6,
    ])
