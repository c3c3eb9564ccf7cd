"""
CheckService runs the property suites behind the bounds.

Suites:
- `appendix`: elementary inequalities, Euler-Maclaurin remainders, the F-f sandwich and the
  spanning-tree count.
- `duality`: capacity and volume duality plus the entropy sandwich around exact counts.
- `lidskii`: the Lidskii formula against the exact counter and the large-t CRY bounds.
- `oracle`: the exact counter against brute-force enumeration on random netflows.
- `monotone`: K_n(N) >= K_n(M) on random pairs with N dominating M.
"""

from __future__ import annotations

import math
import random
from collections.abc import Callable, Iterator
from typing import Any

from kostant_bounds.application.services.appendix import (
    appendix_sandwiches,
    catalan_product_remainder,
    entropy_ineq_check,
    euler_maclaurin,
    spanning_trees_laplacian,
    spanning_trees_staircase,
)
from kostant_bounds.application.services.closed_forms import f_bound_check
from kostant_bounds.application.services.entropy_bounds import lower_bound_at, upper_bound_at
from kostant_bounds.application.services.exact_count import count_brute, count_exact, inversions_at_most
from kostant_bounds.application.services.lidskii import (
    cry_large_t_counts,
    lidskii_count,
    lidskii_terms,
    m_n,
    s_plus,
)
from kostant_bounds.application.services.scaling_opt import solve_entropy, volume_duality_check
from kostant_bounds.application.services.vertex_average import reference_flow
from kostant_bounds.domain.families import NamedFamily, family
from kostant_bounds.domain.netflow import NetflowVector, dominates, make_netflow
from kostant_bounds.lib.errors import AppException, ResourceLimitError, UnsupportedError
from kostant_bounds.lib.logger import logger
from kostant_bounds.lib.schemas import CaseResult, CheckReport, CheckStatus

__all__ = ['CheckService', 'push_right', 'random_netflow', 'random_smooth_function', 'small_suite']

CAPACITY_TOL = 1e-6
VOLUME_TOL = 1e-5
SUM_SLACK = 1e-7
ENTRY_BOUND = 3
MONOTONE_MAX_STATES = 10**5

SmoothFunction = tuple[str, Callable[[float], float], list[Callable[[float], float]]]


def random_smooth_function(rng: random.Random, order: int = 5) -> SmoothFunction:
    """
    A smooth test function on [1, inf) with its first `order` derivatives.

    Draws one of x^q, e^{cx}, log(x + d) and x log x with random parameters.
    """

    kind = rng.choice(('power', 'exp', 'log', 'xlogx'))
    if kind == 'power':
        q = rng.uniform(0.5, 3.5)

        def power_derivative(k: int) -> Callable[[float], float]:
            coefficient = math.prod(q - i for i in range(k))
            return lambda x: coefficient * x ** (q - k)

        return f'x^{q:.3f}', power_derivative(0), [power_derivative(k) for k in range(1, order + 1)]
    if kind == 'exp':
        c = rng.uniform(-1.0, 0.3)
        return f'exp({c:.3f}x)', lambda x: math.exp(c * x), [
            (lambda k: lambda x: c**k * math.exp(c * x))(k) for k in range(1, order + 1)
        ]
    if kind == 'log':
        d = rng.uniform(0.0, 5.0)
        return f'log(x+{d:.3f})', lambda x: math.log(x + d), [
            (lambda k: lambda x: (-1) ** (k - 1) * math.factorial(k - 1) / (x + d) ** k)(k) for k in range(1, order + 1)
        ]
    derivatives = [lambda x: math.log(x) + 1] + [
        (lambda k: lambda x: (-1) ** k * math.factorial(k - 2) / x ** (k - 1))(k) for k in range(2, order + 1)
    ]
    return 'x log x', lambda x: x * math.log(x), derivatives


def small_suite(rng: random.Random, n_max: int = 5, random_count: int = 10) -> list[NetflowVector]:
    """
    Family members for n = 2..n_max plus random netflows with every s_k >= 1.
    """

    members = [
        NamedFamily('tesler'),
        NamedFamily('cry', t=1),
        NamedFamily('cry', t=2),
        NamedFamily('dilated_tesler', t=2),
        NamedFamily('staircase', t=1),
        NamedFamily('staircase', t=2),
        NamedFamily('two_rho', t=1),
    ]
    suite = [family(params, n) for params in members for n in range(2, n_max + 1)]
    while random_count > 0:
        n = rng.randint(2, n_max)
        head = [rng.randint(-3, 3) for _ in range(n)]
        if any(s < 1 for s in _prefix_sums(head)):
            continue
        suite.append(make_netflow([*head, -sum(head)]))
        random_count -= 1
    return suite


def _prefix_sums(values: list[int]) -> Iterator[int]:
    running = 0
    for value in values:
        running += value
        yield running


def random_netflow(rng: random.Random, n_max: int, bound: int = ENTRY_BOUND) -> NetflowVector:
    """
    A uniformly drawn netflow on vertices 0..n, 1 <= n <= n_max, with |N_i| <= bound and every s_k >= 0.
    """

    while True:
        n = rng.randint(1, n_max)
        head = [rng.randint(-bound, bound) for _ in range(n)]
        if all(s >= 0 for s in _prefix_sums(head)):
            return make_netflow([*head, -sum(head)])


def push_right(rng: random.Random, netflow: NetflowVector, moves: int) -> NetflowVector:
    """
    Move up to `moves` units from a vertex to its successor; the result is dominated by `netflow`.
    """

    entries = list(netflow.entries)
    for _ in range(moves):
        i = rng.randrange(len(entries) - 1)
        # s_i stays nonnegative
        if sum(entries[: i + 1]) > 0:
            entries[i] -= 1
            entries[i + 1] += 1
    return make_netflow(entries)


class CheckService:
    """
    Runs a named property suite and reports failing cases.

    Attributes:
        seed: Seed of the random case generator.
        samples: Number of random cases per randomized property.
        n_max: Largest netflow size in the suites.
        oracle_max_count: Random netflows with a larger count are redrawn in the `oracle` suite.
    """

    def __init__(self, seed: int = 0, samples: int = 1000, n_max: int = 5, oracle_max_count: int = 10**4) -> None:
        self.seed = seed
        self.samples = samples
        self.n_max = n_max
        self.oracle_max_count = oracle_max_count

    def run(self, suite: str) -> CheckReport:
        """
        Run one suite.

        Raises:
            UnsupportedError: If the suite name is unknown.
        """

        suites = {
            'appendix': self._appendix,
            'duality': self._duality,
            'lidskii': self._lidskii,
            'oracle': self._oracle,
            'monotone': self._monotone,
        }
        try:
            cases = suites[suite]
        except KeyError as exc:
            raise UnsupportedError(f'Unknown suite `{suite}`', details={'suites': sorted(suites)}) from exc

        total, failures = 0, []
        for result in cases(random.Random(self.seed)):
            total += 1
            if result.status != CheckStatus.OK:
                failures.append(result)
        status = CheckStatus.OK if not failures else CheckStatus.FAILED
        logger.info('Check suite finished', suite=suite, total=total, failures=len(failures))
        return CheckReport(suite=suite, status=status, total=total, failures=failures)

    @staticmethod
    def _case(name: str, check: Callable[[], tuple[bool, dict[str, Any] | None]]) -> CaseResult:
        try:
            ok, details = check()
        except AppException as exc:
            return CaseResult(name=name, status=CheckStatus.ERROR, details={'error': exc.message})
        if ok:
            return CaseResult(name=name)
        return CaseResult(name=name, status=CheckStatus.FAILED, details=details)

    def _appendix(self, rng: random.Random) -> Iterator[CaseResult]:
        for _ in range(self.samples):
            t = 10 ** rng.uniform(-6, 6)
            yield self._case(f'entropy_ineq[t={t:.6g}]', lambda t=t: (entropy_ineq_check(t), {'t': t}))

        for _ in range(self.samples):
            name, f, derivatives = random_smooth_function(rng)
            a = rng.randint(1, 10)
            b = a + rng.randint(1, 20)
            p = rng.choice((3, 5))

            def em_check(f=f, derivatives=derivatives, a=a, b=b, p=p):
                approx, bound = euler_maclaurin(f, derivatives, a, b, p)
                exact = math.fsum(f(k) for k in range(a, b + 1))
                error = abs(exact - approx)
                return error <= bound + SUM_SLACK * max(1.0, abs(exact)), {'error': error, 'bound': bound}

            yield self._case(f'euler_maclaurin[{name},{a},{b},p={p}]', em_check)

        sandwiches = appendix_sandwiches(10**5)
        for key, ok in sandwiches.items():
            yield CaseResult(name=f'sandwich[{key}]', status=CheckStatus.OK if ok else CheckStatus.FAILED)

        for t in range(1, 51):
            for n in range(1, 51):
                yield self._case(f'f_bound[t={t},n={n}]', lambda t=t, n=n: (f_bound_check(t, n)[2], {'t': t, 'n': n}))

        for n in range(1, 8):
            yield self._case(
                f'spanning_trees[n={n}]',
                lambda n=n: (spanning_trees_laplacian(n) == spanning_trees_staircase(n), {'n': n}),
            )

        for n in (10, 100, 1000):
            remainder = catalan_product_remainder(n)
            yield CaseResult(
                name=f'catalan_product_remainder[n={n}]',
                status=CheckStatus.OK if abs(remainder) <= n else CheckStatus.FAILED,
                details={'remainder': remainder},
            )

    def _duality(self, rng: random.Random) -> Iterator[CaseResult]:
        for netflow in small_suite(rng, self.n_max):

            def sandwich(netflow=netflow):
                log_count = math.log(count_exact(netflow))
                result = solve_entropy(netflow)
                lower = lower_bound_at(reference_flow(netflow), netflow).log_lower
                upper = upper_bound_at(result.flow, netflow, result.gap).log_upper
                capacity_gap = abs(result.dual - result.objective)
                ok = lower <= log_count <= upper + CAPACITY_TOL and capacity_gap <= CAPACITY_TOL
                return ok, {'lower': lower, 'log_count': log_count, 'upper': upper, 'capacity_gap': capacity_gap}

            yield self._case(f'sandwich[{netflow}]', sandwich)
            yield self._case(
                f'volume_duality[{netflow}]',
                lambda netflow=netflow: (
                    (gap := volume_duality_check(netflow)) <= VOLUME_TOL,
                    {'gap': gap},
                ),
            )

    def _lidskii(self, rng: random.Random) -> Iterator[CaseResult]:
        for netflow in small_suite(rng, self.n_max):
            if any(value < 0 for value in netflow.entries[:-1]):
                continue

            def formula(netflow=netflow):
                exact, via_lidskii = count_exact(netflow), lidskii_count(netflow)
                largest, nonzero = m_n(netflow), s_plus(netflow)
                ok = exact == via_lidskii and largest <= exact <= nonzero * largest
                return ok, {'exact': exact, 'lidskii': via_lidskii, 'm_n': largest, 's_plus': nonzero}

            yield self._case(f'lidskii[{netflow}]', formula)

        for n in range(2, self.n_max + 1):
            for t in range(1, 4):
                netflow = family(NamedFamily('cry', t=t), n)

                def closed_form(netflow=netflow, n=n, t=t):
                    nonzero = sum(1 for term in lidskii_terms(netflow) if term.term)
                    expected = inversions_at_most(n - 1, t)
                    return s_plus(netflow) == nonzero == expected, {'nonzero': nonzero, 'expected': expected}

                yield self._case(f's_plus_cry[n={n},t={t}]', closed_form)

        large_t = [(3, 14)] + [(2, t) for t in range(4, 21)]
        for n, t in large_t:

            def large_t_check(n=n, t=t):
                lower, upper = cry_large_t_counts(n, t)
                exact = count_exact(family(NamedFamily('cry', t=t), n))
                return lower <= exact <= upper, {'lower': lower, 'exact': exact, 'upper': upper}

            yield self._case(f'cry_large_t[n={n},t={t}]', large_t_check)


    def _oracle(self, rng: random.Random) -> Iterator[CaseResult]:
        drawn = 0
        while drawn < self.samples:
            netflow = random_netflow(rng, self.n_max)
            # a count of K never needs more than K (n + 1) memo states
            try:
                exact = count_exact(netflow, max_states=self.oracle_max_count * (netflow.n + 1))
            except ResourceLimitError:
                continue
            if exact > self.oracle_max_count:
                continue
            drawn += 1

            def agree(netflow=netflow, exact=exact):
                brute = count_brute(netflow, threads=1)
                return brute == exact, {'exact': exact, 'brute': brute}

            yield self._case(f'oracle[{netflow}]', agree)

    def _monotone(self, rng: random.Random) -> Iterator[CaseResult]:
        drawn = 0
        while drawn < self.samples:
            larger = random_netflow(rng, self.n_max)
            try:
                count_exact(larger, max_states=MONOTONE_MAX_STATES)
            except ResourceLimitError:
                continue
            drawn += 1
            smaller = push_right(rng, larger, rng.randint(1, 6))

            def monotone(larger=larger, smaller=smaller):
                big = count_exact(larger, max_states=MONOTONE_MAX_STATES)
                small = count_exact(smaller, max_states=MONOTONE_MAX_STATES)
                ok = dominates(larger.entries, smaller.entries) and big >= small
                return ok, {'dominating': big, 'dominated': small}

            yield self._case(f'monotone[{larger} >= {smaller}]', monotone)
