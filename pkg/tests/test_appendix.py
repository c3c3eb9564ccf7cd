"""
Summation tools and elementary inequalities.
"""

import math

import pytest

from kostant_bounds.application.services.appendix import (
    appendix_sandwiches,
    catalan_product_remainder,
    entropy_ineq_check,
    euler_maclaurin,
    spanning_trees_laplacian,
    spanning_trees_staircase,
    unimodal_sum_lb,
)
from kostant_bounds.lib.errors import DomainViolationError

KLOGK_DERIVATIVES = [lambda x: math.log(x) + 1, lambda x: 1 / x, lambda x: -1 / x**2]


def klogk(x):
    return x * math.log(x)


class TestEulerMaclaurin:
    def test_klogk(self):
        approx, bound = euler_maclaurin(klogk, KLOGK_DERIVATIVES, 1, 100, 3)
        exact = math.fsum(klogk(k) for k in range(1, 101))
        assert 0 < bound < 0.01
        assert abs(exact - approx) <= bound + 1e-9

    def test_constant(self):
        zero = lambda x: 0.0
        approx, bound = euler_maclaurin(lambda x: 2.0, [zero, zero, zero], 1, 100, 3)
        assert approx == pytest.approx(200.0)
        assert bound == 0.0

    def test_first_order_has_no_bound(self):
        _, bound = euler_maclaurin(klogk, KLOGK_DERIVATIVES, 1, 10, 1)
        assert bound == math.inf

    @pytest.mark.parametrize(('a', 'b', 'p', 'derivatives'), [(5, 5, 3, 3), (1, 10, 2, 3), (1, 10, 5, 3)])
    def test_domain(self, a, b, p, derivatives):
        with pytest.raises(DomainViolationError):
            euler_maclaurin(klogk, KLOGK_DERIVATIVES[:derivatives], a, b, p)


class TestUnimodal:
    def test_lower_bound(self):
        n = 100

        def f(t):
            return (n + 1) / t * math.log(t * t / (n + 1))

        a, b = math.sqrt(n + 1), n + 1
        direct = math.fsum(f(k) for k in range(math.floor(a) + 1, b))
        lower = unimodal_sum_lb(f, a, b)
        assert lower <= direct
        assert direct - lower <= 2 * f(math.e * math.sqrt(n + 1))

    def test_domain(self):
        with pytest.raises(DomainViolationError):
            unimodal_sum_lb(math.sin, 2.0, 1.0)


class TestInequalities:
    @pytest.mark.parametrize('t', [1e-3, 0.5, 1, 10, 1e6])
    def test_entropy(self, t):
        assert entropy_ineq_check(t)

    def test_entropy_domain(self):
        with pytest.raises(DomainViolationError):
            entropy_ineq_check(0)

    def test_sandwiches(self):
        results = appendix_sandwiches(200)
        assert {'exp_ratio', 'stirling', 'harmonic', 'klogk_sum', 'logk_over_k_sum'} <= set(results)
        assert 'power_sum[p=0.5]' in results
        assert all(results.values())

    def test_sandwiches_domain(self):
        with pytest.raises(DomainViolationError):
            appendix_sandwiches(0)

    @pytest.mark.parametrize('n', [1, 10, 100, 1000])
    def test_catalan_remainder(self, n):
        assert abs(catalan_product_remainder(n)) <= n


class TestSpanningTrees:
    @pytest.mark.parametrize('n', range(1, 7))
    def test_matrix_tree_theorem(self, n):
        assert spanning_trees_laplacian(n) == spanning_trees_staircase(n)

    def test_small_values(self):
        assert [spanning_trees_staircase(n) for n in (1, 2, 3)] == [1, 4, 36]

    def test_domain(self):
        with pytest.raises(DomainViolationError):
            spanning_trees_staircase(0)
