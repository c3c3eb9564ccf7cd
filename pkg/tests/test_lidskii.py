"""
The Lidskii formula, its term bounds and the large-t CRY window.
"""

import math
from itertools import product

import pytest

from kostant_bounds.application.services.exact_count import count_exact, inversions_at_most
from kostant_bounds.application.services.lidskii import (
    cry_large_t_bounds,
    cry_large_t_counts,
    lidskii_bounds,
    lidskii_count,
    lidskii_term,
    lidskii_terms,
    m_n,
    positive_compositions,
    s_plus,
)
from kostant_bounds.domain.families import NamedFamily, family
from kostant_bounds.domain.netflow import make_netflow
from kostant_bounds.lib.errors import NegativeEntryError, RegimeViolationError, ResourceLimitError
from kostant_bounds.lib.schemas import BoundMethod, WeakComposition


def nonnegative_netflows(n_max=4, high=3):
    for n in range(1, n_max + 1):
        for head in product(range(high + 1), repeat=n):
            if n == n_max and sum(head) > 4:
                continue
            yield make_netflow([*head, -sum(head)])


class TestCompositions:
    def test_cry(self, cry3):
        assert [c.parts for c in positive_compositions(cry3)] == [(3, 0, 0), (2, 1, 0)]

    def test_tesler(self, tesler3):
        parts = [c.parts for c in positive_compositions(tesler3)]
        assert parts == [(3, 0, 0), (2, 1, 0)]

    def test_delta_always_present(self):
        for netflow in nonnegative_netflows(3):
            delta = tuple(range(netflow.n - 1, -1, -1))
            assert delta in [c.parts for c in positive_compositions(netflow)]

    def test_excluded_compositions_vanish(self):
        # every composition of C(n, 2) outside the stream gives a zero term
        for netflow in nonnegative_netflows(3, high=2):
            n = netflow.n
            total = math.comb(n, 2)
            kept = {c.parts for c in positive_compositions(netflow)}
            for parts in product(range(total + 1), repeat=n):
                if sum(parts) != total:
                    continue
                term = lidskii_term(netflow, WeakComposition(parts))
                assert (term > 0) == (parts in kept)

    def test_negative_entry(self):
        with pytest.raises(NegativeEntryError):
            list(positive_compositions(make_netflow([2, -1, 1, -2])))

    def test_cap(self):
        with pytest.raises(ResourceLimitError):
            list(positive_compositions(family(NamedFamily('tesler'), 6), cap=3))


class TestLidskiiCount:
    def test_terms(self, cry3):
        terms = [(t.composition.parts, t.binomial, t.kostant, t.term) for t in lidskii_terms(cry3)]
        assert terms == [((3, 0, 0), 1, 1, 1), ((2, 1, 0), 3, 1, 3)]

    def test_tesler(self, tesler3):
        assert lidskii_count(tesler3) == 7

    def test_matches_exact(self):
        for netflow in nonnegative_netflows(4):
            assert lidskii_count(netflow) == count_exact(netflow)

    def test_delta_term(self, tesler3):
        n = tesler3.n
        expected = math.prod(math.comb(tesler3.entries[i] + n - 1 - i, n - 1 - i) for i in range(n))
        assert lidskii_term(tesler3, WeakComposition((2, 1, 0))) == expected


class TestBounds:
    def test_cry(self, cry3):
        assert s_plus(cry3) == 2
        assert m_n(cry3) == 3
        report = lidskii_bounds(cry3)
        assert report.method == BoundMethod.LIDSKII
        assert report.log_lower == pytest.approx(math.log(3))
        assert report.log_upper == pytest.approx(math.log(6))

    def test_zero_netflow(self):
        netflow = make_netflow([0, 0, 0])
        assert s_plus(netflow) == 1
        assert m_n(netflow) == 1

    def test_sandwich(self):
        for netflow in nonnegative_netflows(4):
            largest, count = m_n(netflow), count_exact(netflow)
            assert largest <= count <= s_plus(netflow) * largest

    @pytest.mark.parametrize('n', range(2, 7))
    def test_s_plus_cry(self, n):
        for t in range(1, math.comb(n - 1, 2) + 3):
            netflow = family(NamedFamily('cry', t=t), n)
            expected = inversions_at_most(n - 1, t)
            assert s_plus(netflow) == expected
            if n <= 5:
                assert sum(1 for _ in positive_compositions(netflow)) == expected

    def test_cry_saturates(self):
        assert s_plus(family(NamedFamily('cry', t=10), 5)) == math.factorial(4)


class TestLargeT:
    def test_three_fourteen(self):
        lower, upper = cry_large_t_counts(3, 14)
        assert (lower, upper) == (560, 1120)
        assert lower <= count_exact(family(NamedFamily('cry', t=14), 3)) <= upper

    @pytest.mark.parametrize('t', range(4, 21))
    def test_two_collapses(self, t):
        lower, upper = cry_large_t_counts(2, t)
        assert lower == upper == t + 1 == count_exact(family(NamedFamily('cry', t=t), 2))

    def test_regime(self):
        with pytest.raises(RegimeViolationError):
            cry_large_t_bounds(3, 13)

    def test_report(self):
        report = cry_large_t_bounds(3, 14)
        assert report.certified
        assert report.log_upper - report.log_lower == pytest.approx(math.log(2))
