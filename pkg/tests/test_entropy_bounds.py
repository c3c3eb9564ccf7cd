"""
Entropy bounds at explicit flows, the closed product forms and the volume bound.
"""

import math
from fractions import Fraction

import pytest

from kostant_bounds.application.services.entropy_bounds import (
    correction_log,
    cry_explicit_log,
    cry_product_log,
    flow_entropy,
    general_lower_bound,
    lower_bound_at,
    matrix_product_log,
    tesler_explicit_log,
    tesler_product_log,
    two_rho_product_log,
    upper_bound_at,
    volume_lower_bound,
)
from kostant_bounds.application.services.exact_count import count_exact, iter_integer_flows
from kostant_bounds.application.services.vertex_average import (
    average_cry,
    average_positive,
    enumerate_vertices,
    midpoint_2rho,
)
from kostant_bounds.domain.families import NamedFamily, family
from kostant_bounds.domain.flow_matrix import FlowMatrix, combine
from kostant_bounds.domain.netflow import make_netflow
from kostant_bounds.lib.errors import HypothesisViolationError, InfeasibleFlowError, ZeroMarginalError
from kostant_bounds.lib.numeric import h
from kostant_bounds.lib.schemas import BoundMethod


class TestEntropyFunction:
    def test_values(self):
        assert h(0) == 0.0
        assert h(1) == pytest.approx(2 * math.log(2))
        assert h(Fraction(1, 2)) == pytest.approx(1.5 * math.log(1.5) - 0.5 * math.log(0.5))

    def test_large_argument(self):
        # h(t) = log t + 1 + O(1/t)
        assert h(1e12) == pytest.approx(math.log(1e12) + 1, rel=1e-12)

    def test_correction_is_nonpositive(self, small_netflows):
        for netflow in small_netflows:
            assert correction_log(netflow) <= 0


class TestLowerBoundAt:
    def test_sandwich_tesler(self):
        for n in range(2, 7):
            netflow = family(NamedFamily('tesler'), n)
            report = lower_bound_at(average_positive(netflow), netflow)
            assert report.certified
            assert report.method == BoundMethod.ENTROPY_AT_FLOW
            assert report.log_lower <= math.log(count_exact(netflow))

    def test_every_integer_flow_gives_a_bound(self, tesler3):
        flow = FlowMatrix.from_upper(tesler3, [[0, 0, 1], [1, 0], [2]])
        assert lower_bound_at(flow, tesler3).log_lower <= math.log(7)

    def test_float_flow_is_repaired(self, tesler3):
        flow = FlowMatrix.from_upper(tesler3, [[1 / 3, 1 / 3, 1 / 3], [2 / 3, 2 / 3], [2.0]])
        exact = FlowMatrix.from_upper(
            tesler3,
            [[Fraction(1, 3)] * 3, [Fraction(2, 3)] * 2, [Fraction(2)]],
        )
        assert lower_bound_at(flow, tesler3).log_lower == lower_bound_at(exact, tesler3).log_lower

    def test_matrix_reading_agrees(self, small_netflows):
        for netflow in small_netflows:
            n = netflow.n
            flow = FlowMatrix.from_upper(
                netflow, [[netflow.partial_sums[i]] + [0] * (n - i - 1) for i in range(n)]
            )
            assert matrix_product_log(netflow, flow) == lower_bound_at(flow, netflow).log_lower

    def test_foreign_flow(self, tesler3):
        other = make_netflow([1, 0, -1])
        with pytest.raises(InfeasibleFlowError):
            flow_entropy(FlowMatrix.from_upper(other, [[1, 0], [1]]), tesler3)


class TestProductForms:
    @pytest.mark.parametrize('n', range(1, 9))
    def test_tesler_bit_for_bit(self, n):
        netflow = family(NamedFamily('tesler'), n)
        assert tesler_product_log(n) == lower_bound_at(average_positive(netflow), netflow).log_lower

    @pytest.mark.parametrize(('n', 't'), [(2, 1), (3, 1), (4, 2), (6, 5), (8, 3)])
    def test_cry_bit_for_bit(self, n, t):
        netflow = family(NamedFamily('cry', t=t), n)
        assert cry_product_log(n, t) == lower_bound_at(average_cry(n, t), netflow).log_lower

    @pytest.mark.parametrize(('n', 't'), [(2, 1), (3, 1), (5, 2), (7, 4)])
    def test_two_rho_bit_for_bit(self, n, t):
        netflow = family(NamedFamily('two_rho', t=t), n)
        assert two_rho_product_log(n, t) == lower_bound_at(midpoint_2rho(n, t), netflow).log_lower


class TestUpperBoundAt:
    def test_report(self, tesler3):
        flow = FlowMatrix.from_upper(tesler3, [[0, 0, 1], [1, 0], [2]])
        report = upper_bound_at(flow, tesler3, opt_gap=0.25)
        assert report.method == BoundMethod.ENTROPY_OPT
        assert report.log_upper == pytest.approx(flow_entropy(flow, tesler3) + 0.25)
        assert report.log_lower <= report.log_upper

    def test_negative_gap_clipped(self, tesler3):
        flow = FlowMatrix.from_upper(tesler3, [[0, 0, 1], [1, 0], [2]])
        assert upper_bound_at(flow, tesler3, opt_gap=-1.0).log_upper == flow_entropy(flow, tesler3)

    def test_uncertified_gap(self, tesler3):
        flow = FlowMatrix.from_upper(tesler3, [[0, 0, 1], [1, 0], [2]])
        assert not upper_bound_at(flow, tesler3, 0.0, certified=False).certified


class TestVolumeBound:
    def test_positive_average(self):
        netflow = family(NamedFamily('tesler'), 3)
        value = volume_lower_bound(average_positive(netflow), netflow)
        assert math.isfinite(value)

    def test_zero_entry(self, tesler3):
        flow = FlowMatrix.from_upper(tesler3, [[0, 0, 1], [1, 0], [2]])
        with pytest.raises(ZeroMarginalError):
            volume_lower_bound(flow, tesler3)

    def test_zero_cut(self):
        netflow = make_netflow([1, -1, 1, -1])
        flow = FlowMatrix.from_upper(netflow, [[1, 0, 0], [0, 0], [1]])
        with pytest.raises(ZeroMarginalError):
            volume_lower_bound(flow, netflow)


class TestGeneralLowerBound:
    @pytest.mark.parametrize('variant', [1, 2])
    def test_below_exact(self, variant):
        for params in (NamedFamily('tesler'), NamedFamily('staircase', t=2), NamedFamily('dilated_tesler', t=3)):
            for n in range(2, 6):
                netflow = family(params, n)
                report = general_lower_bound(netflow, variant)
                assert report.log_lower <= math.log(count_exact(netflow))

    def test_hypotheses(self):
        with pytest.raises(HypothesisViolationError):
            general_lower_bound(make_netflow([1, 2, -3, 0]), 1)

    def test_unknown_variant(self, tesler3):
        with pytest.raises(HypothesisViolationError):
            general_lower_bound(tesler3, 3)


class TestExplicitForms:
    def test_tesler_explicit_is_below_exact(self):
        for n in range(1, 7):
            assert tesler_explicit_log(n).log_lower <= math.log(count_exact(family(NamedFamily('tesler'), n)))

    def test_cry_explicit_regime(self):
        with pytest.raises(HypothesisViolationError):
            cry_explicit_log(3, 10)
        assert cry_explicit_log(10, 2).log_lower <= math.log(count_exact(family(NamedFamily('cry', t=2), 10)))


class TestFlowEntropy:
    def test_cry_vertices(self, cry3):
        vertices = enumerate_vertices(cry3)
        assert len(vertices) == 4
        for vertex in vertices:
            # three unit entries in the embedding, each contributing h(1)
            assert flow_entropy(vertex, cry3) == pytest.approx(6 * math.log(2))

    def test_concave(self, rng, small_netflows):
        for netflow in small_netflows:
            flows = list(iter_integer_flows(netflow))
            for _ in range(10):
                first, second = rng.choice(flows), rng.choice(flows)
                weight = Fraction(rng.randint(0, 10), 10)
                mixed = flow_entropy(combine(first, second, weight, netflow), netflow)
                chord = float(weight) * flow_entropy(first, netflow) + float(1 - weight) * flow_entropy(second, netflow)
                assert mixed >= chord - 1e-12
