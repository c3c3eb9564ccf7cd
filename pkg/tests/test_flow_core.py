"""
Netflow validation, flows and the transportation embedding.
"""

import math
from fractions import Fraction
from itertools import product

import pytest

from kostant_bounds.application.services.closed_forms import catalan
from kostant_bounds.application.services.exact_count import count_exact, iter_integer_flows
from kostant_bounds.domain.families import NamedFamily, family
from kostant_bounds.domain.flow_matrix import (
    FlowMatrix,
    active_cells,
    combine,
    embed,
    project_box,
    project_ps,
    rationalize,
    support_cells,
)
from kostant_bounds.domain.netflow import dominates, make_netflow, parse_netflow
from kostant_bounds.lib.errors import (
    EmptyPolytopeError,
    InfeasibleFlowError,
    LengthMismatchError,
    NetflowError,
    NonZeroSumError,
)


class TestNetflow:
    def test_partial_sums_and_marginals(self, tesler3):
        assert tesler3.n == 3
        assert tesler3.partial_sums == (1, 2, 3)
        assert tesler3.alpha == (1, 2, 3)
        assert tesler3.beta == (3, 2, 1)
        assert tesler3.total == 3

    def test_parse(self):
        assert parse_netflow('1, 1,1,-3').entries == (1, 1, 1, -3)

    def test_parse_garbage(self):
        with pytest.raises(NetflowError):
            parse_netflow('1,x,-1')

    def test_nonzero_sum(self):
        with pytest.raises(NonZeroSumError):
            make_netflow([1, 1, -1])

    def test_negative_cut(self):
        with pytest.raises(EmptyPolytopeError) as info:
            make_netflow([1, -2, 1])
        assert info.value.details['negative_cuts'] == [1]

    def test_too_short(self):
        with pytest.raises(NetflowError):
            make_netflow([0])

    def test_reverse(self):
        assert make_netflow([2, -1, 1, -2]).reverse().entries == (2, -1, 1, -2)
        assert make_netflow([3, 0, -1, -2]).reverse().entries == (2, 1, 0, -3)

    def test_dominates(self):
        assert dominates([2, 0, 1], [1, 1, 1])
        assert not dominates([0, 2, 1], [1, 1, 1])
        with pytest.raises(LengthMismatchError):
            dominates([1], [1, 0])


class TestFlowMatrix:
    def test_subdiagonal(self, tesler3):
        flow = FlowMatrix.from_upper(tesler3, [[0, 0, 1], [1, 0], [2]])
        # g_1 = s_0 - f_01, g_2 = s_1 - f_02 - f_12
        assert flow.subdiag == (1, 1)
        assert flow.integral
        assert flow.out_flows() == (1, 1, 2)

    def test_fractional_flow(self, tesler3):
        half = Fraction(1, 2)
        flow = FlowMatrix.from_upper(tesler3, [[half, 0, half], [half, 1], [Fraction(3, 2)]])
        assert not flow.integral
        assert flow.exact

    def test_violated_conservation(self, tesler3):
        with pytest.raises(InfeasibleFlowError):
            FlowMatrix.from_upper(tesler3, [[1, 0, 0], [0, 1], [1]])

    def test_negative_entry(self, tesler3):
        with pytest.raises(InfeasibleFlowError):
            FlowMatrix.from_upper(tesler3, [[2, -1, 0], [0, 3], [3]])

    def test_shape_checked(self, tesler3):
        with pytest.raises(LengthMismatchError):
            FlowMatrix.from_upper(tesler3, [[1, 0], [1], [3]])

    def test_float_tolerance(self, tesler3):
        flow = FlowMatrix.from_upper(tesler3, [[1 / 3, 1 / 3, 1 / 3], [2 / 3, 2 / 3], [2.0]])
        assert not flow.exact
        assert all(value >= 0 for value in flow.subdiag)


class TestEmbedding:
    def test_support_size(self):
        for n in range(1, 8):
            assert len(support_cells(n)) == math.comb(n, 2) + 2 * n - 1

    def test_marginals(self, small_netflows):
        for netflow in small_netflows:
            n = netflow.n
            upper = [[0] * (n - i) for i in range(n)]
            # everything along the path 0 -> 1 -> ... -> n
            for i in range(n):
                upper[i][0] = netflow.partial_sums[i]
            flow = FlowMatrix.from_upper(netflow, upper)
            matrix = embed(flow, netflow)
            assert [sum(row) for row in matrix] == list(netflow.alpha)
            assert [sum(column) for column in zip(*matrix, strict=True)] == list(netflow.beta)
            for i in range(n):
                for c in range(n):
                    if i + c > n:
                        assert matrix[i][c] == 0

    def test_inverse(self, tesler3):
        flow = FlowMatrix.from_upper(tesler3, [[0, 0, 1], [1, 0], [2]])
        assert FlowMatrix.from_embedded(tesler3, embed(flow, tesler3)) == flow

    def test_active_cells_with_zero_cut(self):
        netflow = make_netflow([1, -1, 1, -1])
        active = active_cells(netflow)
        # s_1 = 0 kills every edge crossing the cut between vertices 1 and 2
        assert (0, 1) not in active  # f_02
        assert (1, 2) not in active  # g_1
        assert (0, 2) in active  # f_01
        assert len(active) < len(support_cells(3))

    def test_size_mismatch(self, tesler3):
        other = make_netflow([1, -1])
        flow = FlowMatrix.from_upper(other, [[1]])
        with pytest.raises(InfeasibleFlowError):
            embed(flow, tesler3)


class TestFlowOperations:
    def test_combine(self, tesler3):
        first = FlowMatrix.from_upper(tesler3, [[1, 0, 0], [2, 0], [3]])
        second = FlowMatrix.from_upper(tesler3, [[0, 0, 1], [1, 0], [2]])
        middle = combine(first, second, Fraction(1, 2), tesler3)
        assert middle.upper[0] == (Fraction(1, 2), 0, Fraction(1, 2))

    def test_rationalize_repairs(self, tesler3):
        flow = FlowMatrix.from_upper(tesler3, [[1 / 3, 1 / 3, 1 / 3], [2 / 3, 2 / 3], [2.0]])
        exact = rationalize(flow, tesler3, 1000)
        assert exact.exact
        assert exact.upper[0] == (Fraction(1, 3), Fraction(1, 3), Fraction(1, 3))
        assert sum(exact.upper[2]) == 2

    def test_projections(self, tesler3):
        flow = FlowMatrix.from_upper(tesler3, [[0, 0, 1], [1, 0], [2]])
        assert project_ps(flow, tesler3) == [1, 0]
        assert project_box(flow, tesler3) == [1, 1, 2]


class TestStructuralProperties:
    def test_embed_is_affine(self, rng, small_netflows):
        for netflow in small_netflows:
            flows = list(iter_integer_flows(netflow))
            for _ in range(10):
                first, second = rng.choice(flows), rng.choice(flows)
                weight = Fraction(rng.randint(0, 12), 12)
                mixed = embed(combine(first, second, weight, netflow), netflow)
                expected = [
                    [weight * a + (1 - weight) * b for a, b in zip(row_a, row_b, strict=True)]
                    for row_a, row_b in zip(embed(first, netflow), embed(second, netflow), strict=True)
                ]
                assert mixed == expected

    def test_embed_is_injective(self, small_netflows):
        for netflow in small_netflows:
            images = {
                tuple(map(tuple, embed(flow, netflow))) for flow in iter_integer_flows(netflow)
            }
            assert len(images) == count_exact(netflow)

    def test_dominance_is_a_partial_order(self):
        vectors = [v for v in product(range(-2, 3), repeat=3) if sum(v) == 0]
        for a, b in product(vectors, repeat=2):
            if dominates(a, b) and dominates(b, a):
                assert a == b
        for a, b, c in product(vectors, repeat=3):
            if dominates(a, b) and dominates(b, c):
                assert dominates(a, c)
        assert all(dominates(v, v) for v in vectors)

    @pytest.mark.parametrize('n', range(1, 7))
    def test_tesler_projection_has_catalan_many_points(self, n):
        netflow = family(NamedFamily('tesler'), n)
        image = {tuple(project_ps(flow, netflow)) for flow in iter_integer_flows(netflow)}
        # the lattice points of the Pitman-Stanley polytope PS_{n-1}(1, ..., 1)
        assert len(image) == catalan(n)
