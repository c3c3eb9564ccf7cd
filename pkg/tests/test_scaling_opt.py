"""
Alternating-scaling optimizer: entropy maximisation, capacity duality and the log-product dual.
"""

import math
from itertools import pairwise

import pytest

from kostant_bounds.application.services.entropy_bounds import flow_entropy, lower_bound_at, upper_bound_at
from kostant_bounds.application.services.exact_count import count_exact
from kostant_bounds.application.services.scaling_opt import (
    capacity_log,
    dual_objective,
    duality_gap,
    maximize_entropy,
    maximize_log_product,
    solve_entropy,
    volume_duality_check,
)
from kostant_bounds.application.services.vertex_average import reference_flow
from kostant_bounds.domain.families import NamedFamily, family
from kostant_bounds.domain.netflow import make_netflow
from kostant_bounds.lib.errors import ZeroMarginalError
from kostant_bounds.lib.numeric import h
from kostant_bounds.lib.schemas import ScalingPoint

CAPACITY_TOL = 1e-6
VOLUME_TOL = 1e-5


class TestEntropyMaximisation:
    def test_sandwich(self, small_netflows):
        for netflow in small_netflows:
            log_count = math.log(count_exact(netflow))
            result = solve_entropy(netflow)
            lower = lower_bound_at(reference_flow(netflow), netflow).log_lower
            upper = upper_bound_at(result.flow, netflow, result.gap).log_upper
            assert lower <= log_count <= upper + CAPACITY_TOL

    def test_capacity_duality(self, small_netflows):
        for netflow in small_netflows:
            assert duality_gap(netflow) <= CAPACITY_TOL

    def test_capacity_is_dual_value(self, tesler3):
        result = solve_entropy(tesler3)
        assert capacity_log(tesler3) == result.dual
        assert dual_objective(result.point, tesler3) == pytest.approx(result.dual)

    def test_dual_bounds_every_flow(self, tesler3):
        result = solve_entropy(tesler3)
        average = reference_flow(tesler3)
        assert flow_entropy(average, tesler3) <= result.dual + CAPACITY_TOL

    def test_maximiser_is_exact_and_feasible(self, tesler3):
        flow, entropy, gap = maximize_entropy(tesler3)
        assert flow.exact
        assert entropy == pytest.approx(flow_entropy(flow, tesler3))
        assert gap >= 0

    def test_optimum_beats_the_average(self):
        netflow = family(NamedFamily('tesler'), 5)
        _, entropy, _ = maximize_entropy(netflow)
        assert entropy >= flow_entropy(reference_flow(netflow), netflow) - CAPACITY_TOL

    def test_trace_recorded(self, tesler3):
        result = solve_entropy(tesler3)
        assert result.sweeps >= 1
        assert len(result.trace) >= 1
        assert result.residual <= 1e-6

    def test_zero_netflow(self):
        result = solve_entropy(make_netflow([0, 0, 0]))
        assert result.objective == 0.0
        assert result.dual == 0.0

    def test_zero_cut_is_handled(self):
        netflow = make_netflow([1, -1, 1, -1])
        result = solve_entropy(netflow)
        assert result.gap <= CAPACITY_TOL
        assert math.log(count_exact(netflow)) <= result.objective + result.gap + CAPACITY_TOL

    def test_infeasible_point(self, tesler3):
        assert dual_objective(ScalingPoint((1.0, 1.0, 1.0), (1.0, 1.0, 1.0)), tesler3) == math.inf


class TestLogProduct:
    def test_volume_duality(self):
        for params in (NamedFamily('tesler'), NamedFamily('cry', t=2), NamedFamily('staircase', t=1)):
            for n in range(2, 6):
                assert volume_duality_check(family(params, n)) <= VOLUME_TOL

    def test_maximiser_is_interior(self, tesler3):
        flow, objective = maximize_log_product(tesler3)
        assert all(value > 0 for *_, value in flow.cells())
        assert math.isfinite(objective)

    def test_zero_marginal(self):
        with pytest.raises(ZeroMarginalError):
            maximize_log_product(make_netflow([1, -1, 1, -1]))


class TestDualProperties:
    def test_trace_is_monotone(self):
        result = solve_entropy(family(NamedFamily('tesler'), 5))
        duals = [row.dual for row in result.trace]
        assert all(later <= earlier + 1e-10 * max(1.0, abs(earlier)) for earlier, later in pairwise(duals))

    @pytest.mark.parametrize('scale', [0.25, 1.7, 40.0])
    def test_gauge_invariance(self, tesler3, scale):
        point = solve_entropy(tesler3).point
        moved = ScalingPoint(tuple(x * scale for x in point.x), tuple(y / scale for y in point.y))
        assert dual_objective(moved, tesler3) == pytest.approx(dual_objective(point, tesler3), rel=1e-12)

    def test_tesler_ratio_trend(self):
        ratios = []
        for n in range(3, 9):
            netflow = family(NamedFamily('tesler'), n)
            ratios.append(math.log(count_exact(netflow)) / solve_entropy(netflow).dual)
        assert all(ratio <= 1 + CAPACITY_TOL for ratio in ratios)
        for previous, current in pairwise(ratios):
            assert abs(current - 1) <= abs(previous - 1) or abs(current - previous) <= 0.05


class TestSymmetricInstances:
    @pytest.mark.parametrize('t', [1, 3, 7])
    def test_single_edge(self, t):
        netflow = make_netflow([t, -t])
        flow, entropy, gap = maximize_entropy(netflow)
        assert flow.flow(0, 1) == t
        assert entropy == pytest.approx(h(t))
        assert gap == pytest.approx(0.0, abs=CAPACITY_TOL)
        # cpc_t(1 / (1 - z)) = (t + 1)^(t + 1) / t^t, attained at z = t / (t + 1)
        assert capacity_log(netflow) == pytest.approx((t + 1) * math.log(t + 1) - t * math.log(t))

    @pytest.mark.parametrize(
        'entries', [[1, 0, 0, -1], [1, 0, 0, 0, -1], [2, -1, 1, -2], [1, 1, -1, -1], [3, 0, 0, -3]]
    )
    def test_maximiser_is_palindromic(self, entries):
        netflow = make_netflow(entries)
        assert netflow.reverse() == netflow
        flow, _, _ = maximize_entropy(netflow)
        n = netflow.n
        for i in range(n):
            for j in range(i + 1, n + 1):
                # edge (i, j) of the reversed DAG is (n - j, n - i)
                assert float(flow.flow(i, j)) == pytest.approx(float(flow.flow(n - j, n - i)), abs=1e-6)
