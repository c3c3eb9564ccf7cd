"""
Capacity of the flow generating series and the matching entropy supremum.

The dual of sup_f H(f) over the transportation image of F_n(N) is

    D(x, y) = sum_{cells} -log(1 - x_i y_j) - <alpha, log x> - <beta, log y>,

minimised by alternating row/column scaling: each x_i solves sum_j x_i y_j / (1 - x_i y_j) = alpha_i
for fixed y, and symmetrically. The volume analogue replaces the cell entropy with log a_ij, whose
stationary point is a_ij = -1 / (u_i + v_j).

Cells forced to zero by a zero cut s_k = 0 are dropped before optimizing.
"""

from __future__ import annotations

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.optimize import brentq

from kostant_bounds.application.services.entropy_bounds import flow_entropy
from kostant_bounds.config.base_settings import get_settings
from kostant_bounds.domain.flow_matrix import FlowMatrix, active_cells, repair_upper
from kostant_bounds.domain.netflow import NetflowVector
from kostant_bounds.lib.errors import NoConvergenceError, ZeroMarginalError
from kostant_bounds.lib.logger import logger
from kostant_bounds.lib.schemas import ScalingPoint, ScalingTraceRow

__all__ = [
    'ScalingResult',
    'capacity_log',
    'dual_objective',
    'duality_gap',
    'maximize_entropy',
    'maximize_log_product',
    'solve_entropy',
    'solve_log_product',
    'volume_duality_check',
]

settings = get_settings()

ROOT_RTOL = 4 * np.finfo(float).eps
ARMIJO = 1e-4
STALL_RATIO = 0.99


@dataclass(frozen=True, slots=True)
class ScalingResult:
    """
    Outcome of one optimizer run.

    Attributes:
        flow: Exact flow repaired from the stationary point.
        point: Final dual variables.
        objective: Primal objective at `flow` (entropy, or sum of log a_ij).
        dual: Dual objective at `point`.
        sweeps: Sweeps used, gradient steps included.
        residual: Marginal residual at `point`.
        fallback: True when the gradient fallback was used.
        trace: Per-sweep residual and dual value.
    """

    flow: FlowMatrix
    point: ScalingPoint
    objective: float
    dual: float
    sweeps: int
    residual: float
    fallback: bool
    trace: tuple[ScalingTraceRow, ...]

    @property
    def gap(self) -> float:
        """
        Rigorous duality gap dual - objective, clipped at zero.
        """

        return max(self.dual - self.objective, 0.0)


class _Support:
    """
    Active cells of the transportation image grouped by row and by column.
    """

    def __init__(self, netflow: NetflowVector) -> None:
        cells = active_cells(netflow)
        self.n = netflow.n
        self.cells = cells
        self.rows = np.array([i for i, _ in cells], dtype=int)
        self.cols = np.array([c for _, c in cells], dtype=int)
        self.alpha = np.array(netflow.alpha, dtype=float)
        self.beta = np.array(netflow.beta, dtype=float)
        self.row_members = {i: np.flatnonzero(self.rows == i) for i in sorted(set(self.rows.tolist()))}
        self.col_members = {c: np.flatnonzero(self.cols == c) for c in sorted(set(self.cols.tolist()))}
        self.active_rows = np.array(list(self.row_members), dtype=int)
        self.active_cols = np.array(list(self.col_members), dtype=int)

    def marginal_residual(self, values: np.ndarray) -> float:
        row_sums = np.bincount(self.rows, weights=values, minlength=self.n)
        col_sums = np.bincount(self.cols, weights=values, minlength=self.n)
        return float(np.max(np.abs(row_sums - self.alpha)) + np.max(np.abs(col_sums - self.beta)))

    def gradient(self, values: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        row_sums = np.bincount(self.rows, weights=values, minlength=self.n)
        col_sums = np.bincount(self.cols, weights=values, minlength=self.n)
        grad_x = np.zeros(self.n)
        grad_y = np.zeros(self.n)
        grad_x[self.active_rows] = (row_sums - self.alpha)[self.active_rows]
        grad_y[self.active_cols] = (col_sums - self.beta)[self.active_cols]
        return grad_x, grad_y


class _AlternatingScaler(ABC):
    """
    Alternating exact coordinate minimisation of a convex dual, with a gradient fallback.
    """

    phase_name = 'scaling'

    def __init__(self, netflow: NetflowVector, support: _Support, tol: float) -> None:
        self.netflow = netflow
        self.support = support
        self.target = tol * max(1.0, float(max(netflow.partial_sums, default=0)))

    @abstractmethod
    def initial(self) -> tuple[np.ndarray, np.ndarray]:
        """
        Feasible starting variables.
        """

    @abstractmethod
    def solve_one(self, partners: np.ndarray, target: float) -> float:
        """
        The row (or column) variable whose cells sum to `target` against fixed partner variables.
        """

    @abstractmethod
    def cell_values(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """
        a_ij on the active cells at a stationary point.
        """

    @abstractmethod
    def dual(self, x: np.ndarray, y: np.ndarray) -> float:
        """
        Dual objective, +inf outside the domain.
        """

    @abstractmethod
    def regauge(self, x: np.ndarray, y: np.ndarray) -> None:
        """
        Fix the one-parameter gauge in place.
        """

    @abstractmethod
    def to_params(self, x: np.ndarray, y: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """
        Coordinates in which the dual is convex and its gradient is the marginal residual.
        """

    @abstractmethod
    def from_params(self, p: np.ndarray, q: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        pass

    def sweep(self, x: np.ndarray, y: np.ndarray) -> None:
        support = self.support
        for i, members in support.row_members.items():
            x[i] = self.solve_one(y[support.cols[members]], support.alpha[i])
        for c, members in support.col_members.items():
            y[c] = self.solve_one(x[support.rows[members]], support.beta[c])
        self.regauge(x, y)

    def gradient_step(self, x: np.ndarray, y: np.ndarray, step: float) -> tuple[np.ndarray, np.ndarray, float]:
        """
        One damped gradient step with Armijo backtracking; returns the new point and next step size.
        """

        grad_x, grad_y = self.support.gradient(self.cell_values(x, y))
        p, q = self.to_params(x, y)
        current = self.dual(x, y)
        norm = float(grad_x @ grad_x + grad_y @ grad_y)
        while step > 1e-300:  # noqa: PLR2004
            cand_x, cand_y = self.from_params(p - step * grad_x, q - step * grad_y)
            if self.dual(cand_x, cand_y) <= current - ARMIJO * step * norm:
                return cand_x, cand_y, step * 2.0
            step /= 2.0
        raise NoConvergenceError('Gradient fallback line search failed', details={'n': self.support.n})

    def run(self, max_sweeps: int, stall_window: int) -> tuple[np.ndarray, np.ndarray, int, float, bool, list]:
        x, y = self.initial()
        trace: list[ScalingTraceRow] = []
        previous = self.dual(x, y)
        checkpoint = math.inf
        fallback, step = False, 1.0
        residual = math.inf
        for sweep in range(1, max_sweeps + 1):
            if fallback:
                x, y, step = self.gradient_step(x, y, step)
            else:
                self.sweep(x, y)
            residual = self.support.marginal_residual(self.cell_values(x, y))
            value = self.dual(x, y)
            trace.append(ScalingTraceRow(
                sweep=sweep, residual=residual, dual=value, phase='gradient' if fallback else self.phase_name
            ))
            if value > previous + 1e-12 * max(1.0, abs(previous)):
                logger.warning('Dual objective increased', sweep=sweep, previous=previous, current=value)
            previous = value
            if residual <= self.target:
                logger.debug('Optimizer converged', sweeps=sweep, residual=residual, dual=value)
                return x, y, sweep, residual, fallback, trace
            if not fallback and sweep % stall_window == 0:
                if residual > STALL_RATIO * checkpoint:
                    fallback = True
                    logger.warning('Scaling stalled, switching to gradient descent', sweep=sweep, residual=residual)
                checkpoint = residual
        raise NoConvergenceError(
            details={'n': self.support.n, 'sweeps': max_sweeps, 'residual': residual, 'target': self.target}
        )


class _EntropyScaler(_AlternatingScaler):
    def __init__(self, netflow: NetflowVector, support: _Support, tol: float, eps: float) -> None:
        super().__init__(netflow, support, tol)
        self.eps = eps

    def initial(self) -> tuple[np.ndarray, np.ndarray]:
        return np.full(self.support.n, 0.5), np.full(self.support.n, 0.5)

    def solve_one(self, partners: np.ndarray, target: float) -> float:
        upper = (1.0 - self.eps) / float(partners.max())

        def excess(z: float) -> float:
            products = z * partners
            return float(np.sum(products / (1.0 - products))) - target

        if excess(upper) <= 0:
            return upper
        root = brentq(excess, 0.0, upper, xtol=1e-300, rtol=ROOT_RTOL)
        # Newton polish
        products = root * partners
        slope = float(np.sum(partners / (1.0 - products) ** 2))
        polished = root - excess(root) / slope
        if 0 < polished < upper and abs(excess(polished)) < abs(excess(root)):
            return polished
        return root

    def cell_values(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        products = x[self.support.rows] * y[self.support.cols]
        return products / (1.0 - products)

    def dual(self, x: np.ndarray, y: np.ndarray) -> float:
        support = self.support
        products = x[support.rows] * y[support.cols]
        if np.any(products >= 1.0) or np.any(products <= 0.0):
            return math.inf
        rows, cols = support.active_rows, support.active_cols
        return math.fsum([
            *(-np.log1p(-products)).tolist(),
            *(-support.alpha[rows] * np.log(x[rows])).tolist(),
            *(-support.beta[cols] * np.log(y[cols])).tolist(),
        ])

    def regauge(self, x: np.ndarray, y: np.ndarray) -> None:
        rows, cols = self.support.active_rows, self.support.active_cols
        shift = (np.mean(np.log(y[cols])) - np.mean(np.log(x[rows]))) / 2.0
        x[rows] *= math.exp(shift)
        y[cols] *= math.exp(-shift)

    def to_params(self, x: np.ndarray, y: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        return np.log(x), np.log(y)

    def from_params(self, p: np.ndarray, q: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        return np.exp(p), np.exp(q)


class _LogProductScaler(_AlternatingScaler):
    phase_name = 'log_product'

    def initial(self) -> tuple[np.ndarray, np.ndarray]:
        return np.full(self.support.n, -1.0), np.full(self.support.n, -1.0)

    def solve_one(self, partners: np.ndarray, target: float) -> float:
        top = float(partners.max())
        gaps = top - partners
        count = len(partners)

        def excess(d: float) -> float:
            return float(np.sum(1.0 / (d + gaps))) - target

        d = brentq(excess, 1.0 / target, 2.0 * count / target, xtol=1e-300, rtol=ROOT_RTOL)
        return -top - d

    def cell_values(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return -1.0 / (x[self.support.rows] + y[self.support.cols])

    def dual(self, x: np.ndarray, y: np.ndarray) -> float:
        sums = x[self.support.rows] + y[self.support.cols]
        if np.any(sums >= 0.0):
            return math.inf
        return math.fsum([
            *(-np.log(-sums)).tolist(),
            *(-self.support.alpha * x).tolist(),
            *(-self.support.beta * y).tolist(),
        ])

    def regauge(self, x: np.ndarray, y: np.ndarray) -> None:
        shift = (float(np.mean(y)) - float(np.mean(x))) / 2.0
        x += shift
        y -= shift

    def to_params(self, x: np.ndarray, y: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        return x.copy(), y.copy()

    def from_params(self, p: np.ndarray, q: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        return p, q


def _upper_from_cells(support: _Support, values: np.ndarray) -> list[list[float]]:
    n = support.n
    upper = [[0.0] * (n - i) for i in range(n)]
    for (i, c), value in zip(support.cells, values.tolist(), strict=True):
        j = n - c
        if j > i:
            upper[i][j - i - 1] = value
    return upper


def _trivial(netflow: NetflowVector) -> ScalingResult:
    n = netflow.n
    flow = FlowMatrix.from_upper(netflow, [[0] * (n - i) for i in range(n)])
    ones = (1.0,) * n
    return ScalingResult(flow, ScalingPoint(ones, ones), 0.0, 0.0, 0, 0.0, False, ())


@lru_cache(maxsize=128)
def solve_entropy(netflow: NetflowVector, tol: float | None = None) -> ScalingResult:
    """
    Maximise the flow entropy by alternating scaling.

    Args:
        netflow: The netflow vector.
        tol: Marginal residual tolerance, relative to max(1, max s_k).

    Returns:
        The repaired optimal flow with its entropy and the dual value at the scaling point.

    Raises:
        NoConvergenceError: If the sweep cap is reached.
    """

    tol = tol or settings.scaling.TOL
    support = _Support(netflow)
    if not support.cells:
        return _trivial(netflow)
    scaler = _EntropyScaler(netflow, support, tol, settings.scaling.EPS)
    x, y, sweeps, residual, fallback, trace = scaler.run(settings.scaling.MAX_SWEEPS, settings.scaling.STALL_WINDOW)
    values = scaler.cell_values(x, y)
    flow = repair_upper(netflow, _upper_from_cells(support, values), settings.scaling.DENOMINATOR)
    return ScalingResult(
        flow=flow,
        point=ScalingPoint(tuple(x.tolist()), tuple(y.tolist())),
        objective=flow_entropy(flow, netflow),
        dual=scaler.dual(x, y),
        sweeps=sweeps,
        residual=residual,
        fallback=fallback,
        trace=tuple(trace),
    )


def maximize_entropy(netflow: NetflowVector, tol: float | None = None) -> tuple[FlowMatrix, float, float]:
    """
    (f_star, H_star, gap): the repaired maximiser, its entropy and the rigorous duality gap.
    """

    result = solve_entropy(netflow, tol)
    return result.flow, result.objective, result.gap


def capacity_log(netflow: NetflowVector, tol: float | None = None) -> float:
    """
    log cpc_{alpha,beta}(Phi') evaluated at the final scaling point.
    """

    return solve_entropy(netflow, tol).dual


def duality_gap(netflow: NetflowVector, tol: float | None = None) -> float:
    """
    |capacity_log - H_star|.
    """

    result = solve_entropy(netflow, tol)
    return abs(result.dual - result.objective)


def dual_objective(point: ScalingPoint, netflow: NetflowVector) -> float:
    """
    D(x, y) on the active cells; +inf when some x_i y_j >= 1.
    """

    support = _Support(netflow)
    if not support.cells:
        return 0.0
    scaler = _EntropyScaler(netflow, support, settings.scaling.TOL, settings.scaling.EPS)
    return scaler.dual(np.array(point.x, dtype=float), np.array(point.y, dtype=float))


@lru_cache(maxsize=128)
def solve_log_product(netflow: NetflowVector, tol: float | None = None) -> ScalingResult:
    """
    Maximise sum_{i+j<=n} log a_ij over the transportation image.

    Raises:
        ZeroMarginalError: If some s_k = 0.
        NoConvergenceError: If the sweep cap is reached.
    """

    if any(s <= 0 for s in netflow.partial_sums):
        raise ZeroMarginalError(details={'partial_sums': list(netflow.partial_sums)})
    tol = tol or settings.scaling.TOL
    support = _Support(netflow)
    scaler = _LogProductScaler(netflow, support, tol)
    u, v, sweeps, residual, fallback, trace = scaler.run(settings.scaling.MAX_SWEEPS, settings.scaling.STALL_WINDOW)
    values = scaler.cell_values(u, v)
    flow = repair_upper(netflow, _upper_from_cells(support, values), settings.scaling.DENOMINATOR)
    exact_values = [value for *_, value in flow.cells()]
    if any(value <= 0 for value in exact_values):
        raise ZeroMarginalError('Repaired log-product maximiser touches the boundary', details={'n': netflow.n})
    return ScalingResult(
        flow=flow,
        point=ScalingPoint(tuple(u.tolist()), tuple(v.tolist())),
        objective=math.fsum(math.log(value) for value in exact_values),
        dual=scaler.dual(u, v),
        sweeps=sweeps,
        residual=residual,
        fallback=fallback,
        trace=tuple(trace),
    )


def maximize_log_product(netflow: NetflowVector, tol: float | None = None) -> tuple[FlowMatrix, float]:
    """
    (A, sum log a_ij) at the repaired maximiser.
    """

    result = solve_log_product(netflow, tol)
    return result.flow, result.objective


def volume_duality_check(netflow: NetflowVector, tol: float | None = None) -> float:
    """
    |log cpc(prod -1/log(x_i y_j)) - (C(n,2) + 2n - 1) - sup sum log a_ij|.

    The dual value at the optimum is the log-capacity; the support has C(n,2) + 2n - 1 cells.
    """

    result = solve_log_product(netflow, tol)
    cells = math.comb(netflow.n, 2) + 2 * netflow.n - 1
    return abs(result.dual - cells - result.objective)
