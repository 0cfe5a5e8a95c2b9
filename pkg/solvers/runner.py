"""
Generic run loop shared by every method.

Starts from x^0 = x^1 = x0 with k = 1 and stops after the step that
produces x^{k+1} when

    max_i |f_i(x^{k+1}) - f_i(x^k)| < tol

or when k reaches ``max_iters``. The stopping test reuses the values
evaluated for the trace. The reported wall time leaves out the per-iterate
KKT residual, which is a diagnostic and not part of any method.
"""
import time
from typing import List, Optional, Sequence

import numpy as np

from core.constants import DENSE_ITERATE_MAX_N, ITERATE_THINNING_STRIDE, LOG_EVERY
from core.logging import get_logger
from core.models import SolverConfig
from problems.base import MOProblem, as_point, evaluate_all, evaluate_values
from subproblems.hull import min_norm_element
from utils.errors import EvaluationError, StepSizeUnderflowError
from .base import BaseSolver, RunRecord, Termination

logger = get_logger(__name__)


def _kkt_residual(p: MOProblem, x: np.ndarray) -> float:
    _, gradients = evaluate_all(p, x)
    return float(np.linalg.norm(min_norm_element(gradients)[1]))


def _keep_iterate(k: int, n: int) -> bool:
    if n <= DENSE_ITERATE_MAX_N:
        return True
    return k <= 2 or k % ITERATE_THINNING_STRIDE == 0


def run(p: MOProblem, x0: Sequence[float], cfg: SolverConfig, record_kkt: bool = True,
        solver: Optional[BaseSolver] = None) -> RunRecord:
    """
    Run one method from one starting point.

    Args:
        p: Problem
        x0: Starting point
        cfg: Solver configuration
        record_kkt: Compute the KKT residual at every iterate (one extra
            gradient evaluation and min-norm solve per iteration, not
            counted in ``wall_time``)
        solver: Pre-built solver; created from ``cfg`` when omitted

    Returns:
        RunRecord; evaluation failures end the run with reason eval_failure
    """
    if solver is None:
        from .factory import SolverFactory
        solver = SolverFactory.create_solver(cfg)

    x0 = as_point(x0, p.n)
    state = solver.initial_state(x0)
    logger.debug(f"{cfg.label} on {p.name}: start, k_max={cfg.max_iters}, tol={cfg.tol}")

    values: List[np.ndarray] = []
    step_sizes: List[float] = []
    kkt: List[float] = []
    diff_norms: List[float] = []
    second_diff_norms: List[float] = []
    iterates: List[np.ndarray] = []
    iterate_indices: List[int] = []
    termination: Optional[Termination] = None
    diagnostic_time = 0.0

    def record(k: int, x: np.ndarray, f: np.ndarray, step_size: float,
               diff: float, second_diff: float) -> None:
        nonlocal diagnostic_time
        residual = float("nan")
        if record_kkt:
            tick = time.perf_counter()
            residual = _kkt_residual(p, x)
            diagnostic_time += time.perf_counter() - tick
        values.append(f)
        step_sizes.append(step_size)
        kkt.append(residual)
        diff_norms.append(diff)
        second_diff_norms.append(second_diff)
        if _keep_iterate(k, p.n):
            iterates.append(x.copy())
            iterate_indices.append(k)

    started = time.perf_counter()
    try:
        record(1, state.x_curr, evaluate_values(p, state.x_curr), state.step_size, 0.0, 0.0)
    except EvaluationError as e:
        logger.warning(f"{cfg.label}: evaluation failed at the starting point: {e.message}")
        raise

    previous_diff = np.zeros(p.n)
    while termination is None:
        if state.k >= cfg.max_iters:
            termination = Termination("max_iters", state.k)
            break
        try:
            state = solver.step(p, state)
            f_next = evaluate_values(p, state.x_curr)
            diff = state.x_curr - state.x_prev
            record(state.k, state.x_curr, f_next, state.step_size,
                   float(np.linalg.norm(diff)), float(np.linalg.norm(diff - previous_diff)))
        except (EvaluationError, StepSizeUnderflowError) as e:
            logger.info(f"{cfg.label}: stopped at k={len(values)}: {e.message}")
            termination = Termination("eval_failure", len(values), e.message)
            break
        previous_diff = diff

        if np.max(np.abs(values[-1] - values[-2])) < cfg.tol:
            termination = Termination("tol_met", state.k)
        elif state.k % LOG_EVERY == 0:
            logger.debug(f"{cfg.label}: k={state.k} f={np.array2string(values[-1], precision=6)}")

    # the final iterate is always stored
    if iterate_indices[-1] != termination.k_final:
        iterates.append(state.x_curr.copy() if state.k == termination.k_final else state.x_prev.copy())
        iterate_indices.append(termination.k_final)

    wall_time = time.perf_counter() - started - diagnostic_time
    logger.debug(
        f"{cfg.label} on {p.name}: {termination.reason} after {termination.iterations} iterations "
        f"({wall_time:.3f}s)"
    )
    return RunRecord(
        method=cfg.method,
        label=cfg.label,
        n=p.n,
        m=p.m,
        values=np.array(values),
        step_sizes=np.array(step_sizes),
        kkt_residuals=np.array(kkt),
        diff_norms=np.array(diff_norms),
        second_diff_norms=np.array(second_diff_norms),
        iterates=iterates,
        iterate_indices=iterate_indices,
        termination=termination,
        wall_time=wall_time,
        config=cfg,
    )
