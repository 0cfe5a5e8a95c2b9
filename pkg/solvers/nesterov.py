"""
Single-objective Nesterov scheme used as a reference trajectory.

    y^k = x^k + (k - 1)/(k + alpha - 1) (x^k - x^{k-1}),   x^{k+1} = y^k - s grad f(y^k)

With alpha = 3 the coefficient is (k - 1)/(k + 2) and, for m = 1, the
iterates coincide bit for bit with the accelerated multiobjective method.
"""
import numpy as np

from core.models import SolverConfig
from problems.base import MOProblem, evaluate_all
from utils.errors import InvalidProblemError
from .backtracking import backtracking_search
from .base import BaseSolver, IterateState, RunRecord


def nesterov_coefficient(k: int, alpha: float) -> float:
    """(k - 1)/(k + alpha - 1)"""
    return (k - 1) / (k + alpha - 1)


def nesterov_step(p: MOProblem, st: IterateState, cfg: SolverConfig) -> IterateState:
    if p.m != 1:
        raise InvalidProblemError(f"NesterovRef needs a single objective, got m = {p.m}")
    y = st.x_curr + nesterov_coefficient(st.k, cfg.nesterov_alpha) * st.momentum
    values, gradients = evaluate_all(p, y)
    direction = np.array(gradients[0], dtype=float)

    step_size = cfg.step_size
    if cfg.backtracking is not None:
        step_size = backtracking_search(p, y, direction, st.step_size, cfg.backtracking.sigma, values, gradients)
    return st.advance(y - step_size * direction, step_size, 0)


class NesterovReference(BaseSolver):
    """Classical accelerated gradient method for m = 1."""

    energy_kind = "accelerated_s"

    def step(self, p: MOProblem, st: IterateState) -> IterateState:
        return nesterov_step(p, st, self.config)

    def energy_parameter(self) -> float:
        return self.config.step_size


def nesterov_reference(f: MOProblem, x0: np.ndarray, s: float, alpha: float = 3.0,
                       k_max: int = 1000) -> RunRecord:
    """
    Run the reference scheme for exactly ``k_max`` iterations.

    Args:
        f: Single-objective problem (see problems.single.wrap_single)
        x0: Starting point
        s: Step size
        alpha: Momentum parameter, at least 3
        k_max: Iteration budget

    Returns:
        RunRecord of the reference trajectory
    """
    from .runner import run

    cfg = SolverConfig(method="NesterovRef", step_size=s, nesterov_alpha=alpha, max_iters=k_max, tol=0.0)
    return run(f, x0, cfg)
