"""
Multiobjective steepest descent with constant step or backtracking.

    x^{k+1} = x^k - s d^k,   d^k = argmin { ||d|| : d in conv{grad f_i(x^k)} }
"""
from core.models import SolverConfig
from problems.base import MOProblem, evaluate_all
from subproblems.hull import min_norm_element
from .backtracking import backtracking_search
from .base import BaseSolver, IterateState


def sd_step(p: MOProblem, st: IterateState, cfg: SolverConfig) -> IterateState:
    """One steepest-descent step from x^k."""
    values, gradients = evaluate_all(p, st.x_curr)
    weights, direction = min_norm_element(gradients)

    step_size = cfg.step_size
    if cfg.backtracking is not None:
        step_size = backtracking_search(p, st.x_curr, direction, st.step_size, cfg.backtracking.sigma,
                                        values, gradients)
    return st.advance(st.x_curr - step_size * direction, step_size, weights)


class SteepestDescent(BaseSolver):
    """Steepest descent along the negative min-norm element of the gradient hull."""

    def step(self, p: MOProblem, st: IterateState) -> IterateState:
        return sd_step(p, st, self.config)
