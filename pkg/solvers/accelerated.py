"""
Accelerated multiobjective gradient methods.

Both variants extrapolate

    y^k = x^k + (k - 1)/(k + 2) (x^k - x^{k-1})

and step from y^k. AccG picks the gradient combination from the quadratic
subproblem

    min_theta || s sum_i theta_i grad f_i(y^k) - (k - 1)/(k + 2) (x^k - x^{k-1}) ||^2,

AccGNoQ takes the single gradient with the largest inner product with the
momentum x^k - x^{k-1}, which needs m inner products and no subproblem.
AccGSwitch runs AccGNoQ until ``switch_at`` and AccG afterwards.
"""
import numpy as np

from core.models import SolverConfig
from problems.base import MOProblem, evaluate_all
from subproblems.hull import HullProblem, linear_maximizer, solve_hull_least_squares
from .backtracking import backtracking_search
from .base import BaseSolver, IterateState


def momentum_coefficient(k: int) -> float:
    """(k - 1)/(k + 2)"""
    return (k - 1) / (k + 2)


def _finish(p: MOProblem, st: IterateState, cfg: SolverConfig, y: np.ndarray, direction: np.ndarray,
            values: np.ndarray, gradients: np.ndarray, choice) -> IterateState:
    step_size = cfg.step_size
    if cfg.backtracking is not None:
        step_size = backtracking_search(p, y, direction, st.step_size, cfg.backtracking.sigma, values, gradients)
    return st.advance(y - step_size * direction, step_size, choice)


def accg_step(p: MOProblem, st: IterateState, cfg: SolverConfig) -> IterateState:
    """One step of the accelerated method with quadratic subproblem."""
    beta = momentum_coefficient(st.k)
    momentum = beta * st.momentum
    y = st.x_curr + momentum
    values, gradients = evaluate_all(p, y)

    # the subproblem is scaled by the step size of the previous iteration
    solution = solve_hull_least_squares(HullProblem(st.step_size * gradients, momentum))
    direction = solution.weights.combine(gradients)
    return _finish(p, st, cfg, y, direction, values, gradients, solution.weights)


def accg_noq_step(p: MOProblem, st: IterateState, cfg: SolverConfig) -> IterateState:
    """One step of the accelerated method without quadratic subproblem."""
    y = st.x_curr + momentum_coefficient(st.k) * st.momentum
    values, gradients = evaluate_all(p, y)
    index, _ = linear_maximizer(gradients, st.momentum)
    return _finish(p, st, cfg, y, gradients[index].copy(), values, gradients, index)


def switching_step(p: MOProblem, st: IterateState, cfg: SolverConfig) -> IterateState:
    """AccGNoQ before iteration ``switch_at``, AccG from then on."""
    if st.k < cfg.switch_at:
        return accg_noq_step(p, st, cfg)
    return accg_step(p, st, cfg)


class AcceleratedGradient(BaseSolver):
    """Accelerated method with quadratic subproblem (AccG)."""

    energy_kind = "accelerated_s"

    def step(self, p: MOProblem, st: IterateState) -> IterateState:
        return accg_step(p, st, self.config)

    def energy_parameter(self) -> float:
        return self.config.step_size


class AcceleratedGradientNoQP(AcceleratedGradient):
    """Accelerated method with a linear argmax in place of the subproblem (AccGNoQ)."""

    def step(self, p: MOProblem, st: IterateState) -> IterateState:
        return accg_noq_step(p, st, self.config)


class SwitchingAccelerated(AcceleratedGradient):
    """AccGNoQ for the first iterations, then AccG (AccGSwitch)."""

    def step(self, p: MOProblem, st: IterateState) -> IterateState:
        return switching_step(p, st, self.config)
