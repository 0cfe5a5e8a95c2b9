"""
Inertial multiobjective gradient method with constant friction.

    x^{k+1} = x^k + (x^k - x^{k-1}) / (1 + alpha h)
              - h^2 / (1 + alpha h) * sum_i theta_i grad f_i(x^k)

where theta solves min || h^2 sum_i theta_i grad f_i(x^k) - (x^k - x^{k-1}) ||^2
over the unit simplex. With backtracking, the accepted step replaces the
gradient coefficient h^2 / (1 + alpha h).
"""
from core.models import SolverConfig
from problems.base import MOProblem, evaluate_all
from subproblems.hull import HullProblem, solve_hull_least_squares
from .backtracking import backtracking_search
from .base import BaseSolver, IterateState


def gradient_coefficient(cfg: SolverConfig) -> float:
    """h^2 / (1 + alpha h)"""
    return cfg.h * cfg.h / (1.0 + cfg.alpha * cfg.h)


def inertial_step(p: MOProblem, st: IterateState, cfg: SolverConfig) -> IterateState:
    """One inertial step from (x^{k-1}, x^k)."""
    values, gradients = evaluate_all(p, st.x_curr)
    momentum = st.momentum
    solution = solve_hull_least_squares(HullProblem(cfg.h * cfg.h * gradients, momentum))
    direction = solution.weights.combine(gradients)

    coefficient = gradient_coefficient(cfg)
    if cfg.backtracking is not None:
        coefficient = backtracking_search(p, st.x_curr, direction, st.step_size, cfg.backtracking.sigma,
                                          values, gradients)
    x_next = st.x_curr + momentum / (1.0 + cfg.alpha * cfg.h) - coefficient * direction
    return st.advance(x_next, coefficient, solution.weights)


class InertialMethod(BaseSolver):
    """Heavy-ball type method whose momentum is matched by the gradient hull."""

    energy_kind = "inertial_h2"

    def initial_state(self, x0):
        state = super().initial_state(x0)
        if self.config.backtracking is None:
            return IterateState.initial(x0, gradient_coefficient(self.config))
        return state

    def step(self, p: MOProblem, st: IterateState) -> IterateState:
        return inertial_step(p, st, self.config)

    def energy_parameter(self) -> float:
        return self.config.h
