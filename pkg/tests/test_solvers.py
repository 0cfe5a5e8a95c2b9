"""
Tests for the step rules, the run loop and the solver registry
"""
import os
import sys
import time

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from core.models import BacktrackingConfig, SolverConfig, WittingSpec
from problems import FunctionObjective, MOProblem, make_constant, make_scaled_quadratic, make_witting
from solvers import (
    IterateState,
    SolverFactory,
    accg_noq_step,
    accg_step,
    get_solver,
    inertial_step,
    run,
    sd_step,
    switching_step,
)
from solvers.accelerated import AcceleratedGradient, momentum_coefficient
from solvers.inertial import InertialMethod, gradient_coefficient
from subproblems.hull import SimplexWeights
from utils.errors import EvaluationError


def _linear(g):
    g = np.asarray(g, dtype=float)
    return FunctionObjective(lambda x: float(g @ x), lambda x: g.copy())


def _state(x_prev, x_curr, k, step_size):
    return IterateState(np.array(x_prev, dtype=float), np.array(x_curr, dtype=float), k, step_size)


class TestSteepestDescent:
    """x+ = x - s * min-norm element."""

    def test_single_objective_is_gradient_descent(self):
        p = make_scaled_quadratic(1.0, [0.0])
        cfg = SolverConfig(method="SD", step_size=0.1)
        nxt = sd_step(p, IterateState.initial(np.array([1.0]), 0.1), cfg)
        assert nxt.x_curr[0] == pytest.approx(0.9)
        assert nxt.k == 2
        np.testing.assert_array_equal(nxt.x_prev, [1.0])

    def test_pareto_critical_point_is_fixed(self):
        p = make_witting(WittingSpec())
        cfg = SolverConfig(method="SD", step_size=0.5)
        nxt = sd_step(p, IterateState.initial(np.zeros(2), 0.5), cfg)
        np.testing.assert_allclose(nxt.x_curr, [0.0, 0.0], atol=1e-15)

    def test_two_linear_objectives(self):
        p = MOProblem(n=2, objectives=(_linear([2.0, 0.0]), _linear([0.0, 1.0])))
        cfg = SolverConfig(method="SD", step_size=1.0)
        nxt = sd_step(p, IterateState.initial(np.zeros(2), 1.0), cfg)
        np.testing.assert_allclose(nxt.x_curr, [-0.4, -0.8])
        assert isinstance(nxt.last_choice, SimplexWeights)


class TestInertial:
    """Inertial step with hull-matched momentum."""

    def test_first_step_single_objective(self):
        p = make_scaled_quadratic(1.0, [0.0])
        cfg = SolverConfig(method="Inertial", alpha=1.0, h=0.1)
        solver = InertialMethod(cfg)
        nxt = solver.step(p, solver.initial_state(np.array([1.0])))
        assert nxt.x_curr[0] == pytest.approx(1 - 0.01 / 1.1)
        assert nxt.step_size == pytest.approx(gradient_coefficient(cfg))

    def test_constant_objectives_damp_momentum(self):
        p = make_constant(1)
        cfg = SolverConfig(method="Inertial", alpha=1.0, h=0.1)
        nxt = inertial_step(p, _state([0.0], [1.0], 4, gradient_coefficient(cfg)), cfg)
        assert nxt.x_curr[0] == pytest.approx(1 + 1 / 1.1)

    def test_requires_alpha_and_h(self):
        with pytest.raises(ValueError):
            SolverConfig(method="Inertial", alpha=1.0)


class TestAccelerated:
    """AccG, AccGNoQ and the switching variant."""

    def test_momentum_coefficient(self):
        assert momentum_coefficient(1) == 0.0
        assert momentum_coefficient(2) == 0.25

    def test_two_steps_single_objective(self):
        p = make_scaled_quadratic(1.0, [0.0])
        cfg = SolverConfig(method="AccG", step_size=0.1)
        solver = AcceleratedGradient(cfg)
        second = solver.step(p, solver.initial_state(np.array([1.0])))
        assert second.x_curr[0] == pytest.approx(0.9)
        third = solver.step(p, second)
        # y = 0.9 + 0.25 * (0.9 - 1) = 0.875
        assert third.x_curr[0] == pytest.approx(0.7875)

    def test_constant_objectives_follow_momentum(self):
        p = make_constant(1, m=2)
        cfg = SolverConfig(method="AccG", step_size=0.1)
        nxt = accg_step(p, _state([0.0], [1.0], 3, 0.1), cfg)
        assert nxt.x_curr[0] == pytest.approx(1.4)

    def test_noq_ties_at_first_iteration(self):
        p = MOProblem(n=2, objectives=(_linear([1.0, 0.0]), _linear([0.0, 1.0])))
        cfg = SolverConfig(method="AccGNoQ", step_size=0.1)
        nxt = accg_noq_step(p, IterateState.initial(np.zeros(2), 0.1), cfg)
        assert nxt.last_choice == 0
        np.testing.assert_allclose(nxt.x_curr, [-0.1, 0.0])

    def test_noq_follows_momentum(self):
        p = MOProblem(n=2, objectives=(_linear([1.0, 0.0]), _linear([0.0, 1.0])))
        cfg = SolverConfig(method="AccGNoQ", step_size=0.1)
        nxt = accg_noq_step(p, _state([0.0, 0.0], [0.0, 1.0], 2, 0.1), cfg)
        assert nxt.last_choice == 1

    def test_noq_matches_accg_for_one_objective(self):
        p = make_scaled_quadratic(2.0, [1.0, -1.0])
        accg = run(p, [3.0, 2.0], SolverConfig(method="AccG", step_size=0.1, max_iters=50, tol=0.0))
        noq = run(p, [3.0, 2.0], SolverConfig(method="AccGNoQ", step_size=0.1, max_iters=50, tol=0.0))
        for a, b in zip(accg.iterates, noq.iterates):
            np.testing.assert_array_equal(a, b)

    def test_switching_uses_linear_step_first(self):
        p = MOProblem(n=2, objectives=(_linear([1.0, 0.0]), _linear([0.0, 1.0])))
        cfg = SolverConfig(method="AccGSwitch", step_size=0.1, switch_at=3)
        state = IterateState.initial(np.zeros(2), 0.1)
        state = switching_step(p, state, cfg)
        assert isinstance(state.last_choice, int)
        state = switching_step(p, state, cfg)
        assert isinstance(state.last_choice, int)
        state = switching_step(p, state, cfg)
        assert isinstance(state.last_choice, SimplexWeights)

    def test_switching_requires_switch_at(self):
        with pytest.raises(ValueError):
            SolverConfig(method="AccGSwitch")


class TestRunLoop:
    """Termination, recording and thinning."""

    def test_constant_objectives_stop_at_second_iterate(self):
        p = make_constant(2, m=2)
        for method in ("SD", "AccG", "AccGNoQ"):
            record = run(p, [1.0, -1.0], SolverConfig(method=method, tol=1e-4))
            assert record.termination.reason == "tol_met"
            assert record.k_final == 2
            assert record.iterations == 1

    def test_max_iters(self):
        p = make_scaled_quadratic(1.0, [0.0, 0.0])
        record = run(p, [1.0, 1.0], SolverConfig(method="SD", step_size=0.1, max_iters=5, tol=0.0))
        assert record.termination.reason == "max_iters"
        assert record.k_final == 5
        assert record.values.shape == (5, 1)
        assert record.kkt_residuals.shape == (5,)
        assert record.iterate_indices == [1, 2, 3, 4, 5]
        np.testing.assert_allclose(record.final_iterate, [0.9 ** 4, 0.9 ** 4])

    def test_row_zero_is_the_start(self):
        p = make_scaled_quadratic(1.0, [0.0])
        record = run(p, [2.0], SolverConfig(method="AccG", step_size=0.1, max_iters=3, tol=0.0))
        assert record.values[0, 0] == pytest.approx(2.0)
        assert record.diff_norms[0] == 0.0
        assert record.kkt_residuals[0] == pytest.approx(2.0)
        assert record.step_sizes[0] == 0.1

    def test_evaluation_failure_ends_run(self):
        guarded = FunctionObjective(lambda x: 0.5 * x[0] ** 2 if x[0] >= 0 else float("inf"),
                                    lambda x: np.array([x[0]]))
        p = MOProblem(n=1, objectives=(guarded,))
        record = run(p, [1.0], SolverConfig(method="SD", step_size=1.5, max_iters=10))
        assert record.termination.reason == "eval_failure"
        assert record.k_final == 1
        assert "non-finite" in record.termination.message
        np.testing.assert_array_equal(record.final_iterate, [1.0])

    def test_failure_at_start_raises(self):
        broken = FunctionObjective(lambda x: float("nan"), lambda x: np.zeros(1))
        p = MOProblem(n=1, objectives=(broken,))
        with pytest.raises(EvaluationError):
            run(p, [0.0], SolverConfig(method="SD"))

    def test_large_problems_are_thinned(self):
        p = make_scaled_quadratic(1.0, np.zeros(100))
        record = run(p, np.ones(100), SolverConfig(method="SD", step_size=0.1, max_iters=25, tol=0.0))
        assert record.iterate_indices == [1, 2, 10, 20, 25]
        assert not record.dense
        assert len(record.diff_norms) == 25
        with pytest.raises(KeyError):
            record.iterate(5)
        np.testing.assert_allclose(record.iterate(25), np.full(100, 0.9 ** 24))

    def test_kkt_trace_can_be_skipped(self):
        p = make_scaled_quadratic(1.0, [0.0])
        record = run(p, [1.0], SolverConfig(method="SD", step_size=0.1, max_iters=4, tol=0.0), record_kkt=False)
        assert np.all(np.isnan(record.kkt_residuals))

    def test_kkt_trace_is_not_timed(self, monkeypatch):
        from solvers import runner

        def slow_residual(p, x):
            time.sleep(0.02)
            return 0.0

        monkeypatch.setattr(runner, "_kkt_residual", slow_residual)
        p = make_scaled_quadratic(1.0, [0.0])
        record = run(p, [1.0], SolverConfig(method="SD", step_size=0.1, max_iters=10, tol=0.0))
        assert np.all(record.kkt_residuals == 0.0)
        # ten residuals take at least 0.2 s
        assert record.wall_time < 0.1

    def test_runs_are_deterministic(self):
        p = make_witting(WittingSpec())
        cfg = SolverConfig(method="AccGNoQ", step_size=5e-3, max_iters=200)
        first = run(p, [1.5, -0.3], cfg)
        second = run(p, [1.5, -0.3], cfg)
        np.testing.assert_array_equal(first.values, second.values)
        assert first.termination == second.termination

    def test_second_differences(self):
        p = make_constant(1)
        record = run(p, [0.0], SolverConfig(method="SD", max_iters=3, tol=0.0))
        np.testing.assert_array_equal(record.second_diff_norms, [0.0, 0.0, 0.0])


class TestSolverFactory:
    """Method registry."""

    def test_all_methods_registered(self):
        assert set(SolverFactory.get_available_solvers()) == {
            "SD", "Inertial", "AccG", "AccGNoQ", "AccGSwitch", "NesterovRef"
        }

    def test_energy_kinds(self):
        assert get_solver(SolverConfig(method="SD")).energy_kind is None
        assert get_solver(SolverConfig(method="AccG")).energy_kind == "accelerated_s"
        assert get_solver(SolverConfig(method="AccGNoQ")).energy_kind == "accelerated_s"
        inertial = get_solver(SolverConfig(method="Inertial", alpha=2.0, h=0.3))
        assert inertial.energy_kind == "inertial_h2"
        assert inertial.energy_parameter() == 0.3

    def test_backtracking_initial_step(self):
        cfg = SolverConfig(method="AccG", step_size=0.1, backtracking=BacktrackingConfig(s0=2.0))
        assert get_solver(cfg).initial_state(np.zeros(1)).step_size == 2.0
