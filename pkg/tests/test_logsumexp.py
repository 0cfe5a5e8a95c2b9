"""
Runs on the seeded log-sum-exp problem
"""
import os
import sys
from functools import lru_cache

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from core.models import ExperimentConfig
from core.services import resolve_starts
from problems import build_problem
from solvers import run
from utils.config import create_default_config


@lru_cache(maxsize=None)
def _template_runs(label):
    config = ExperimentConfig.model_validate(create_default_config("logsumexp"))
    problem = build_problem(config.problem)
    solver_cfg = next(s for s in config.solvers if s.label == label)
    starts = resolve_starts(config.starts, problem.n)
    return [run(problem, x0, solver_cfg, record_kkt=False) for x0 in starts]


def _total_iterations(label):
    return sum(r.iterations for r in _template_runs(label))


def _time_per_iteration(label):
    records = _template_runs(label)
    return sum(r.wall_time for r in records) / max(1, sum(r.iterations for r in records))


class TestLogSumExpTemplate:

    def test_reference_setup(self):
        config = ExperimentConfig.model_validate(create_default_config("logsumexp"))
        assert (config.problem.n, config.problem.m, config.problem.p) == (20, 3, 50)
        assert config.starts.count == 50
        assert (config.starts.low, config.starts.high) == (-15.0, 15.0)
        assert all(s.step_size == 5e-2 and s.tol == 1e-4 for s in config.solvers)

    def test_step_size_exceeds_inverse_lipschitz_hint(self):
        # the methods run past 1/L here, so the subproblem-free step can zig-zag
        config = ExperimentConfig.model_validate(create_default_config("logsumexp"))
        problem = build_problem(config.problem)
        assert config.solvers[0].step_size * problem.lipschitz_hint > 1.0


@pytest.mark.slow
class TestLogSumExpTemplateExperiment:
    """50 starts in [-15, 15]^20 with s = 5e-2, k_max = 1000 and tol = 1e-4."""

    def test_accg_iteration_total(self):
        assert _total_iterations("AccG") < 0.5 * _total_iterations("SD")

    def test_accg_needs_fewer_iterations_than_noq(self):
        # AccGNoQ alternates between single gradients near the front with
        # |f(x+) - f(x)| around 2e-3, so its total is not compared with SD
        assert _total_iterations("AccG") < _total_iterations("AccGNoQ")

    def test_noq_iterations_are_cheaper(self):
        assert _time_per_iteration("AccGNoQ") < _time_per_iteration("AccG")
