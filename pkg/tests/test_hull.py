"""
Tests for the simplex least-squares solver and its brute-force oracle
"""
import os
import sys

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from problems.sampling import make_generator
from subproblems import (
    HullProblem,
    SimplexWeights,
    brute_force_simplex_oracle,
    kkt_margin,
    linear_maximizer,
    min_norm_element,
    project_onto_simplex,
    random_hull_problems,
    solve_hull_least_squares,
)
from subproblems.hull import _solve_projected_gradient
from subproblems.oracle import simplex_grid
from utils.errors import EvaluationError, InvalidProblemError


def _scale(hp):
    return max(1.0, float(np.max(np.abs(hp.columns))) ** 2, float(np.max(np.abs(hp.target))) ** 2)


class TestSimplexWeights:
    """Validation of simplex points."""

    def test_rejects_negative_weights(self):
        with pytest.raises(InvalidProblemError):
            SimplexWeights(np.array([1.5, -0.5]))

    def test_rejects_wrong_sum(self):
        with pytest.raises(InvalidProblemError):
            SimplexWeights(np.array([0.5, 0.4]))

    def test_support(self):
        assert SimplexWeights(np.array([0.0, 0.25, 0.75])).support == (1, 2)


class TestHullProblem:
    """Input validation."""

    def test_shape_mismatch(self):
        with pytest.raises(InvalidProblemError):
            HullProblem(np.ones((2, 3)), np.zeros(2))

    def test_non_finite_entries(self):
        with pytest.raises(EvaluationError):
            HullProblem(np.array([[1.0, np.inf]]), np.zeros(2))

    def test_nonpositive_tolerance(self):
        hp = HullProblem(np.eye(2), np.zeros(2))
        with pytest.raises(InvalidProblemError):
            solve_hull_least_squares(hp, tol=0.0)


class TestSolveHullLeastSquares:
    """Exact solutions on small instances."""

    def test_single_column(self):
        hp = HullProblem(np.array([[3.0, -1.0]]), np.array([1.0, 1.0]))
        solution = solve_hull_least_squares(hp)
        np.testing.assert_array_equal(solution.weights.theta, [1.0])
        np.testing.assert_allclose(solution.residual, [2.0, -2.0])
        assert solution.objective == pytest.approx(8.0)

    def test_target_is_a_vertex(self):
        hp = HullProblem(np.eye(2), np.array([1.0, 0.0]))
        solution = solve_hull_least_squares(hp)
        np.testing.assert_allclose(solution.weights.theta, [1.0, 0.0])
        assert solution.objective == pytest.approx(0.0, abs=1e-15)

    def test_symmetric_midpoint(self):
        hp = HullProblem(np.eye(2), np.zeros(2))
        solution = solve_hull_least_squares(hp)
        np.testing.assert_allclose(solution.weights.theta, [0.5, 0.5])
        assert solution.objective == pytest.approx(0.5)

    def test_unequal_columns(self):
        hp = HullProblem(np.array([[2.0, 0.0], [0.0, 1.0]]), np.zeros(2))
        solution = solve_hull_least_squares(hp)
        np.testing.assert_allclose(solution.weights.theta, [0.2, 0.8])
        np.testing.assert_allclose(solution.point, [0.4, 0.8])
        assert solution.objective == pytest.approx(0.8)

    def test_three_unit_vectors(self):
        hp = HullProblem(np.eye(3), np.zeros(3))
        solution = solve_hull_least_squares(hp)
        np.testing.assert_allclose(solution.weights.theta, np.full(3, 1 / 3))
        assert solution.objective == pytest.approx(1 / 3)

    def test_equal_columns_give_uniform_weights(self):
        columns = np.tile([1.0, 2.0], (4, 1))
        solution = solve_hull_least_squares(HullProblem(columns, np.zeros(2)))
        np.testing.assert_allclose(solution.weights.theta, np.full(4, 0.25))
        assert solution.objective == pytest.approx(5.0)

    def test_interior_face_of_three(self):
        # the target projects onto the edge between the first two columns
        columns = np.array([[1.0, 0.0], [-1.0, 0.0], [0.0, 5.0]])
        solution = solve_hull_least_squares(HullProblem(columns, np.array([0.5, -1.0])))
        np.testing.assert_allclose(solution.weights.theta, [0.75, 0.25, 0.0], atol=1e-12)
        assert solution.weights.support == (0, 1)

    def test_certificate_and_complementarity(self):
        for hp in random_hull_problems(seed=1, count=60, ms=(2, 3, 4, 6), ns=(2, 5, 20)):
            solution = solve_hull_least_squares(hp)
            scale = _scale(hp)
            assert kkt_margin(hp.columns, hp.target, solution.weights.theta) >= -1e-9 * scale
            # <r, c_i> equals <r, sum_j theta_j c_j> on the support
            r = solution.residual
            inner = hp.columns @ r
            level = r @ solution.point
            for i in solution.weights.support:
                assert inner[i] == pytest.approx(level, abs=1e-8 * scale)

    def test_projected_gradient_matches_face_enumeration(self):
        for hp in random_hull_problems(seed=2, count=10, ms=(5, 6), ns=(20,)):
            exact = solve_hull_least_squares(hp)
            theta = _solve_projected_gradient(hp, 1e-10)
            assert hp.objective(theta) == pytest.approx(exact.objective, abs=1e-7)

    def test_large_m_falls_back_to_projected_gradient(self):
        rng = make_generator(4, 2)
        hp = HullProblem(rng.standard_normal((10, 20)), rng.standard_normal(20))
        solution = solve_hull_least_squares(hp)
        assert solution.weights.theta.sum() == pytest.approx(1.0)
        assert np.all(solution.weights.theta >= 0)
        assert kkt_margin(hp.columns, hp.target, solution.weights.theta) >= -1e-6 * _scale(hp)


class TestAgainstOracle:
    """Solver objective never exceeds the brute-force reference."""

    def test_small_batch(self):
        for hp in random_hull_problems(seed=0, count=12):
            solution = solve_hull_least_squares(hp)
            reference = brute_force_simplex_oracle(hp, grid=1e-2)
            assert solution.objective - reference <= 1e-8
            assert abs(solution.objective - reference) <= 1e-8

    @pytest.mark.slow
    def test_five_hundred_instances(self):
        for hp in random_hull_problems(seed=0, count=500):
            solution = solve_hull_least_squares(hp)
            reference = brute_force_simplex_oracle(hp)
            assert abs(solution.objective - reference) <= 1e-8


def _check_linear_minimizer_inequality(seed, count, samples=20):
    rng = make_generator(seed, 5)
    for hp in random_hull_problems(seed=seed, count=count, ms=(2, 3, 4)):
        eta = rng.standard_normal(hp.n)
        j, _ = linear_maximizer(hp.columns, -eta)
        xi = eta - hp.columns[j]
        for _ in range(samples):
            x = rng.dirichlet(np.ones(hp.m)) @ hp.columns
            assert (x + xi - eta) @ eta >= -1e-10 * _scale(hp)


def _check_shifted_hull_projection(seed, count):
    rng = make_generator(seed, 5)
    for hp in random_hull_problems(seed=seed, count=count, ms=(2, 3, 4)):
        nu = 2.0 * rng.standard_normal(hp.n)
        a = rng.uniform(0.1, 5.0)
        projection = solve_hull_least_squares(HullProblem(hp.columns, nu)).point
        xi = -(projection / (1 + a) + a * nu / (1 + a))
        _, direction = min_norm_element(hp.columns + xi)
        np.testing.assert_allclose(direction, -a * (xi + nu), atol=1e-8 * _scale(hp))


class TestProjectionIdentities:
    """Closed forms for projections onto convex hulls."""

    def test_linear_minimizer_variational_inequality(self):
        _check_linear_minimizer_inequality(seed=11, count=50)

    def test_shifted_hull_projection(self):
        _check_shifted_hull_projection(seed=12, count=40)

    @pytest.mark.slow
    def test_linear_minimizer_variational_inequality_1000_instances(self):
        _check_linear_minimizer_inequality(seed=11, count=1000)

    @pytest.mark.slow
    def test_shifted_hull_projection_1000_instances(self):
        _check_shifted_hull_projection(seed=12, count=1000)

    def test_dual_complementarity(self):
        # x+ - x = t - sum_i theta_i c_i in the accelerated step
        for hp in random_hull_problems(seed=13, count=60, ms=(2, 3, 4), ns=(2, 5)):
            solution = solve_hull_least_squares(hp)
            move = -solution.residual
            assert solution.point @ move == pytest.approx(np.max(hp.columns @ move), abs=1e-8 * _scale(hp))


class TestOracle:
    """The brute-force reference itself."""

    def test_vertex_target(self):
        hp = HullProblem(np.eye(2), np.array([1.0, 0.0]))
        assert brute_force_simplex_oracle(hp) == pytest.approx(0.0, abs=1e-12)

    def test_symmetric_case(self):
        hp = HullProblem(np.eye(2), np.zeros(2))
        assert brute_force_simplex_oracle(hp) == pytest.approx(0.5, abs=1e-12)

    def test_refuses_large_m(self):
        hp = HullProblem(np.eye(5), np.zeros(5))
        with pytest.raises(InvalidProblemError):
            brute_force_simplex_oracle(hp)

    def test_refuses_bad_resolution(self):
        hp = HullProblem(np.eye(2), np.zeros(2))
        with pytest.raises(InvalidProblemError):
            brute_force_simplex_oracle(hp, grid=0.0)
        with pytest.raises(InvalidProblemError):
            brute_force_simplex_oracle(hp, grid=2.0)

    def test_refuses_oversized_grid(self):
        hp = HullProblem(np.eye(4), np.zeros(4))
        with pytest.raises(InvalidProblemError):
            brute_force_simplex_oracle(hp, grid=1e-4)

    def test_simplex_grid(self):
        grid = simplex_grid(3, 4)
        assert grid.shape == (15, 3)
        np.testing.assert_allclose(grid.sum(axis=1), 1.0)
        assert not grid.flags.writeable

    def test_random_instances_cycle_shapes(self):
        shapes = [(hp.m, hp.n) for hp in random_hull_problems(seed=0, count=6)]
        assert shapes == [(2, 2), (2, 5), (2, 20), (3, 2), (3, 5), (3, 20)]

    def test_random_instances_are_seeded(self):
        first = list(random_hull_problems(seed=9, count=3))
        second = list(random_hull_problems(seed=9, count=3))
        for a, b in zip(first, second):
            np.testing.assert_array_equal(a.columns, b.columns)
            np.testing.assert_array_equal(a.target, b.target)


class TestMinNormElement:
    """Steepest-descent direction."""

    def test_witting_origin(self):
        weights, direction = min_norm_element(np.array([[0.5, -0.5], [-0.5, 0.5]]))
        np.testing.assert_allclose(weights.theta, [0.5, 0.5])
        np.testing.assert_allclose(direction, [0.0, 0.0], atol=1e-15)

    def test_single_gradient(self):
        weights, direction = min_norm_element(np.array([[3.0, 4.0]]))
        np.testing.assert_array_equal(direction, [3.0, 4.0])

    def test_unequal_gradients(self):
        _, direction = min_norm_element(np.array([[2.0, 0.0], [0.0, 1.0]]))
        np.testing.assert_allclose(direction, [0.4, 0.8])


class TestLinearMaximizer:
    """Vertex solution of the linear subproblem."""

    def test_unit_vectors(self):
        assert linear_maximizer(np.eye(2), np.array([1.0, 0.0])) == (0, 1.0)

    def test_ties_take_lowest_index(self):
        index, value = linear_maximizer(np.tile([1.0, -2.0], (3, 1)), np.array([1.0, 1.0]))
        assert (index, value) == (0, -1.0)

    def test_zero_vector_ties(self):
        index, _ = linear_maximizer(np.array([[1.0, 0.0], [0.0, 5.0]]), np.zeros(2))
        assert index == 0

    def test_matches_enumeration(self):
        rng = make_generator(8, 4)
        for _ in range(20):
            gradients = rng.standard_normal((3, 4))
            v = rng.standard_normal(4)
            index, value = linear_maximizer(gradients, v)
            scores = [float(g @ v) for g in gradients]
            assert value == pytest.approx(max(scores), abs=1e-12)
            assert index == scores.index(max(scores))

    def test_non_finite_vector(self):
        with pytest.raises(EvaluationError):
            linear_maximizer(np.eye(2), np.array([np.nan, 0.0]))


class TestProjectOntoSimplex:
    """Sort-and-threshold projection."""

    def test_simplex_point_is_fixed(self):
        v = np.array([0.2, 0.3, 0.5])
        np.testing.assert_allclose(project_onto_simplex(v), v)

    def test_known_projection(self):
        np.testing.assert_allclose(project_onto_simplex(np.array([2.0, 0.0])), [1.0, 0.0])
        np.testing.assert_allclose(project_onto_simplex(np.array([1.0, 1.0])), [0.5, 0.5])

    @settings(max_examples=200, deadline=None)
    @given(st.lists(st.floats(min_value=-10, max_value=10, allow_nan=False), min_size=1, max_size=8))
    def test_projection_is_optimal(self, values):
        v = np.array(values)
        p = project_onto_simplex(v)
        assert np.all(p >= 0)
        assert p.sum() == pytest.approx(1.0, abs=1e-9)
        # variational inequality against every vertex
        for i in range(v.shape[0]):
            vertex = np.zeros(v.shape[0])
            vertex[i] = 1.0
            assert (v - p) @ (vertex - p) <= 1e-9
