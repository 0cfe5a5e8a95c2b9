"""
Brute-force reference solver for small simplex least-squares problems.

Enumerates a barycentric grid over the unit simplex, then zooms in around
the best grid point on a shrinking lattice spanned by the tangent
directions e_i - e_m. Only meant as a test oracle for
:func:`subproblems.hull.solve_hull_least_squares`.
"""
import math
from functools import lru_cache
from itertools import product
from typing import Iterator, Sequence

import numpy as np

from core.constants import (
    ORACLE_GRID_RESOLUTION,
    ORACLE_MAX_GRID_POINTS,
    ORACLE_MAX_M,
    ORACLE_MAX_MOVES_PER_ROUND,
    ORACLE_REFINEMENT_HALF_STEPS,
    ORACLE_REFINEMENT_ROUNDS,
)
from core.logging import get_logger
from problems.sampling import ORACLE_STREAM, make_generator
from utils.errors import InvalidProblemError
from .hull import HullProblem

logger = get_logger(__name__)


def _compositions(m: int, total: int) -> np.ndarray:
    if m == 1:
        return np.array([[total]])
    if m == 2:
        first = np.arange(total + 1)
        return np.column_stack([first, total - first])
    blocks = []
    for first in range(total + 1):
        tail = _compositions(m - 1, total - first)
        blocks.append(np.hstack([np.full((tail.shape[0], 1), first), tail]))
    return np.vstack(blocks)


@lru_cache(maxsize=8)
def simplex_grid(m: int, divisions: int) -> np.ndarray:
    """
    All points of the unit simplex with coordinates in {0, 1/N, ..., 1}.

    Returns:
        Read-only array of shape (C(N + m - 1, m - 1), m)
    """
    grid = _compositions(m, divisions) / float(divisions)
    grid.setflags(write=False)
    return grid


def _objectives(thetas: np.ndarray, gram: np.ndarray, linear: np.ndarray, offset: float) -> np.ndarray:
    # ||theta C - t||^2 in Gram form, one entry per row of thetas
    return np.einsum("ij,jk,ik->i", thetas, gram, thetas) - 2.0 * thetas @ linear + offset


def _lattice(m: int) -> np.ndarray:
    half = ORACLE_REFINEMENT_HALF_STEPS
    offsets = np.array(list(product(range(-half, half + 1), repeat=m - 1)), dtype=float)
    # coefficient of e_i - e_m for i < m; the last coordinate balances the sum
    return np.hstack([offsets, -offsets.sum(axis=1, keepdims=True)])


def brute_force_simplex_oracle(hp: HullProblem, grid: float = ORACLE_GRID_RESOLUTION) -> float:
    """
    Minimum of ||sum_i theta_i c_i - t||^2 over a refined simplex grid.

    Args:
        hp: Problem with m <= ORACLE_MAX_M columns
        grid: Grid resolution; 1/grid is rounded to the nearest integer

    Returns:
        Objective value at the best point found

    Raises:
        InvalidProblemError: m exceeds ORACLE_MAX_M or the resolution is not in (0, 1]
    """
    if hp.m > ORACLE_MAX_M:
        raise InvalidProblemError(
            f"Brute-force oracle supports m <= {ORACLE_MAX_M}, got m = {hp.m}",
            ["Use solve_hull_least_squares for larger problems"],
        )
    if not 0 < grid <= 1:
        raise InvalidProblemError(f"Grid resolution must lie in (0, 1], got {grid}")

    if hp.m == 1:
        return hp.objective(np.ones(1))

    gram = hp.columns @ hp.columns.T
    linear = hp.columns @ hp.target
    offset = float(hp.target @ hp.target)

    divisions = max(1, int(round(1.0 / grid)))
    size = math.comb(divisions + hp.m - 1, hp.m - 1)
    if size > ORACLE_MAX_GRID_POINTS:
        raise InvalidProblemError(
            f"Grid with resolution {grid} has {size} points for m = {hp.m}",
            [f"Use a coarser grid (at most {ORACLE_MAX_GRID_POINTS} points)"],
        )
    points = simplex_grid(hp.m, divisions)
    values = _objectives(points, gram, linear, offset)
    best = points[int(np.argmin(values))].copy()
    best_value = float(np.min(values))

    lattice = _lattice(hp.m)
    step = 1.0 / divisions
    for _ in range(ORACLE_REFINEMENT_ROUNDS):
        for _ in range(ORACLE_MAX_MOVES_PER_ROUND):
            candidates = best + step * lattice
            candidates = candidates[np.all(candidates >= 0.0, axis=1)]
            candidate_values = _objectives(candidates, gram, linear, offset)
            index = int(np.argmin(candidate_values))
            if candidate_values[index] >= best_value:
                break
            best = candidates[index]
            best_value = float(candidate_values[index])
        step /= 5.0

    logger.debug(f"Oracle m={hp.m} n={hp.n}: grid {divisions} divisions, best {best_value:.3e}")
    return hp.objective(best)


def random_hull_problems(seed: int, count: int, ms: Sequence[int] = (2, 3),
                         ns: Sequence[int] = (2, 5, 20)) -> Iterator[HullProblem]:
    """
    Seeded random instances with standard normal columns and targets.

    Dimensions cycle through every (m, n) combination so each appears
    about equally often.
    """
    rng = make_generator(seed, ORACLE_STREAM)
    shapes = list(product(ms, ns))
    for index in range(count):
        m, n = shapes[index % len(shapes)]
        yield HullProblem(rng.standard_normal((m, n)), rng.standard_normal(n))
