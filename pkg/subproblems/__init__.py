"""Least squares over the unit simplex and its reference oracle."""
from .hull import (
    HullProblem,
    HullSolution,
    SimplexWeights,
    kkt_margin,
    linear_maximizer,
    min_norm_element,
    project_onto_simplex,
    solve_hull_least_squares,
)
from .oracle import brute_force_simplex_oracle, random_hull_problems

__all__ = [
    "HullProblem",
    "HullSolution",
    "SimplexWeights",
    "brute_force_simplex_oracle",
    "kkt_margin",
    "linear_maximizer",
    "min_norm_element",
    "project_onto_simplex",
    "random_hull_problems",
    "solve_hull_least_squares",
]
