"""
Pareto criticality measure.
"""
import numpy as np

from problems.base import MOProblem, as_point, evaluate_all
from subproblems.hull import min_norm_element


def kkt_residual(p: MOProblem, x: np.ndarray) -> float:
    """
    ||proj_{C(x)}(0)||, the norm of the min-norm element of the gradient hull.

    Zero exactly at Pareto critical points (up to the subproblem tolerance).
    """
    _, gradients = evaluate_all(p, as_point(x, p.n))
    _, direction = min_norm_element(gradients)
    return float(np.linalg.norm(direction))
