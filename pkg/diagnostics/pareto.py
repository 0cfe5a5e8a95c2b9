"""
Distance to an analytically known Pareto set.
"""
from typing import Optional

import numpy as np

from problems.base import MOProblem, ParetoSet
from utils.errors import UnsupportedProblemError


def pareto_distance(x: np.ndarray, pareto: Optional[ParetoSet]) -> float:
    """
    Euclidean distance from ``x`` to the Pareto set.

    Raises:
        UnsupportedProblemError: No analytic description is available
    """
    if pareto is None:
        raise UnsupportedProblemError(
            "Problem has no known Pareto set",
            ["Use kkt_residual or u0_estimate for problems without an analytic Pareto set"],
        )
    return float(pareto.distance(np.asarray(x, dtype=float)))


def problem_pareto_distance(p: MOProblem, x: np.ndarray) -> Optional[float]:
    """Distance for problems that carry a Pareto set, None otherwise."""
    if p.known_pareto is None:
        return None
    return pareto_distance(x, p.known_pareto)
