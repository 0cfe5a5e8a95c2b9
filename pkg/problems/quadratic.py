"""
Quadratic oracle problems with closed-form Pareto sets.
"""
from typing import Sequence

import numpy as np

from core.models import QuadraticSpec
from utils.errors import InvalidProblemError
from .base import MOProblem, Objective, ParetoSet, as_point


class ShiftedQuadratic(Objective):
    """f(x) = curvature/2 * ||x - center||^2."""

    def __init__(self, center: np.ndarray, curvature: float = 1.0):
        self.center = np.asarray(center, dtype=float)
        self.curvature = float(curvature)

    def value(self, x: np.ndarray) -> float:
        diff = x - self.center
        return 0.5 * self.curvature * float(diff @ diff)

    def gradient(self, x: np.ndarray) -> np.ndarray:
        return self.curvature * (x - self.center)


def segment_distance(a1: np.ndarray, a2: np.ndarray):
    """Return a distance function to the segment [a1, a2]."""
    direction = a2 - a1
    length_sq = float(direction @ direction)

    def distance(x: np.ndarray) -> float:
        t = float((x - a1) @ direction) / length_sq
        t = min(1.0, max(0.0, t))
        return float(np.linalg.norm(x - (a1 + t * direction)))

    return distance


def make_quadratic_biobjective(a1: Sequence[float], a2: Sequence[float]) -> MOProblem:
    """
    Biobjective f_i(x) = 1/2 ||x - a_i||^2.

    Both gradients are 1-Lipschitz and the Pareto set is the segment [a1, a2].
    """
    a1 = np.asarray(a1, dtype=float).reshape(-1)
    a2 = as_point(a2, a1.shape[0])
    if np.array_equal(a1, a2):
        raise InvalidProblemError("Anchors a1 and a2 must differ")
    return MOProblem(
        n=a1.shape[0],
        objectives=(ShiftedQuadratic(a1), ShiftedQuadratic(a2)),
        lipschitz_hint=1.0,
        known_pareto=ParetoSet("segment [a1, a2]", segment_distance(a1, a2)),
        name=f"quadratic(n={a1.shape[0]})",
    )


def make_from_spec(spec: QuadraticSpec) -> MOProblem:
    return make_quadratic_biobjective(spec.a1, spec.a2)
