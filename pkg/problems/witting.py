"""
Nonconvex biobjective test problem in two variables.

    f_{1,2}(x) = 1/2 (sqrt(1 + (x1 + x2)^2) + sqrt(1 + (x1 - x2)^2) +/- (x1 - x2))
                 + lambda exp(-(x1 - x2)^2)

The Pareto set is the line x1 + x2 = 0.
"""
import math

import numpy as np

from core.models import WittingSpec
from .base import MOProblem, Objective, ParetoSet


class WittingObjective(Objective):
    """One of the two objectives; ``sign`` is +1 for f_1 and -1 for f_2."""

    def __init__(self, lam: float, sign: int):
        self.lam = lam
        self.sign = sign

    def value(self, x: np.ndarray) -> float:
        u = x[0] + x[1]
        v = x[0] - x[1]
        return 0.5 * (math.sqrt(1 + u * u) + math.sqrt(1 + v * v) + self.sign * v) + self.lam * math.exp(-v * v)

    def gradient(self, x: np.ndarray) -> np.ndarray:
        u = x[0] + x[1]
        v = x[0] - x[1]
        du = 0.5 * u / math.sqrt(1 + u * u)
        dv = 0.5 * (v / math.sqrt(1 + v * v) + self.sign) - 2 * self.lam * v * math.exp(-v * v)
        # chain rule through u = x1 + x2, v = x1 - x2
        return np.array([du + dv, du - dv])


def line_distance(x: np.ndarray) -> float:
    """Distance to {x : x1 + x2 = 0}."""
    return abs(float(x[0]) + float(x[1])) / math.sqrt(2)


def make_witting(spec: WittingSpec) -> MOProblem:
    """Build the biobjective problem with its analytic Pareto set."""
    return MOProblem(
        n=2,
        objectives=(WittingObjective(spec.lam, +1), WittingObjective(spec.lam, -1)),
        known_pareto=ParetoSet("x1 + x2 = 0", line_distance),
        name=f"witting(lambda={spec.lam})",
    )
