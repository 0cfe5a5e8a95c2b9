"""
Single-objective and degenerate problems used by reduction tests.
"""
from typing import Optional, Sequence, Union

import numpy as np

from .base import FunctionObjective, MOProblem, Objective, ParetoSet
from .quadratic import ShiftedQuadratic


def wrap_single(f: Objective, n: int, lipschitz_hint: Optional[float] = None,
                minimizer: Optional[Sequence[float]] = None, name: str = "single") -> MOProblem:
    """
    Wrap one scalar objective as an m = 1 problem.

    When ``minimizer`` is given it becomes the known Pareto set.
    """
    known = None
    if minimizer is not None:
        target = np.asarray(minimizer, dtype=float)
        known = ParetoSet("minimizer", lambda x: float(np.linalg.norm(x - target)))
    return MOProblem(n=n, objectives=(f,), lipschitz_hint=lipschitz_hint, known_pareto=known, name=name)


def make_scaled_quadratic(curvature: float, center: Union[float, Sequence[float]]) -> MOProblem:
    """f(x) = curvature/2 * ||x - center||^2 as an m = 1 problem with L = curvature."""
    center = np.atleast_1d(np.asarray(center, dtype=float))
    return wrap_single(
        ShiftedQuadratic(center, curvature),
        n=center.shape[0],
        lipschitz_hint=float(curvature),
        minimizer=center,
        name=f"quadratic(L={curvature})",
    )


def make_constant(n: int, m: int = 1, value: float = 1.0) -> MOProblem:
    """m constant objectives on R^n (all gradients vanish)."""
    objectives = tuple(
        FunctionObjective(lambda x, c=value + i: c, lambda x: np.zeros(n)) for i in range(m)
    )
    return MOProblem(n=n, objectives=objectives, lipschitz_hint=0.0, name=f"constant(n={n},m={m})")
