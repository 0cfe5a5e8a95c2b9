"""
Multiobjective problem abstraction.

A problem is a tuple of m smooth objectives over R^n. Each objective
exposes ``value(x)`` and ``gradient(x)``; the problem adds dimension
checks, a Lipschitz hint and, for suite problems, an analytic
description of the Pareto set.

To add a new problem:
1. Subclass Objective (or wrap callables in FunctionObjective)
2. Build an MOProblem from the objectives
3. Register a constructor in problems/factory.py if it is configurable
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence, Tuple

import numpy as np

from core.constants import FINITE_DIFFERENCE_STEP
from utils.errors import InvalidProblemError, evaluation_failure


class Objective(ABC):
    """A smooth scalar function on R^n with an analytic gradient."""

    @abstractmethod
    def value(self, x: np.ndarray) -> float:
        pass

    @abstractmethod
    def gradient(self, x: np.ndarray) -> np.ndarray:
        pass


class FunctionObjective(Objective):
    """Objective built from a value callable and a gradient callable."""

    def __init__(self, value_fn: Callable[[np.ndarray], float],
                 gradient_fn: Callable[[np.ndarray], np.ndarray]):
        self._value_fn = value_fn
        self._gradient_fn = gradient_fn

    def value(self, x: np.ndarray) -> float:
        return float(self._value_fn(x))

    def gradient(self, x: np.ndarray) -> np.ndarray:
        return np.asarray(self._gradient_fn(x), dtype=float)


@dataclass(frozen=True)
class ParetoSet:
    """
    Analytic description of a Pareto set.

    Attributes:
        description: Human-readable description
        distance: Euclidean distance from a point to the set
        tol: Distance below which a point counts as a member
    """
    description: str
    distance: Callable[[np.ndarray], float]
    tol: float = 1e-12

    def contains(self, x: np.ndarray) -> bool:
        return self.distance(x) <= self.tol


@dataclass(frozen=True)
class MOProblem:
    """
    m smooth objectives over R^n.

    Instances are immutable; evaluation is pure and safe to call from
    concurrent runs.

    Attributes:
        n: Input dimension
        objectives: The m objectives
        lipschitz_hint: Advisory common gradient Lipschitz constant
        known_pareto: Analytic Pareto set (suite problems only)
        name: Problem label
    """
    n: int
    objectives: Tuple[Objective, ...]
    lipschitz_hint: Optional[float] = None
    known_pareto: Optional[ParetoSet] = None
    name: str = "problem"
    metadata: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise InvalidProblemError(f"Problem dimension must be positive, got {self.n}")
        if len(self.objectives) < 1:
            raise InvalidProblemError("A problem needs at least one objective")
        if self.lipschitz_hint is not None and self.lipschitz_hint < 0:
            raise InvalidProblemError("lipschitz_hint must be nonnegative")
        object.__setattr__(self, "objectives", tuple(self.objectives))

    @property
    def m(self) -> int:
        return len(self.objectives)

    def values(self, x: np.ndarray) -> np.ndarray:
        return evaluate_all(self, x)[0]

    def gradients(self, x: np.ndarray) -> np.ndarray:
        return evaluate_all(self, x)[1]


def as_point(x: Sequence[float], n: int) -> np.ndarray:
    """
    Validate and copy a point of R^n.

    Raises:
        InvalidProblemError: Wrong length or non-finite entries
    """
    point = np.array(x, dtype=float).reshape(-1)
    if point.shape[0] != n:
        raise InvalidProblemError(f"Point has length {point.shape[0]}, expected {n}")
    if not np.all(np.isfinite(point)):
        raise InvalidProblemError("Point has non-finite entries")
    return point


def evaluate_all(p: MOProblem, x: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """
    Evaluate all objective values and gradients in one pass.

    Args:
        p: Problem
        x: Point of length n

    Returns:
        (values of shape (m,), gradients of shape (m, n))

    Raises:
        EvaluationError: An objective returned a non-finite value or gradient
    """
    values = np.empty(p.m)
    gradients = np.empty((p.m, p.n))
    with np.errstate(over="ignore", invalid="ignore"):
        for i, objective in enumerate(p.objectives):
            value = objective.value(x)
            if not np.isfinite(value):
                raise evaluation_failure(i, "value")
            gradient = objective.gradient(x)
            if gradient.shape != (p.n,):
                raise InvalidProblemError(
                    f"Objective {i + 1} returned a gradient of shape {gradient.shape}, expected ({p.n},)"
                )
            if not np.all(np.isfinite(gradient)):
                raise evaluation_failure(i, "gradient")
            values[i] = value
            gradients[i] = gradient
    return values, gradients


def evaluate_values(p: MOProblem, x: np.ndarray) -> np.ndarray:
    """Evaluate objective values only (line searches need no gradients)."""
    values = np.empty(p.m)
    with np.errstate(over="ignore", invalid="ignore"):
        for i, objective in enumerate(p.objectives):
            value = objective.value(x)
            if not np.isfinite(value):
                raise evaluation_failure(i, "value")
            values[i] = value
    return values


def finite_difference_gradient(p: MOProblem, i: int, x: np.ndarray,
                               h: float = FINITE_DIFFERENCE_STEP) -> np.ndarray:
    """
    Central-difference gradient of objective ``i`` (0-based) at ``x``.

    Used as the gradient-correctness oracle in tests.
    """
    if h <= 0:
        raise InvalidProblemError(f"Finite-difference step must be positive, got {h}")
    objective = p.objectives[i]
    x = np.asarray(x, dtype=float)
    grad = np.empty(p.n)
    for j in range(p.n):
        step = np.zeros(p.n)
        step[j] = h
        forward = objective.value(x + step)
        backward = objective.value(x - step)
        if not (np.isfinite(forward) and np.isfinite(backward)):
            raise evaluation_failure(i, "value")
        grad[j] = (forward - backward) / (2 * h)
    return grad
