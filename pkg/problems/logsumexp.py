"""
Convex log-sum-exp objectives f_i(x) = ln(sum_j exp(a_j^T x)).
"""
from typing import List

import numpy as np

from core.logging import get_logger
from core.models import LogSumExpSpec
from .base import MOProblem, Objective
from .sampling import make_generator

logger = get_logger(__name__)


class LogSumExpObjective(Objective):
    """
    ln(sum_j exp((A x)_j)) evaluated with the max-shift trick.

    Attributes:
        A: Data matrix of shape (p, n)
    """

    def __init__(self, A: np.ndarray):
        self.A = np.asarray(A, dtype=float)

    def value(self, x: np.ndarray) -> float:
        z = self.A @ x
        shift = np.max(z)
        return float(shift + np.log(np.sum(np.exp(z - shift))))

    def gradient(self, x: np.ndarray) -> np.ndarray:
        z = self.A @ x
        weights = np.exp(z - np.max(z))
        weights /= np.sum(weights)
        return self.A.T @ weights

    @property
    def lipschitz_bound(self) -> float:
        # softmax covariance has spectral norm at most 1/2
        return float(np.linalg.norm(self.A, 2) ** 2 / 2)


def make_logsumexp(spec: LogSumExpSpec) -> MOProblem:
    """
    Build the seeded log-sum-exp problem.

    Matrices A^i and vectors b^i are drawn entrywise from
    [box_low, box_high]. The b^i are kept in ``metadata`` but do not
    enter the objectives.
    """
    rng = make_generator(spec.seed)
    matrices: List[np.ndarray] = []
    offsets: List[np.ndarray] = []
    for _ in range(spec.m):
        matrices.append(rng.uniform(spec.box_low, spec.box_high, size=(spec.p, spec.n)))
        offsets.append(rng.uniform(spec.box_low, spec.box_high, size=spec.p))

    objectives = tuple(LogSumExpObjective(A) for A in matrices)
    hint = max(objective.lipschitz_bound for objective in objectives)
    logger.debug(f"Built log-sum-exp problem n={spec.n} m={spec.m} p={spec.p} seed={spec.seed} L<={hint:.4g}")

    return MOProblem(
        n=spec.n,
        objectives=objectives,
        lipschitz_hint=hint,
        name=f"logsumexp(n={spec.n},m={spec.m},p={spec.p},seed={spec.seed})",
        metadata={"A": matrices, "b": offsets},
    )
