"""
Least squares over the unit simplex.

Every method in this package reduces its step to

    min_theta || sum_i theta_i c_i - t ||^2   s.t.  theta >= 0, sum_i theta_i = 1,

the projection of ``t`` onto the convex hull of the columns c_i. With
t = 0 this is the min-norm element of the hull (steepest descent), and the
subproblem-free accelerated method only needs the linear maximizer over the
simplex.

For m <= FACE_ENUMERATION_MAX_M the problem is solved exactly by enumerating
the 2^m - 1 faces of the simplex; larger m fall back to accelerated projected
gradient with sort-and-threshold simplex projection.

Example:
    >>> hp = HullProblem(np.array([[2.0, 0.0], [0.0, 1.0]]), np.zeros(2))
    >>> solve_hull_least_squares(hp).weights.theta
    array([0.2, 0.8])
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Tuple

import numpy as np

from core.constants import (
    FACE_ENUMERATION_MAX_M,
    FEASIBILITY_SLACK,
    KKT_TOLERANCE,
    PROJECTED_GRADIENT_MAX_ITERS,
)
from core.logging import get_logger
from utils.errors import EvaluationError, InvalidProblemError

logger = get_logger(__name__)


@dataclass(frozen=True)
class SimplexWeights:
    """
    A point of the unit simplex.

    Attributes:
        theta: Nonnegative weights summing to one
    """
    theta: np.ndarray

    def __post_init__(self):
        theta = np.asarray(self.theta, dtype=float).reshape(-1)
        if theta.size == 0:
            raise InvalidProblemError("Simplex weights need at least one entry")
        if np.any(theta < 0) or abs(theta.sum() - 1.0) > 1e-12:
            raise InvalidProblemError(f"Weights {theta} are not in the unit simplex")
        object.__setattr__(self, "theta", theta)

    @property
    def m(self) -> int:
        return self.theta.shape[0]

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(int(i) for i in np.flatnonzero(self.theta > 0))

    def combine(self, vectors: np.ndarray) -> np.ndarray:
        """Return sum_i theta_i vectors[i]."""
        if self.m == 1:
            return np.array(vectors[0], dtype=float)
        return self.theta @ vectors


@dataclass(frozen=True)
class HullProblem:
    """
    Projection of ``target`` onto the convex hull of the rows of ``columns``.

    Attributes:
        columns: Array of shape (m, n), one hull vertex per row
        target: Array of shape (n,)
    """
    columns: np.ndarray
    target: np.ndarray

    def __post_init__(self):
        columns = np.atleast_2d(np.asarray(self.columns, dtype=float))
        target = np.asarray(self.target, dtype=float).reshape(-1)
        if columns.shape[0] == 0 or columns.size == 0:
            raise InvalidProblemError("Hull problem needs at least one column")
        if columns.shape[1] != target.shape[0]:
            raise InvalidProblemError(
                f"Columns have length {columns.shape[1]} but the target has length {target.shape[0]}"
            )
        if not (np.all(np.isfinite(columns)) and np.all(np.isfinite(target))):
            raise EvaluationError("Hull problem has non-finite entries")
        object.__setattr__(self, "columns", columns)
        object.__setattr__(self, "target", target)

    @property
    def m(self) -> int:
        return self.columns.shape[0]

    @property
    def n(self) -> int:
        return self.columns.shape[1]

    def objective(self, theta: np.ndarray) -> float:
        residual = theta @ self.columns - self.target
        return float(residual @ residual)


@dataclass(frozen=True)
class HullSolution:
    """
    Result of a simplex least-squares solve.

    Attributes:
        weights: Optimal simplex weights
        residual: sum_i theta_i c_i - t
        objective: ||residual||^2
    """
    weights: SimplexWeights
    residual: np.ndarray
    objective: float
    _columns: Optional[np.ndarray] = None

    @property
    def point(self) -> np.ndarray:
        """The projection of the target onto the hull."""
        return self.weights.combine(self._columns)


def project_onto_simplex(v: np.ndarray) -> np.ndarray:
    """
    Euclidean projection onto the unit simplex (sort-and-threshold).

    Args:
        v: Vector of length m

    Returns:
        The closest point of the unit simplex
    """
    v = np.asarray(v, dtype=float)
    u = np.sort(v)[::-1]
    cumulative = np.cumsum(u) - 1.0
    index = np.arange(1, v.shape[0] + 1)
    rho = np.nonzero(u - cumulative / index > 0)[0][-1]
    threshold = cumulative[rho] / (rho + 1.0)
    return np.maximum(v - threshold, 0.0)


def kkt_margin(columns: np.ndarray, target: np.ndarray, theta: np.ndarray) -> float:
    """
    Smallest slack of the projection certificate.

    For r = sum_j theta_j c_j - t the point is optimal iff
    <r, c_i> >= <r, sum_j theta_j c_j> for every i; the return value is
    min_i <r, c_i> - <r, sum_j theta_j c_j> (nonnegative up to rounding
    at the solution).
    """
    point = theta @ columns
    residual = point - target
    return float(np.min(columns @ residual) - residual @ point)


def _scale(columns: np.ndarray, target: np.ndarray) -> float:
    return max(1.0, float(np.max(np.abs(columns))) ** 2, float(np.max(np.abs(target), initial=0.0)) ** 2)


def _solution(hp: HullProblem, theta: np.ndarray) -> HullSolution:
    residual = theta @ hp.columns - hp.target if theta.shape[0] > 1 else hp.columns[0] - hp.target
    return HullSolution(SimplexWeights(theta), residual, float(residual @ residual), hp.columns)


def _normalize(theta: np.ndarray) -> np.ndarray:
    theta = np.maximum(theta, 0.0)
    return theta / theta.sum()


def _solve_pair(hp: HullProblem) -> np.ndarray:
    # one-dimensional quadratic in the weight of the first column
    c1, c2 = hp.columns
    direction = c1 - c2
    t1 = float((hp.target - c2) @ direction) / float(direction @ direction)
    t1 = min(1.0, max(0.0, t1))
    return np.array([t1, 1.0 - t1])


def _solve_faces(hp: HullProblem, tol: float) -> Optional[np.ndarray]:
    gram = hp.columns @ hp.columns.T
    linear = hp.columns @ hp.target
    scale = _scale(hp.columns, hp.target)
    best: Optional[Tuple[float, int, np.ndarray]] = None

    for size in range(1, hp.m + 1):
        for face in combinations(range(hp.m), size):
            idx = list(face)
            system = np.zeros((size + 1, size + 1))
            system[:size, :size] = gram[np.ix_(idx, idx)]
            system[:size, size] = 1.0
            system[size, :size] = 1.0
            rhs = np.append(linear[idx], 1.0)
            solution = np.linalg.lstsq(system, rhs, rcond=None)[0]
            weights = solution[:size]
            if np.any(weights < -FEASIBILITY_SLACK) or weights.sum() <= 0:
                continue

            theta = np.zeros(hp.m)
            theta[idx] = weights
            theta = _normalize(theta)
            if kkt_margin(hp.columns, hp.target, theta) < -tol * scale:
                continue

            objective = hp.objective(theta)
            support = int(np.count_nonzero(theta))
            if best is None:
                best = (objective, support, theta)
                continue
            best_objective, best_support, _ = best
            slack = 1e-12 * scale * (1.0 + best_objective)
            if objective < best_objective - slack:
                best = (objective, support, theta)
            elif objective <= best_objective + slack and support > best_support:
                # fewest active bound constraints wins among optimal faces
                best = (objective, support, theta)

    return None if best is None else best[2]


def _solve_projected_gradient(hp: HullProblem, tol: float) -> np.ndarray:
    gram = hp.columns @ hp.columns.T
    linear = hp.columns @ hp.target
    lipschitz = 2.0 * float(np.linalg.eigvalsh(gram)[-1])
    if lipschitz <= 0:
        return np.full(hp.m, 1.0 / hp.m)
    step = 1.0 / lipschitz
    scale = _scale(hp.columns, hp.target)

    theta = np.full(hp.m, 1.0 / hp.m)
    momentum_point = theta.copy()
    t_prev = 1.0
    for iteration in range(PROJECTED_GRADIENT_MAX_ITERS):
        gradient = 2.0 * (gram @ momentum_point - linear)
        theta_next = project_onto_simplex(momentum_point - step * gradient)
        t_next = (1.0 + np.sqrt(1.0 + 4.0 * t_prev * t_prev)) / 2.0
        momentum_point = theta_next + ((t_prev - 1.0) / t_next) * (theta_next - theta)
        theta, t_prev = theta_next, t_next
        if kkt_margin(hp.columns, hp.target, theta) >= -tol * scale:
            logger.debug(f"Projected gradient converged after {iteration + 1} iterations (m={hp.m})")
            break
    else:
        logger.warning(f"Projected gradient hit {PROJECTED_GRADIENT_MAX_ITERS} iterations (m={hp.m})")
    return theta


def solve_hull_least_squares(hp: HullProblem, tol: float = KKT_TOLERANCE) -> HullSolution:
    """
    Solve min ||sum_i theta_i c_i - t||^2 over the unit simplex.

    Args:
        hp: Columns and target
        tol: Tolerance of the projection certificate, relative to the data scale

    Returns:
        HullSolution with weights, residual and objective

    Raises:
        InvalidProblemError: tol is not positive
    """
    if tol <= 0:
        raise InvalidProblemError(f"Tolerance must be positive, got {tol}")

    if hp.m == 1:
        return _solution(hp, np.ones(1))
    if np.all(hp.columns == hp.columns[0]):
        return _solution(hp, np.full(hp.m, 1.0 / hp.m))
    if hp.m == 2:
        return _solution(hp, _solve_pair(hp))

    theta = None
    if hp.m <= FACE_ENUMERATION_MAX_M:
        theta = _solve_faces(hp, tol)
        if theta is None:
            logger.debug("No face passed the certificate, falling back to projected gradient")
    if theta is None:
        theta = _normalize(_solve_projected_gradient(hp, tol))
    return _solution(hp, theta)


def min_norm_element(gradients: np.ndarray, tol: float = KKT_TOLERANCE) -> Tuple[SimplexWeights, np.ndarray]:
    """
    Minimum-norm element of the convex hull of the gradients.

    Args:
        gradients: Array of shape (m, n)
        tol: Certificate tolerance

    Returns:
        (weights, direction) with direction = sum_i theta_i gradients[i]
    """
    gradients = np.atleast_2d(np.asarray(gradients, dtype=float))
    solution = solve_hull_least_squares(HullProblem(gradients, np.zeros(gradients.shape[1])), tol)
    return solution.weights, solution.weights.combine(gradients)


def linear_maximizer(gradients: np.ndarray, v: np.ndarray) -> Tuple[int, float]:
    """
    Vertex solution of max_{theta in simplex} sum_i theta_i <gradients[i], v>.

    Ties are broken by the lowest index. Indices are 0-based.

    Returns:
        (index, value) with value = <gradients[index], v>
    """
    gradients = np.atleast_2d(np.asarray(gradients, dtype=float))
    v = np.asarray(v, dtype=float)
    if not np.all(np.isfinite(v)):
        raise EvaluationError("Linear maximizer received a non-finite vector")
    scores = gradients @ v
    index = int(np.argmax(scores))
    return index, float(scores[index])
