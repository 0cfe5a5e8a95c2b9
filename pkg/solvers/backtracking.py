"""
Backtracking on a descent-lemma type inequality.

For a step x^+ = w - tau d the accepted tau = sigma^l * s_prev is the
first with

    f_i(w - tau d) <= f_i(w) - tau <grad f_i(w), d> + tau/2 ||d||^2

for every objective i. For an L-Lipschitz gradient the inequality holds for
all tau <= 1/L, so the accepted step never drops below sigma/L.
"""
from typing import Optional

import numpy as np

from core.constants import BACKTRACKING_MAX_REDUCTIONS, BACKTRACKING_RELATIVE_SLACK
from core.logging import get_logger
from problems.base import MOProblem, evaluate_all, evaluate_values
from utils.errors import EvaluationError, InvalidProblemError, StepSizeUnderflowError

logger = get_logger(__name__)


def backtracking_search(p: MOProblem, w: np.ndarray, d: np.ndarray, s_prev: float, sigma: float,
                        values: Optional[np.ndarray] = None, gradients: Optional[np.ndarray] = None,
                        max_reductions: int = BACKTRACKING_MAX_REDUCTIONS) -> float:
    """
    Return sigma^l * s_prev for the smallest admissible l.

    Args:
        p: Problem
        w: Base point (x^k for SD/Inertial, y^k for the accelerated methods)
        d: Step direction
        s_prev: Step size of the previous iteration
        sigma: Reduction factor in (0, 1)
        values / gradients: f(w) and its Jacobian when already known

    Returns:
        The accepted step size

    Raises:
        StepSizeUnderflowError: No admissible l <= max_reductions
    """
    if not 0 < sigma < 1:
        raise InvalidProblemError(f"sigma must lie in (0, 1), got {sigma}")
    if s_prev <= 0:
        raise InvalidProblemError(f"Previous step size must be positive, got {s_prev}")
    d = np.asarray(d, dtype=float)
    if not np.all(np.isfinite(d)):
        raise EvaluationError("Backtracking received a non-finite direction")

    if values is None or gradients is None:
        values, gradients = evaluate_all(p, w)
    slopes = gradients @ d
    norm_sq = float(d @ d)
    slack = BACKTRACKING_RELATIVE_SLACK * (1.0 + np.abs(values))

    tau = s_prev
    for reductions in range(max_reductions + 1):
        try:
            trial = evaluate_values(p, w - tau * d)
        except EvaluationError:
            # overflow at a too long step counts as a failed test
            trial = None
        if trial is not None and np.all(trial <= values - tau * slopes + 0.5 * tau * norm_sq + slack):
            if reductions:
                logger.debug(f"Backtracking reduced step {s_prev:.3e} -> {tau:.3e} ({reductions} reductions)")
            return tau
        tau *= sigma

    raise StepSizeUnderflowError(
        f"Backtracking needed more than {max_reductions} reductions from s = {s_prev:.3e}",
        [
            "Check the objectives have Lipschitz continuous gradients near the iterates",
            "Increase sigma or the initial step size s0",
        ],
    )
