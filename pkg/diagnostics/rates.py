"""
Numerical check of the O(1/k^2) rate of the accelerated method.

For every reference point z and every k >= 2

    sigma_k(z) <= 2 (||x^1 - z||^2 + ||x^2 - z||^2) / (s (k + 1)^2)

and consequently u0_hat(x^k) (k + 1)^2 <= 4 R / s with
R = max_{j in {1, 2}, z in Z} ||x^j - z||^2. At k = 1 the inequality can
fail for reference points that are not minimizers, so it is not checked.
"""
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from problems.base import MOProblem
from solvers.base import RunRecord
from utils.errors import UnsupportedProblemError
from .merit import merit_estimate

FIRST_CHECKED_ITERATION = 2


@dataclass
class RateReport:
    """
    Margins of the rate bounds.

    Attributes:
        iterations: Checked iteration indices k
        sigma_margins: bound - sigma_k(z), shape (len(iterations), |Z|)
        u0_margins: 4 R / s - u0_hat(x^k) (k + 1)^2, shape (len(iterations),)
        radius: R
        tol: Absolute slack
    """
    iterations: np.ndarray
    sigma_margins: np.ndarray
    u0_margins: np.ndarray
    radius: float
    tol: float = 1e-9

    @property
    def sigma_passed(self) -> bool:
        return bool(np.all(self.sigma_margins >= -self.tol))

    @property
    def u0_passed(self) -> bool:
        return bool(np.all(self.u0_margins >= -self.tol))

    @property
    def passed(self) -> bool:
        return self.sigma_passed and self.u0_passed

    @property
    def worst_sigma_margin(self) -> float:
        return float(np.min(self.sigma_margins)) if self.sigma_margins.size else 0.0

    def first_failure(self) -> Optional[Tuple[int, int]]:
        """(k, z index) of the first violated sigma bound, None when all hold."""
        rows, columns = np.nonzero(self.sigma_margins < -self.tol)
        if rows.size == 0:
            return None
        return int(self.iterations[rows[0]]), int(columns[0])


def check_rate_bound(p: MOProblem, run: RunRecord, Z: Sequence[np.ndarray], s: float,
                     tol: float = 1e-9) -> RateReport:
    """
    Check both rate bounds for every recorded k >= 2 and every z in Z.

    Failures are reported in the returned RateReport, never raised.

    Raises:
        UnsupportedProblemError: The run stopped before x^2 or did not store it
    """
    if run.k_final < FIRST_CHECKED_ITERATION:
        raise UnsupportedProblemError("Rate bounds need at least the iterates x^1 and x^2")
    try:
        x1, x2 = run.iterate(1), run.iterate(2)
    except KeyError as e:
        raise UnsupportedProblemError(str(e)) from None

    estimate = merit_estimate(p, run, Z)
    Z = estimate.reference_set
    d1 = np.sum((Z - x1) ** 2, axis=1)
    d2 = np.sum((Z - x2) ** 2, axis=1)
    radius = float(max(np.max(d1), np.max(d2)))

    k = np.arange(FIRST_CHECKED_ITERATION, run.k_final + 1)
    scale = s * (k + 1.0) ** 2
    sigma_bounds = 2.0 * (d1 + d2)[None, :] / scale[:, None]
    rows = k - 1
    sigma_margins = sigma_bounds - estimate.sigma_values[rows]
    u0_margins = 4.0 * radius / s - estimate.u0_hat[rows] * (k + 1.0) ** 2
    return RateReport(iterations=k, sigma_margins=sigma_margins, u0_margins=u0_margins,
                      radius=radius, tol=tol)
