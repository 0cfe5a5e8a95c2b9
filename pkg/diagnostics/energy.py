"""
Discrete energies of the inertial and accelerated methods.

    inertial:     E_{i,k} = f_i(x^k) + ||x^k - x^{k-1}||^2 / (2 h^2)
    accelerated:  E_{i,k} = f_i(x^k) + ||x^k - x^{k-1}||^2 / (2 s)

Both are non-increasing under the step-size conditions of the methods
(L h < 2 alpha for the inertial method, s L <= 1 for AccG); the
accelerated energy even decreases by at least
3 / (2 s (k + 2)) ||x^k - x^{k-1}||^2 per step.
"""
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from solvers.base import EnergyKind, RunRecord
from utils.errors import InvalidProblemError, UnsupportedProblemError

ENERGY_KINDS = ("inertial_h2", "accelerated_s")


@dataclass
class EnergyTrace:
    """
    Per-iteration energies.

    Attributes:
        energies: E_{i,k}, shape (k_final, m); row j is iteration k = j + 1
        deltas: E_{i,k+1} - E_{i,k}, shape (k_final - 1, m)
        kind: Denominator selector
        parameter: h (inertial) or s (accelerated)
    """
    energies: np.ndarray
    deltas: np.ndarray
    kind: EnergyKind
    parameter: float


@dataclass
class EnergyCheck:
    """
    Per-step comparison of the energy decrease with its bound.

    Attributes:
        bounds: Upper bound of E_{i,k+1} - E_{i,k} per step, shape (k_final - 1,)
        margins: bound - delta per step and objective (nonnegative when the bound holds)
        tol: Slack allowed on every step
    """
    bounds: np.ndarray
    margins: np.ndarray
    tol: float

    @property
    def passed(self) -> bool:
        return bool(np.all(self.margins >= -self.tol))

    @property
    def worst_margin(self) -> float:
        return float(np.min(self.margins)) if self.margins.size else 0.0

    def violations(self) -> List[Tuple[int, int]]:
        """(k, i) pairs with a violated bound; k is the step from x^k to x^{k+1}, i is 0-based."""
        steps, objectives = np.nonzero(self.margins < -self.tol)
        return [(int(j) + 1, int(i)) for j, i in zip(steps, objectives)]


def energy_trace(run: RunRecord, kind: EnergyKind, h_or_s: float) -> EnergyTrace:
    """
    Build E_{i,k} from recorded values and iterate differences.

    Raises:
        InvalidProblemError: Unknown kind or nonpositive parameter
        UnsupportedProblemError: The run carries no difference norms
    """
    if kind not in ENERGY_KINDS:
        raise InvalidProblemError(f"Unknown energy kind: {kind}. Available: {list(ENERGY_KINDS)}")
    if h_or_s <= 0:
        raise InvalidProblemError(f"Energy parameter must be positive, got {h_or_s}")
    if run.diff_norms is None or len(run.diff_norms) != len(run.values):
        raise UnsupportedProblemError(
            "Run has no dense iterate difference norms",
            ["Re-run without thinning to compute energies"],
        )

    denominator = 2.0 * h_or_s * h_or_s if kind == "inertial_h2" else 2.0 * h_or_s
    kinetic = run.diff_norms ** 2 / denominator
    energies = run.values + kinetic[:, None]
    return EnergyTrace(energies=energies, deltas=np.diff(energies, axis=0), kind=kind, parameter=h_or_s)


def check_energy_decrease(run: RunRecord, trace: EnergyTrace, lipschitz: Optional[float] = None,
                          alpha: Optional[float] = None, tol: float = 1e-10) -> EnergyCheck:
    """
    Compare every energy step with its theoretical bound.

    accelerated: E_{k+1} - E_k <= -3 / (2 s (k + 2)) ||x^k - x^{k-1}||^2
    inertial:    E_{k+1} - E_k <= (L/2 - alpha/h) ||x^{k+1} - x^k||^2
                                  - ||x^{k+1} - 2 x^k + x^{k-1}||^2 / (2 h^2)

    The inertial bound needs ``lipschitz`` and ``alpha``; without them the
    bound is 0 (plain monotonicity).
    """
    steps = trace.deltas.shape[0]
    k = np.arange(1, steps + 1, dtype=float)
    if trace.kind == "accelerated_s":
        s = trace.parameter
        bounds = -3.0 / (2.0 * s * (k + 2.0)) * run.diff_norms[:steps] ** 2
    elif lipschitz is not None and alpha is not None:
        h = trace.parameter
        bounds = ((lipschitz / 2.0 - alpha / h) * run.diff_norms[1:] ** 2
                  - run.second_diff_norms[1:] ** 2 / (2.0 * h * h))
    else:
        bounds = np.zeros(steps)
    return EnergyCheck(bounds=bounds, margins=bounds[:, None] - trace.deltas, tol=tol)


def level_set_violations(run: RunRecord, tol: float = 1e-10) -> List[Tuple[int, int]]:
    """(k, i) pairs with f_i(x^k) > f_i(x^0) + tol; i is 0-based."""
    excess = run.values - run.values[0][None, :]
    rows, objectives = np.nonzero(excess > tol)
    return [(int(j) + 1, int(i)) for j, i in zip(rows, objectives)]
