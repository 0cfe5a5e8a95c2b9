"""
Finite-sample merit function estimates.

For a reference point z the gap

    sigma_k(z) = min_i f_i(x^k) - f_i(z)

is positive only when x^k is worse than z in every objective. The merit
function u_0(x) = sup_z min_i f_i(x) - f_i(z) vanishes exactly at weakly
Pareto optimal points; replacing the supremum by a finite reference set Z
gives a lower bound of u_0.
"""
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from problems.base import MOProblem, evaluate_values
from solvers.base import RunRecord
from utils.errors import InvalidProblemError


@dataclass
class MeritEstimate:
    """
    sigma_k(z) and the finite-sample u_0 along a run.

    Attributes:
        reference_set: Points z, shape (|Z|, n)
        sigma_values: sigma_k(z), shape (k_final, |Z|)
        u0_hat: max over Z of sigma_k(z), shape (k_final,)
    """
    reference_set: np.ndarray
    sigma_values: np.ndarray
    u0_hat: np.ndarray


def sigma_k(values_k: np.ndarray, values_z: np.ndarray) -> float:
    """min_i f_i(x^k) - f_i(z)"""
    values_k = np.asarray(values_k, dtype=float)
    values_z = np.asarray(values_z, dtype=float)
    if values_k.shape != values_z.shape:
        raise InvalidProblemError(f"Value vectors differ in length: {values_k.shape} vs {values_z.shape}")
    return float(np.min(values_k - values_z))


def reference_values(p: MOProblem, Z: Sequence[np.ndarray]) -> np.ndarray:
    """f(z) for every z in Z, shape (|Z|, m)."""
    Z = np.atleast_2d(np.asarray(Z, dtype=float))
    if Z.shape[0] == 0:
        raise InvalidProblemError("Reference set must not be empty")
    return np.array([evaluate_values(p, z) for z in Z])


def u0_estimate(p: MOProblem, x: np.ndarray, Z: Sequence[np.ndarray]) -> float:
    """
    max_{z in Z} min_i f_i(x) - f_i(z), a lower bound of u_0(x).

    Adding points to Z never decreases the estimate.
    """
    values_x = evaluate_values(p, np.asarray(x, dtype=float))
    gaps = np.min(values_x[None, :] - reference_values(p, Z), axis=1)
    return float(np.max(gaps))


def merit_estimate(p: MOProblem, run: RunRecord, Z: Sequence[np.ndarray]) -> MeritEstimate:
    """Evaluate sigma_k(z) for every recorded k and every z in Z."""
    Z = np.atleast_2d(np.asarray(Z, dtype=float))
    f_z = reference_values(p, Z)
    sigma = np.min(run.values[:, None, :] - f_z[None, :, :], axis=2)
    return MeritEstimate(reference_set=Z, sigma_values=sigma, u0_hat=np.max(sigma, axis=1))
