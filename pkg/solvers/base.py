"""
Base solver interface for accmo.

Defines the iterate state carried between steps, the run record produced
by :func:`solvers.runner.run` and the abstract interface every method
implements.

To add a new method:
1. Create a new file in solvers/ directory
2. Write a pure step function ``step(p, st, cfg) -> IterateState``
3. Subclass BaseSolver and return it from ``step``
4. Register in solvers/factory.py
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field, replace
from typing import List, Literal, Optional, Union

import numpy as np

from core.models import SolverConfig
from problems.base import MOProblem
from subproblems.hull import SimplexWeights

EnergyKind = Literal["inertial_h2", "accelerated_s"]
TerminationReason = Literal["max_iters", "tol_met", "eval_failure"]


@dataclass(frozen=True)
class IterateState:
    """
    State between two steps.

    Attributes:
        x_prev: x^{k-1}
        x_curr: x^k
        k: Iteration counter, starting at 1 with x_prev = x_curr
        step_size: Current step size (carried across steps by backtracking)
        last_choice: Simplex weights of the last subproblem, or the chosen
            objective index for the subproblem-free step
    """
    x_prev: np.ndarray
    x_curr: np.ndarray
    k: int = 1
    step_size: float = 0.0
    last_choice: Optional[Union[SimplexWeights, int]] = None

    @classmethod
    def initial(cls, x0: np.ndarray, step_size: float) -> "IterateState":
        x0 = np.array(x0, dtype=float)
        return cls(x_prev=x0, x_curr=x0.copy(), k=1, step_size=step_size)

    @property
    def momentum(self) -> np.ndarray:
        """x^k - x^{k-1}"""
        return self.x_curr - self.x_prev

    def advance(self, x_next: np.ndarray, step_size: float,
                last_choice: Optional[Union[SimplexWeights, int]]) -> "IterateState":
        return replace(self, x_prev=self.x_curr, x_curr=x_next, k=self.k + 1,
                       step_size=step_size, last_choice=last_choice)


@dataclass
class Termination:
    """
    Why and where a run stopped.

    Attributes:
        reason: "max_iters", "tol_met" or "eval_failure"
        k_final: Last iteration index with a recorded iterate
        message: Error message for eval_failure
    """
    reason: TerminationReason
    k_final: int
    message: str = ""

    @property
    def iterations(self) -> int:
        return self.k_final - 1


@dataclass
class RunRecord:
    """
    Everything recorded along one run.

    Row ``j`` of the per-iteration arrays belongs to iteration k = j + 1.
    Values, step sizes, KKT residuals and the difference norms are always
    dense; iterates are thinned for large n (see ``iterate_indices``).

    Attributes:
        method: Method name
        label: Solver label from the configuration
        n: Problem dimension
        m: Number of objectives
        values: f(x^k), shape (k_final, m)
        step_sizes: Step size used to produce x^k (row 0: initial step size)
        kkt_residuals: ||proj_{C(x^k)}(0)|| or NaN when not recorded
        diff_norms: ||x^k - x^{k-1}||
        second_diff_norms: ||x^k - 2 x^{k-1} + x^{k-2}||
        iterates: Stored iterates
        iterate_indices: Iteration index k of each stored iterate
        termination: Termination reason and k_final
        wall_time: Seconds spent in the run
    """
    method: str
    label: str
    n: int
    m: int
    values: np.ndarray
    step_sizes: np.ndarray
    kkt_residuals: np.ndarray
    diff_norms: np.ndarray
    second_diff_norms: np.ndarray
    iterates: List[np.ndarray]
    iterate_indices: List[int]
    termination: Termination
    wall_time: float = 0.0
    config: Optional[SolverConfig] = field(default=None, repr=False)

    @property
    def k_final(self) -> int:
        return self.termination.k_final

    @property
    def iterations(self) -> int:
        return self.termination.iterations

    @property
    def dense(self) -> bool:
        return len(self.iterate_indices) == self.k_final

    @property
    def final_iterate(self) -> np.ndarray:
        return self.iterates[-1]

    @property
    def final_values(self) -> np.ndarray:
        return self.values[-1]

    def iterate(self, k: int) -> np.ndarray:
        """Return the stored iterate x^k (1-based k)."""
        try:
            return self.iterates[self.iterate_indices.index(k)]
        except ValueError:
            raise KeyError(f"Iterate {k} was not stored (run is thinned)") from None


class BaseSolver(ABC):
    """
    Abstract base class for all iterative methods.

    Attributes:
        config: Solver configuration
        energy_kind: Energy denominator matching the method, None when the
            method carries no energy
    """

    energy_kind: Optional[EnergyKind] = None

    def __init__(self, config: SolverConfig):
        self.config = config

    @property
    def name(self) -> str:
        return self.config.method

    def initial_state(self, x0: np.ndarray) -> IterateState:
        return IterateState.initial(x0, self.config.initial_step)

    @abstractmethod
    def step(self, p: MOProblem, st: IterateState) -> IterateState:
        """
        Compute x^{k+1} from the state at iteration k.

        Args:
            p: Problem
            st: Current state

        Returns:
            State at iteration k + 1
        """
        pass

    def energy_parameter(self) -> Optional[float]:
        """h for inertial energies, s for accelerated energies."""
        return None
