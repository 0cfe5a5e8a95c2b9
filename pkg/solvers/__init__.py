"""Iterative methods, backtracking and the shared run loop."""
from .accelerated import accg_noq_step, accg_step, switching_step
from .backtracking import backtracking_search
from .base import BaseSolver, IterateState, RunRecord, Termination
from .factory import SolverFactory, get_solver
from .inertial import inertial_step
from .nesterov import nesterov_reference, nesterov_step
from .runner import run
from .steepest import sd_step

__all__ = [
    "BaseSolver",
    "IterateState",
    "RunRecord",
    "SolverFactory",
    "Termination",
    "accg_noq_step",
    "accg_step",
    "backtracking_search",
    "get_solver",
    "inertial_step",
    "nesterov_reference",
    "nesterov_step",
    "run",
    "sd_step",
    "switching_step",
]
