"""
Solver factory for creating method instances.

Uses factory pattern to create the solver class matching the ``method``
field of a SolverConfig. Maintains registry of available methods.
"""

from typing import Dict, List, Type

from core.models import SolverConfig
from .accelerated import AcceleratedGradient, AcceleratedGradientNoQP, SwitchingAccelerated
from .base import BaseSolver
from .inertial import InertialMethod
from .nesterov import NesterovReference
from .steepest import SteepestDescent


class SolverFactory:
    """
    Factory for creating solver instances.

    Class Attributes:
        _solvers: Dict mapping method names to solver classes
    """

    _solvers: Dict[str, Type[BaseSolver]] = {}

    @classmethod
    def register_solver(cls, method: str, solver_class: Type[BaseSolver]) -> None:
        """
        Register a solver class.

        Args:
            method: Method name as used in configs (e.g., "AccG")
            solver_class: Class inheriting from BaseSolver
        """
        cls._solvers[method] = solver_class

    @classmethod
    def create_solver(cls, config: SolverConfig) -> BaseSolver:
        """
        Create the solver for ``config.method``.

        Raises:
            ValueError: If the method is not registered
        """
        if config.method not in cls._solvers:
            raise ValueError(
                f"Unknown method: {config.method}. "
                f"Available: {list(cls._solvers.keys())}"
            )
        return cls._solvers[config.method](config)

    @classmethod
    def get_available_solvers(cls) -> List[str]:
        return list(cls._solvers.keys())


def get_solver(config: SolverConfig) -> BaseSolver:
    """Convenience wrapper around SolverFactory.create_solver."""
    return SolverFactory.create_solver(config)


# Register all available methods
SolverFactory.register_solver("SD", SteepestDescent)
SolverFactory.register_solver("Inertial", InertialMethod)
SolverFactory.register_solver("AccG", AcceleratedGradient)
SolverFactory.register_solver("AccGNoQ", AcceleratedGradientNoQP)
SolverFactory.register_solver("AccGSwitch", SwitchingAccelerated)
SolverFactory.register_solver("NesterovRef", NesterovReference)
