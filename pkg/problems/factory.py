"""
Problem factory for building problems from configuration specs.

Maintains a registry of problem kinds so experiment configs can name
the problem they run on.
"""
from typing import Callable, Dict, List

from core.models import LogSumExpSpec, QuadraticSpec, WittingSpec
from .base import MOProblem
from .logsumexp import make_logsumexp
from .quadratic import make_from_spec as make_quadratic
from .witting import make_witting


class ProblemFactory:
    """
    Factory for creating problems from specs.

    Class Attributes:
        _builders: Dict mapping problem kinds to builder callables
    """

    _builders: Dict[str, Callable] = {}

    @classmethod
    def register_problem(cls, kind: str, builder: Callable) -> None:
        cls._builders[kind] = builder

    @classmethod
    def create_problem(cls, spec) -> MOProblem:
        """
        Build the problem described by ``spec``.

        Raises:
            ValueError: If the spec kind is not registered
        """
        if spec.kind not in cls._builders:
            raise ValueError(
                f"Unknown problem kind: {spec.kind}. "
                f"Available: {list(cls._builders.keys())}"
            )
        return cls._builders[spec.kind](spec)

    @classmethod
    def get_available_problems(cls) -> List[str]:
        return list(cls._builders.keys())


ProblemFactory.register_problem(LogSumExpSpec.model_fields["kind"].default, make_logsumexp)
ProblemFactory.register_problem(WittingSpec.model_fields["kind"].default, make_witting)
ProblemFactory.register_problem(QuadraticSpec.model_fields["kind"].default, make_quadratic)


def build_problem(spec) -> MOProblem:
    """Convenience wrapper around ProblemFactory.create_problem."""
    return ProblemFactory.create_problem(spec)
