"""Problem model and the experiment problem suite."""
from .base import (
    FunctionObjective,
    MOProblem,
    Objective,
    ParetoSet,
    as_point,
    evaluate_all,
    evaluate_values,
    finite_difference_gradient,
)
from .factory import build_problem
from .logsumexp import make_logsumexp
from .quadratic import make_quadratic_biobjective
from .single import make_constant, make_scaled_quadratic, wrap_single
from .witting import make_witting

__all__ = [
    "FunctionObjective",
    "MOProblem",
    "Objective",
    "ParetoSet",
    "as_point",
    "build_problem",
    "evaluate_all",
    "evaluate_values",
    "finite_difference_gradient",
    "make_constant",
    "make_logsumexp",
    "make_quadratic_biobjective",
    "make_scaled_quadratic",
    "make_witting",
    "wrap_single",
]
