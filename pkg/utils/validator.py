"""
Configuration validation for accmo.

Validates experiment configuration documents against the pydantic
models and returns readable messages instead of raising.

Example:
    >>> errors = validate_config({"problem": {"kind": "witting"}})
    >>> errors[0]
    'solvers: Field required'
"""

from typing import Any, Dict, List

from pydantic import ValidationError

from core.constants import SUPPORTED_PROBLEMS
from core.models import ExperimentConfig


def validate_config(config: Dict[str, Any]) -> List[str]:
    """
    Validate configuration and return list of errors.

    Args:
        config: Configuration dictionary to validate

    Returns:
        List of error messages (empty if valid)
    """
    errors = []

    problem = config.get("problem")
    if isinstance(problem, dict) and problem.get("kind") not in SUPPORTED_PROBLEMS:
        errors.append(
            f"Unsupported problem: {problem.get('kind')}. "
            f"Supported: {', '.join(SUPPORTED_PROBLEMS)}"
        )
        return errors

    try:
        ExperimentConfig.model_validate(config)
    except ValidationError as e:
        for item in e.errors():
            location = ".".join(str(part) for part in item.get("loc", ()))
            message = item.get("msg", "invalid value")
            errors.append(f"{location}: {message}" if location else message)

    return errors
