"""
Error hierarchy and error presentation for accmo
"""

from typing import List, Optional

from .ui import error as show_error, info


class AccmoError(Exception):
    """Base exception for accmo errors"""
    def __init__(self, message: str, suggestions: Optional[List[str]] = None):
        self.message = message
        self.suggestions = suggestions or []
        super().__init__(message)


class InvalidProblemError(AccmoError):
    """Malformed problem data (dimensions, empty objective lists, bad points)"""
    pass


class EvaluationError(AccmoError):
    """An objective produced a non-finite value or gradient"""
    def __init__(self, message: str, objective_index: Optional[int] = None,
                 suggestions: Optional[List[str]] = None):
        self.objective_index = objective_index
        super().__init__(message, suggestions)


class StepSizeUnderflowError(AccmoError):
    """Backtracking exceeded its reduction cap"""
    pass


class UnsupportedProblemError(AccmoError):
    """A diagnostic needs data the problem or run does not carry"""
    pass


class ConfigError(AccmoError):
    """Experiment configuration issues"""
    pass


class OutputError(AccmoError):
    """Trace or summary files could not be written"""
    pass


def evaluation_failure(index: int, what: str = "value") -> EvaluationError:
    """Build the error raised when objective ``index`` returns non-finite output"""
    return EvaluationError(
        f"Objective {index + 1} returned a non-finite {what}",
        objective_index=index,
        suggestions=[
            "Check the starting point lies inside the experiment box",
            "Reduce the step size or enable backtracking",
            "Log-sum-exp objectives are shifted by their maximum; custom objectives should be too",
        ],
    )


def handle_validation_error(e: Exception) -> ConfigError:
    """Convert a pydantic ValidationError into a ConfigError with one suggestion per field"""
    suggestions = []
    errors = getattr(e, "errors", None)
    if callable(errors):
        for item in errors():
            location = ".".join(str(part) for part in item.get("loc", ()))
            message = item.get("msg", "invalid value")
            suggestions.append(f"{location}: {message}" if location else message)
    if not suggestions:
        suggestions.append(str(e))
    suggestions.append("Run 'accmo validate --schema' to see the full schema")
    return ConfigError("Configuration validation failed", suggestions)


def handle_io_error(path: str, e: Exception) -> OutputError:
    """Handle unwritable output locations"""
    return OutputError(
        f"Cannot write to {path}: {e}",
        [
            "Check the output directory exists or can be created",
            "Check file permissions",
            "Pass a different directory with --out",
        ],
    )


def display_error_with_suggestions(err: AccmoError) -> None:
    """Display error message with actionable suggestions"""
    show_error(err.message)

    if err.suggestions:
        info("Suggested solutions:")
        for i, suggestion in enumerate(err.suggestions, 1):
            if suggestion.startswith("  "):
                print(suggestion)
            else:
                print(f"   {i}. {suggestion}")
