"""
Configuration management for accmo.

This module handles loading, saving, and validating experiment
configuration files. Configs are JSON documents; YAML is accepted for
hand-written files. Validation goes through the pydantic models in
core.models.
"""

import json
from pathlib import Path
from typing import Any, Dict, List, Optional

import yaml
from pydantic import ValidationError

from core.constants import CONFIG_FILENAME, CONFIG_TEMPLATES, SWEEP_STEP_SIZES
from core.logging import get_logger
from core.models import ExperimentConfig
from .errors import ConfigError, handle_validation_error

logger = get_logger(__name__)

YAML_SUFFIXES = (".yml", ".yaml")


class Config:
    """
    Experiment configuration file manager.

    Attributes:
        config_path: Path to the configuration file; a directory resolves
            to ``<directory>/accmo.json``
        _data: Cached configuration data (empty dict if not loaded)
    """

    def __init__(self, path: str = CONFIG_FILENAME):
        """
        Initialize configuration manager.

        Args:
            path: Config file or directory containing accmo.json
        """
        config_path = Path(path)
        if config_path.is_dir():
            config_path = config_path / CONFIG_FILENAME
        self.config_path = config_path
        self._data: Dict[str, Any] = {}
        self.logger = get_logger(f"{__name__}.{self.__class__.__name__}")

    @property
    def is_yaml(self) -> bool:
        return self.config_path.suffix.lower() in YAML_SUFFIXES

    def load(self) -> Dict[str, Any]:
        """
        Load the raw configuration document.

        Returns:
            Dict containing configuration data (empty if the file is missing)

        Raises:
            ConfigError: If the file is malformed or not a mapping
        """
        if not self.config_path.exists():
            self.logger.debug(f"Configuration file {self.config_path} does not exist")
            return {}

        try:
            with open(self.config_path, "r") as f:
                data = yaml.safe_load(f) if self.is_yaml else json.load(f)
        except (json.JSONDecodeError, yaml.YAMLError) as e:
            self.logger.error(f"Failed to parse configuration file: {e}")
            raise ConfigError(
                f"Cannot parse {self.config_path}: {e}",
                ["Check the file is valid JSON (or YAML with a .yml/.yaml suffix)"],
            ) from e

        if data is None:
            data = {}
        if not isinstance(data, dict):
            raise ConfigError(f"{self.config_path} must contain a JSON object at the top level")
        self._data = data
        self.logger.debug(f"Loaded configuration with {len(self._data)} keys")
        return self._data

    def save(self, data: Dict[str, Any]) -> None:
        """
        Save configuration, as YAML for .yml/.yaml paths and JSON otherwise.

        Raises:
            IOError: If file cannot be written
        """
        try:
            self._data = data
            with open(self.config_path, "w") as f:
                if self.is_yaml:
                    yaml.dump(data, f, default_flow_style=False, indent=2, sort_keys=False)
                else:
                    json.dump(data, f, indent=2)
                    f.write("\n")
            self.logger.info(f"Configuration saved to {self.config_path}")
        except IOError as e:
            self.logger.error(f"Failed to save configuration: {e}")
            raise

    def exists(self) -> bool:
        return self.config_path.exists()

    def get(self, key: str, default: Any = None) -> Any:
        """
        Get configuration value by key.

        Automatically loads configuration if not already loaded.
        """
        if not self._data:
            self.load()
        return self._data.get(key, default)

    def load_experiment(self, seed: Optional[int] = None) -> ExperimentConfig:
        """
        Load and validate the experiment.

        Args:
            seed: Overrides the start-sampling seed and, for log-sum-exp
                problems, the problem seed

        Raises:
            ConfigError: Missing file or validation failure
        """
        if not self.exists():
            raise ConfigError(
                f"Configuration file not found: {self.config_path}",
                ["Run 'accmo init' to create a template configuration"],
            )
        data = apply_seed_override(self.load(), seed)
        try:
            return ExperimentConfig.model_validate(data)
        except ValidationError as e:
            raise handle_validation_error(e) from e


def apply_seed_override(data: Dict[str, Any], seed: Optional[int]) -> Dict[str, Any]:
    """Return a copy of ``data`` with the --seed override applied."""
    if seed is None:
        return data
    data = json.loads(json.dumps(data))
    if isinstance(data.get("starts"), dict):
        data["starts"]["seed"] = seed
    problem = data.get("problem")
    if isinstance(problem, dict) and problem.get("kind") == "logsumexp":
        problem["seed"] = seed
    return data


def _solvers(step_size: float) -> List[Dict[str, Any]]:
    return [
        {"method": method, "step_size": step_size, "max_iters": 1000, "tol": 1e-4}
        for method in ("SD", "AccG", "AccGNoQ")
    ]


def create_default_config(problem: str = "witting") -> Dict[str, Any]:
    """
    Create a template experiment for one of the suite problems.

    The templates reproduce the reference experiment setups, all with
    k_max = 1000 and tol = 1e-4:

        witting: 100 starts in [-2, 2]^2, s = 5e-3
        logsumexp: n = 20, m = 3, p = 50, 50 starts in [-15, 15]^20, s = 5e-2
        witting-sweep: AccGNoQ alone at s = 5e-3, 1e-2 and 5e-2 on the
            Witting starts, with plot data for the image-space fronts
        quadratic: AccG and Inertial on the two-point quadratic

    Args:
        problem: Template name, one of CONFIG_TEMPLATES

    Returns:
        Dict containing the configuration document
    """
    if problem == "witting":
        return {
            "name": "witting",
            "problem": {"kind": "witting", "lambda": 0.6},
            "solvers": _solvers(5e-3),
            "starts": {"count": 100, "low": -2.0, "high": 2.0, "seed": 0},
            "outputs": {"directory": "results/witting"},
        }
    if problem == "logsumexp":
        return {
            "name": "logsumexp",
            "problem": {"kind": "logsumexp", "n": 20, "m": 3, "p": 50, "seed": 0},
            "solvers": _solvers(5e-2),
            "starts": {"count": 50, "low": -15.0, "high": 15.0, "seed": 0},
            "outputs": {"directory": "results/logsumexp"},
        }
    if problem == "witting-sweep":
        return {
            "name": "witting-sweep",
            "problem": {"kind": "witting", "lambda": 0.6},
            "solvers": [
                {"method": "AccGNoQ", "name": f"AccGNoQ-s{step_size:g}", "step_size": step_size,
                 "max_iters": 1000, "tol": 1e-4}
                for step_size in SWEEP_STEP_SIZES
            ],
            "starts": {"count": 100, "low": -2.0, "high": 2.0, "seed": 0},
            "outputs": {"directory": "results/witting-sweep", "formats": ["csv", "json", "plot"]},
        }
    if problem == "quadratic":
        return {
            "name": "quadratic",
            "problem": {"kind": "quadratic", "a1": [0.0, 0.0], "a2": [1.0, 0.0]},
            "solvers": [
                {"method": "AccG", "step_size": 1.0, "max_iters": 200, "tol": 1e-10},
                {"method": "Inertial", "alpha": 1.0, "h": 0.5, "max_iters": 200, "tol": 1e-10},
            ],
            "starts": {"points": [[2.0, 1.0], [-1.0, -1.0]]},
            "outputs": {"directory": "results/quadratic"},
        }
    raise ConfigError(f"Unknown template: {problem}", [f"Use one of: {', '.join(CONFIG_TEMPLATES)}"])
