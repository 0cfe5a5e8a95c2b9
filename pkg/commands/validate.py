"""
Configuration validation command for accmo.
"""
import json
from typing import Optional

from core.constants import EXIT_FAILURE, EXIT_OK
from core.models import ExperimentConfig
from utils.config import Config
from utils.errors import ConfigError
from utils.ui import console, error, header, success
from utils.validator import validate_config


def validate_command(config_path: Optional[str] = None, schema: bool = False) -> int:
    """
    Validate an experiment configuration or print the JSON schema.

    Args:
        config_path: Configuration file to check
        schema: Print the configuration JSON schema instead

    Returns:
        0 if valid (or schema printed), 1 otherwise
    """
    if schema:
        console.print_json(json.dumps(ExperimentConfig.model_json_schema(by_alias=True)))
        return EXIT_OK

    if config_path is None:
        raise ConfigError("No configuration given", ["Pass a config file or use --schema"])

    config = Config(config_path)
    if not config.exists():
        raise ConfigError(
            f"Configuration file not found: {config.config_path}",
            ["Run 'accmo init' to create a template configuration"],
        )

    errors = validate_config(config.load())
    if errors:
        header("Configuration errors")
        for message in errors:
            error(message)
        return EXIT_FAILURE

    success(f"{config.config_path} is valid")
    return EXIT_OK
