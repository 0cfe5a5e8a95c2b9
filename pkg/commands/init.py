"""
Template configuration command for accmo.
"""
from pathlib import Path

from core.constants import EXIT_FAILURE, EXIT_OK
from utils.config import Config, create_default_config
from utils.ui import error, info, success


def init_command(problem: str = "witting", path: str = "accmo.json", force: bool = False) -> int:
    """
    Write a template experiment configuration.

    Args:
        problem: Template name, one of CONFIG_TEMPLATES
        path: Target file (a directory receives accmo.json)
        force: Overwrite an existing file

    Returns:
        0 on success, 1 if the file exists and force is not set
    """
    config = Config(path)
    if config.exists() and not force:
        error(f"{config.config_path} already exists")
        info("Use --force to overwrite it")
        return EXIT_FAILURE

    Path(config.config_path).parent.mkdir(parents=True, exist_ok=True)
    config.save(create_default_config(problem))
    success(f"Wrote {problem} template to {config.config_path}")
    info(f"Run it with 'accmo run {config.config_path}'")
    return EXIT_OK
