"""
Centralized logging configuration for accmo.

This module provides a unified logging system for the library and the
experiment CLI, supporting both console and file output with configurable
verbosity levels.

Features:
    - Console and file logging support
    - Configurable verbosity levels
    - Singleton logger pattern to avoid duplicate handlers
"""
import logging
import sys
from typing import Optional

ROOT_LOGGER = "accmo"


def setup_logging(verbose: bool = False, log_file: Optional[str] = None) -> logging.Logger:
    """
    Setup centralized logging configuration for accmo.

    Prevents duplicate handler creation by checking existing handlers,
    so repeated CLI invocations in one process (tests) stay quiet.

    Args:
        verbose: Enable DEBUG level logging if True, WARNING level if False
        log_file: Optional path to log file for persistent logging

    Returns:
        Configured logger instance for the application
    """
    logger = logging.getLogger(ROOT_LOGGER)

    if logger.handlers:
        return logger

    level = logging.DEBUG if verbose else logging.WARNING
    logger.setLevel(logging.DEBUG)

    formatter = logging.Formatter(
        '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
    )

    # Console handler on stderr
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(level)
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)

    if log_file:
        file_handler = logging.FileHandler(log_file)
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)

    return logger


def get_logger(name: str = ROOT_LOGGER) -> logging.Logger:
    """
    Get a logger instance under the ``accmo`` hierarchy.

    Module names of the flat package layout (``solvers.runner``) are
    prefixed so that every logger inherits the handlers configured by
    :func:`setup_logging`.

    Args:
        name: Logger name, typically __name__ from calling module

    Returns:
        Logger instance configured for the specified module
    """
    if name != ROOT_LOGGER and not name.startswith(f"{ROOT_LOGGER}."):
        name = f"{ROOT_LOGGER}.{name}"
    return logging.getLogger(name)
