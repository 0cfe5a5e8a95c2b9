"""
Base command class for CLI commands.

Provides common functionality for error handling and logging.
"""
import sys
import traceback
from typing import Callable

import click

from core.constants import EXIT_FAILURE
from core.logging import get_logger
from utils.errors import AccmoError, display_error_with_suggestions
from utils.ui import error


class BaseCommand:
    """Base class for CLI commands with common error handling."""

    def __init__(self, name: str):
        self.name = name
        self.logger = get_logger(f"cli.{name}")

    def handle_sync(self, sync_func: Callable, *args, **kwargs) -> int:
        """
        Run a command function and map failures to exit code 1.

        Returns:
            The command's exit code
        """
        try:
            return sync_func(*args, **kwargs)
        except KeyboardInterrupt:
            error(f"{self.name.title()} cancelled by user")
            sys.exit(EXIT_FAILURE)
        except AccmoError as e:
            self.logger.debug(f"{self.name} failed: {e.message}")
            display_error_with_suggestions(e)
            sys.exit(EXIT_FAILURE)
        except Exception as e:
            ctx = click.get_current_context(silent=True)
            error(f"{self.name.title()} failed: {str(e)}")
            if ctx is not None and ctx.obj and ctx.obj.get("verbose"):
                error("Full traceback:")
                traceback.print_exc()
            else:
                error("Use --verbose for detailed error information")
            sys.exit(EXIT_FAILURE)
