"""
CLI factory for building the main CLI application.

Constructs the Click CLI with all commands and configuration.
"""
import click

from core.logging import setup_logging
from utils.ui import info
from .commands import init, oracle, plot_data, run, validate


def create_cli(version: str):
    """
    Create the main CLI application.

    Args:
        version: Application version string

    Returns:
        Click CLI group with all commands
    """

    @click.group()
    @click.version_option(version=version, prog_name="accmo")
    @click.option("--verbose", "-v", is_flag=True, help="Enable verbose output for debugging")
    @click.option("--log-file", help="Log file path")
    @click.pass_context
    def cli(ctx, verbose, log_file):
        """
        accmo - accelerated multiobjective gradient methods

        Run steepest descent, inertial and accelerated methods on the
        log-sum-exp and Witting test problems and write traces and summaries.

        Get started:
          1. Run 'accmo init --problem witting'
          2. Check it with 'accmo validate accmo.json'
          3. Run it with 'accmo run accmo.json --threads 4'
        """
        ctx.ensure_object(dict)
        ctx.obj["verbose"] = verbose
        ctx.obj["log_file"] = log_file

        logger = setup_logging(verbose=verbose, log_file=log_file)

        if verbose:
            info(f"accmo v{version} - Verbose mode enabled")
            logger.info(f"accmo v{version} started with verbose logging")

    cli.add_command(run)
    cli.add_command(validate)
    cli.add_command(oracle)
    cli.add_command(init)
    cli.add_command(plot_data)

    return cli
