"""
CLI command implementations.

Contains all Click command definitions; the work happens in commands/.
"""
import sys

import click

from commands.init import init_command
from commands.oracle import oracle_command
from commands.plot_data import plot_data_command
from commands.run import run_command
from commands.validate import validate_command
from core.constants import CONFIG_TEMPLATES, ORACLE_GRID_RESOLUTION
from .base import BaseCommand


@click.command()
@click.argument("config_path", type=click.Path(dir_okay=False))
@click.option("--out", "out_dir", help="Output directory (overrides outputs.directory)")
@click.option("--seed", type=click.IntRange(min=0), help="Override the start seed and the log-sum-exp problem seed")
@click.option("--threads", type=click.IntRange(min=1), default=1, show_default=True,
              help="Run up to K cells in parallel")
@click.pass_context
def run(ctx, config_path, out_dir, seed, threads):
    """Run the experiment described by CONFIG_PATH."""
    cmd = BaseCommand("run")
    sys.exit(cmd.handle_sync(run_command, config_path, out_dir=out_dir, seed=seed, threads=threads))


@click.command()
@click.argument("config_path", required=False, type=click.Path(dir_okay=False))
@click.option("--schema", is_flag=True, help="Print the configuration JSON schema")
@click.pass_context
def validate(ctx, config_path, schema):
    """Validate CONFIG_PATH without running it."""
    cmd = BaseCommand("validate")
    sys.exit(cmd.handle_sync(validate_command, config_path, schema=schema))


@click.command()
@click.option("--instances", type=click.IntRange(min=1), default=500, show_default=True,
              help="Number of random instances")
@click.option("--seed", type=click.IntRange(min=0), default=0, show_default=True, help="Instance seed")
@click.option("--grid", type=float, default=ORACLE_GRID_RESOLUTION, show_default=True,
              help="Oracle grid resolution")
@click.option("--tol", type=float, default=1e-8, show_default=True, help="Allowed objective gap")
@click.pass_context
def oracle(ctx, instances, seed, grid, tol):
    """Check the simplex subproblem solver against the brute-force oracle."""
    cmd = BaseCommand("oracle")
    sys.exit(cmd.handle_sync(oracle_command, instances=instances, seed=seed, grid=grid, tol=tol))


@click.command()
@click.option("--problem", "-p", type=click.Choice(CONFIG_TEMPLATES), default="witting", show_default=True)
@click.option("--path", default="accmo.json", show_default=True, help="Where to write the template")
@click.option("--force", "-f", is_flag=True, help="Overwrite an existing file")
@click.pass_context
def init(ctx, problem, path, force):
    """Write a template experiment configuration."""
    cmd = BaseCommand("init")
    sys.exit(cmd.handle_sync(init_command, problem=problem, path=path, force=force))


@click.command(name="plot-data")
@click.argument("out_dir", type=click.Path(file_okay=False))
@click.pass_context
def plot_data(ctx, out_dir):
    """Write tidy figure CSVs for a finished experiment in OUT_DIR."""
    cmd = BaseCommand("plot-data")
    sys.exit(cmd.handle_sync(plot_data_command, out_dir))
