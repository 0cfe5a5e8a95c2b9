"""
Experiment run command for accmo.

Loads a configuration, runs every (solver, start) cell with a progress
bar and prints per-solver totals.

Example:
    >>> from commands.run import run_command
    >>> run_command("configs/witting.json", out_dir="results/witting", threads=4)
    0
"""
import asyncio
from typing import Optional

from core.logging import get_logger
from core.services import ExperimentService
from utils.config import Config
from utils.ui import header, info, print_summary_table, progress_bar, success, warning

logger = get_logger(__name__)


def run_command(config_path: str, out_dir: Optional[str] = None, seed: Optional[int] = None,
                threads: int = 1) -> int:
    """
    Run an experiment.

    Args:
        config_path: JSON (or YAML) experiment configuration
        out_dir: Overrides outputs.directory
        seed: Overrides the start seed (and the log-sum-exp problem seed)
        threads: Maximum number of concurrently running cells

    Returns:
        0 on success, 2 when some cells failed

    Raises:
        ConfigError: Invalid or missing configuration
        OutputError: Output directory not writable
    """
    config = Config(config_path).load_experiment(seed=seed)
    service = ExperimentService(config, out_dir=out_dir, threads=threads)
    starts = len(config.starts.points) if config.starts.points else config.starts.count
    total = len(config.solvers) * starts

    header(f"accmo run: {config.name}")
    info(f"{len(config.solvers)} solver(s) x {starts} start(s) -> {service.out_dir}")

    with progress_bar() as progress:
        task = progress.add_task("Running cells", total=total)
        result = asyncio.run(service.run(on_cell_done=lambda row: progress.advance(task)))

    print_summary_table([row.model_dump() for row in result.rows], result.summary["totals"])
    if result.failures:
        warning(f"{result.failures} of {len(result.rows)} cell(s) failed; see 'error' fields in the summary")
    else:
        success(f"Experiment finished, outputs in {result.out_dir}")
    return result.exit_code
