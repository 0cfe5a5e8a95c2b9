"""
Business logic services for accmo experiments.

This module runs configured experiments: it builds the problem, resolves
the starting points, runs every (solver, start) cell and writes traces
and the summary. It separates the experiment logic from CLI presentation.

Services:
    - ExperimentService: Runs one experiment configuration

Cells run in worker threads via asyncio, at most ``threads`` at a time.
Results are collected in configuration order, so outputs do not depend on
scheduling.
"""
import asyncio
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

import numpy as np

from diagnostics.energy import energy_trace
from diagnostics.kkt import kkt_residual
from diagnostics.pareto import problem_pareto_distance
from problems.base import MOProblem
from problems.factory import build_problem
from problems.sampling import sample_box
from solvers.factory import SolverFactory
from solvers.runner import run
from utils.errors import AccmoError
from utils.output import emit_plot_data, trace_frame, write_summary_json, write_trace_csv
from .constants import EXIT_OK, EXIT_PARTIAL
from .logging import get_logger
from .models import ExperimentConfig, SolverConfig, StartsConfig, SummaryRow

logger = get_logger(__name__)


def resolve_starts(starts: StartsConfig, n: int) -> np.ndarray:
    """Explicit start points, or ``count`` seeded samples from [low, high]^n."""
    if starts.points is not None:
        return np.array(starts.points, dtype=float)
    return sample_box(starts.seed, starts.count, n, starts.low, starts.high)


@dataclass
class ExperimentResult:
    """
    Outcome of an experiment.

    Attributes:
        rows: One summary row per (solver, start), in configuration order
        summary: The JSON summary document
        out_dir: Output directory
        files: Written files
    """
    rows: List[SummaryRow]
    summary: Dict[str, Any]
    out_dir: Path
    files: List[Path] = field(default_factory=list)

    @property
    def failures(self) -> int:
        return sum(1 for row in self.rows if row.termination in ("eval_failure", "error"))

    @property
    def exit_code(self) -> int:
        return EXIT_PARTIAL if self.failures else EXIT_OK


def summarize(config: ExperimentConfig, rows: List[SummaryRow]) -> Dict[str, Any]:
    """Build the summary document with per-solver totals."""
    totals: Dict[str, Dict[str, Any]] = {}
    for solver in config.solvers:
        solver_rows = [row for row in rows if row.solver == solver.label]
        totals[solver.label] = {
            "method": solver.method,
            "runs": len(solver_rows),
            "total_iterations": sum(row.iterations for row in solver_rows),
            "failures": sum(1 for row in solver_rows if row.termination in ("eval_failure", "error")),
            "wall_time": sum(row.wall_time for row in solver_rows),
        }
    return {
        "name": config.name,
        "problem": config.problem.model_dump(by_alias=True),
        "solvers": [solver.model_dump(exclude_none=True) for solver in config.solvers],
        "rows": [row.model_dump() for row in rows],
        "totals": totals,
    }


class ExperimentService:
    """
    Service for running experiment configurations.

    Attributes:
        config: Validated experiment configuration
        out_dir: Output directory (config value unless overridden)
        threads: Maximum number of concurrently running cells
        logger: Logger instance for this service
    """

    def __init__(self, config: ExperimentConfig, out_dir: Optional[str] = None, threads: int = 1):
        self.config = config
        self.out_dir = Path(out_dir or config.outputs.directory)
        self.threads = max(1, threads)
        self.logger = get_logger(f"{__name__}.{self.__class__.__name__}")

    def _energies(self, solver_cfg: SolverConfig, record) -> Optional[np.ndarray]:
        if not self.config.outputs.energies or solver_cfg.backtracking is not None:
            return None
        solver = SolverFactory.create_solver(solver_cfg)
        if solver.energy_kind is None:
            return None
        return energy_trace(record, solver.energy_kind, solver.energy_parameter()).energies

    def run_cell(self, problem: MOProblem, solver_cfg: SolverConfig, start_id: int,
                 x0: np.ndarray) -> SummaryRow:
        """
        Run one (solver, start) cell and write its trace.

        Failures are recorded in the returned row and never raised, except
        for output errors.
        """
        try:
            record = run(problem, x0, solver_cfg, record_kkt=self.config.outputs.kkt_trace)
        except AccmoError as e:
            self.logger.warning(f"{solver_cfg.label} start {start_id} failed: {e.message}")
            return SummaryRow(solver=solver_cfg.label, method=solver_cfg.method, start_id=start_id,
                              iterations=0, k_final=0, termination="error", final_values=[],
                              error=e.message)

        final = record.final_iterate
        final_kkt = float(record.kkt_residuals[-1])
        if math.isnan(final_kkt):
            try:
                final_kkt = kkt_residual(problem, final)
            except AccmoError:
                final_kkt = None

        if "csv" in self.config.outputs.formats or "plot" in self.config.outputs.formats:
            frame = trace_frame(record, self._energies(solver_cfg, record), self.config.outputs.thinning)
            write_trace_csv(self.out_dir, solver_cfg.label, start_id, frame)

        self.logger.debug(
            f"{solver_cfg.label} start {start_id}: {record.termination.reason} "
            f"after {record.iterations} iterations"
        )
        return SummaryRow(
            solver=solver_cfg.label,
            method=solver_cfg.method,
            start_id=start_id,
            iterations=record.iterations,
            k_final=record.k_final,
            termination=record.termination.reason,
            final_values=[float(v) for v in record.final_values],
            final_kkt_residual=final_kkt,
            final_pareto_distance=problem_pareto_distance(problem, final),
            final_step_size=float(record.step_sizes[-1]),
            wall_time=record.wall_time,
            error=record.termination.message or None,
        )

    async def run(self, on_cell_done: Optional[Callable[[SummaryRow], None]] = None) -> ExperimentResult:
        """
        Run every (solver, start) cell and write the outputs.

        Args:
            on_cell_done: Called after each finished cell (progress display)

        Returns:
            ExperimentResult with rows in configuration order
        """
        problem = build_problem(self.config.problem)
        starts = resolve_starts(self.config.starts, problem.n)
        self.logger.info(
            f"Running '{self.config.name}' on {problem.name}: {len(self.config.solvers)} solver(s), "
            f"{len(starts)} start(s), {self.threads} thread(s)"
        )

        semaphore = asyncio.Semaphore(self.threads)

        async def run_one(solver_cfg: SolverConfig, start_id: int, x0: np.ndarray) -> SummaryRow:
            async with semaphore:
                row = await asyncio.to_thread(self.run_cell, problem, solver_cfg, start_id, x0)
            if on_cell_done is not None:
                on_cell_done(row)
            return row

        tasks = [
            run_one(solver_cfg, start_id, x0)
            for solver_cfg in self.config.solvers
            for start_id, x0 in enumerate(starts)
        ]
        rows = list(await asyncio.gather(*tasks))

        summary = summarize(self.config, rows)
        files: List[Path] = []
        if "json" in self.config.outputs.formats:
            files.append(write_summary_json(self.out_dir, summary))
        if "plot" in self.config.outputs.formats:
            if "json" not in self.config.outputs.formats:
                files.append(write_summary_json(self.out_dir, summary))
            files.extend(emit_plot_data(self.out_dir).values())

        result = ExperimentResult(rows=rows, summary=summary, out_dir=self.out_dir, files=files)
        if result.failures:
            self.logger.warning(f"{result.failures} cell(s) failed")
        return result


def run_experiment(config: ExperimentConfig, out_dir: Optional[str] = None, threads: int = 1) -> ExperimentResult:
    """Synchronous wrapper around ExperimentService.run."""
    return asyncio.run(ExperimentService(config, out_dir, threads).run())
