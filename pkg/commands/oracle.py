"""
Oracle suite command for accmo.

Compares the simplex least-squares solver with the brute-force grid
oracle on seeded random instances and checks the projection certificate
of every solve.
"""
import time
from collections import defaultdict
from typing import Dict, List

from rich.table import Table

from core.constants import EXIT_OK, EXIT_PARTIAL, ORACLE_GRID_RESOLUTION
from core.logging import get_logger
from subproblems.hull import kkt_margin, solve_hull_least_squares
from subproblems.oracle import brute_force_simplex_oracle, random_hull_problems
from utils.ui import console, progress_bar, success, warning

logger = get_logger(__name__)


def oracle_command(instances: int = 500, seed: int = 0, grid: float = ORACLE_GRID_RESOLUTION,
                   tol: float = 1e-8) -> int:
    """
    Run the oracle suite.

    Args:
        instances: Number of random instances (m in {2, 3}, n in {2, 5, 20})
        seed: Instance seed
        grid: Oracle grid resolution
        tol: Allowed objective gap between solver and oracle

    Returns:
        0 if every instance agrees, 2 otherwise
    """
    gaps: Dict[tuple, List[float]] = defaultdict(list)
    failures = 0
    started = time.perf_counter()

    with progress_bar() as progress:
        task = progress.add_task("Solving instances", total=instances)
        for index, hp in enumerate(random_hull_problems(seed, instances)):
            solution = solve_hull_least_squares(hp)
            reference = brute_force_simplex_oracle(hp, grid)
            gap = solution.objective - reference
            certificate = kkt_margin(hp.columns, hp.target, solution.weights.theta)
            gaps[(hp.m, hp.n)].append(gap)
            if gap > tol or certificate < -tol:
                failures += 1
                logger.warning(f"Instance {index} (m={hp.m}, n={hp.n}): gap {gap:.3e}, certificate {certificate:.3e}")
            progress.advance(task)

    table = Table(title="Solver minus oracle objective")
    table.add_column("m", justify="right")
    table.add_column("n", justify="right")
    table.add_column("instances", justify="right")
    table.add_column("max gap", justify="right")
    for (m, n), values in sorted(gaps.items()):
        table.add_row(str(m), str(n), str(len(values)), f"{max(values):.2e}")
    console.print(table)

    elapsed = time.perf_counter() - started
    if failures:
        warning(f"{failures} of {instances} instance(s) exceed tolerance {tol:g} ({elapsed:.1f}s)")
        return EXIT_PARTIAL
    success(f"All {instances} instances agree within {tol:g} ({elapsed:.1f}s)")
    return EXIT_OK
