"""
User interface utilities for accmo.

This module provides rich terminal output: status messages, progress
bars for experiment batches and summary tables.
"""
from typing import Any, Dict, Iterable

from rich.console import Console
from rich.panel import Panel
from rich.progress import BarColumn, Progress, SpinnerColumn, TaskProgressColumn, TextColumn
from rich.table import Table

console = Console()
error_console = Console(stderr=True)

METHOD_STYLES = {
    "SD": "bold white",
    "Inertial": "bold magenta",
    "AccG": "bold green",
    "AccGNoQ": "bold cyan",
    "AccGSwitch": "bold blue",
    "NesterovRef": "bold yellow",
}


def success(message: str) -> None:
    """
    Display success message with green checkmark.

    Args:
        message: Success message to display
    """
    console.print(f"✓ {message}", style="bold green")


def error(message: str) -> None:
    """
    Display error message on stderr.

    Args:
        message: Error message to display
    """
    error_console.print(f"✗ {message}", style="bold red")


def info(message: str) -> None:
    """
    Display info message with blue info icon.

    Args:
        message: Information message to display
    """
    console.print(f"ℹ {message}", style="bold blue")


def warning(message: str) -> None:
    """
    Display warning message with yellow warning icon.

    Args:
        message: Warning message to display
    """
    console.print(f"⚠ {message}", style="bold yellow")


def header(title: str) -> None:
    """Display a boxed command title."""
    console.print(Panel(title, style="bold cyan"))


def progress_bar() -> Progress:
    """
    Create progress bar for experiment batches.

    Returns:
        Rich Progress instance
    """
    return Progress(
        SpinnerColumn(),
        TextColumn("[progress.description]{task.description}"),
        BarColumn(),
        TaskProgressColumn(),
        console=console,
        transient=True,
    )


def get_method_style(method: str) -> str:
    """Get method-specific styling"""
    return METHOD_STYLES.get(method, "bold white")


def print_summary_table(rows: Iterable[Dict[str, Any]], totals: Dict[str, Dict[str, Any]]) -> None:
    """Print per-method totals of an experiment summary"""
    table = Table(title="Experiment totals")
    table.add_column("method")
    table.add_column("runs", justify="right")
    table.add_column("total iterations", justify="right")
    table.add_column("failures", justify="right")
    table.add_column("wall time [s]", justify="right")

    for name, total in totals.items():
        table.add_row(
            f"[{get_method_style(total.get('method', ''))}]{name}",
            str(total["runs"]),
            str(total["total_iterations"]),
            str(total["failures"]),
            f"{total['wall_time']:.2f}",
        )
    console.print(table)

    failed = [row for row in rows if row.get("termination") in ("eval_failure", "error")]
    if failed:
        warning(f"{len(failed)} run(s) ended with a failure")


def print_key_values(title: str, values: Dict[str, Any]) -> None:
    """Print a two-column table of labels and values"""
    table = Table(title=title, show_header=False)
    table.add_column("key", style="bold")
    table.add_column("value")
    for key, value in values.items():
        table.add_row(str(key), str(value))
    console.print(table)
