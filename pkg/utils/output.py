"""
Trace, summary and plot-data writers.

Traces are one CSV per (solver, start) with the columns

    k, f_1..f_m, step_size, kkt_residual, [energy_1..energy_m], [x_1..x_n]

(coordinates only for n <= TRACE_COORDINATE_MAX_N). Floats are written
with 17 significant digits so that re-running a config reproduces every
file byte for byte. The summary is a single JSON document.
"""
import json
import math
from pathlib import Path
from typing import Any, Dict, List, Optional

import numpy as np
import pandas as pd

from core.constants import CSV_FLOAT_FORMAT, PLOT_DATA_DIRNAME, SUMMARY_FILENAME, TRACE_COORDINATE_MAX_N, TRACE_DIRNAME
from core.logging import get_logger
from solvers.base import RunRecord
from .errors import OutputError, handle_io_error

logger = get_logger(__name__)

PLOT_COLUMNS = ["figure_id", "series", "k", "value"]
FLOAT_FORMAT = f"%{CSV_FLOAT_FORMAT}"


def trace_filename(label: str, start_id: int) -> str:
    safe = "".join(c if c.isalnum() or c in "-_." else "_" for c in label)
    return f"{safe}__start{start_id:04d}.csv"


def trace_frame(run: RunRecord, energies: Optional[np.ndarray] = None, thinning: int = 1) -> pd.DataFrame:
    """
    Tabulate a run.

    Args:
        run: Run record
        energies: E_{i,k} of shape (k_final, m), or None to omit the columns
        thinning: Keep every ``thinning``-th row; the last row is always kept

    Returns:
        DataFrame with one row per kept iteration
    """
    k = np.arange(1, run.k_final + 1)
    columns: Dict[str, Any] = {"k": k}
    for i in range(run.m):
        columns[f"f_{i + 1}"] = run.values[:, i]
    columns["step_size"] = run.step_sizes
    columns["kkt_residual"] = run.kkt_residuals
    if energies is not None:
        for i in range(run.m):
            columns[f"energy_{i + 1}"] = energies[:, i]
    if run.n <= TRACE_COORDINATE_MAX_N and run.dense:
        iterates = np.array(run.iterates)
        for j in range(run.n):
            columns[f"x_{j + 1}"] = iterates[:, j]

    frame = pd.DataFrame(columns)
    if thinning > 1:
        keep = ((k - 1) % thinning == 0) | (k == run.k_final)
        frame = frame[keep].reset_index(drop=True)
    return frame


def ensure_directory(path: Path) -> Path:
    try:
        path.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        raise handle_io_error(str(path), e) from e
    return path


def write_csv(frame: pd.DataFrame, path: Path) -> Path:
    try:
        frame.to_csv(path, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
    except OSError as e:
        raise handle_io_error(str(path), e) from e
    return path


def write_trace_csv(out_dir: Path, label: str, start_id: int, frame: pd.DataFrame) -> Path:
    """Write one trace under ``<out_dir>/traces``."""
    directory = ensure_directory(Path(out_dir) / TRACE_DIRNAME)
    return write_csv(frame, directory / trace_filename(label, start_id))


def _finite_or_null(value: Any) -> Any:
    if isinstance(value, float) and not math.isfinite(value):
        return None
    if isinstance(value, dict):
        return {key: _finite_or_null(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_finite_or_null(item) for item in value]
    return value


def write_summary_json(out_dir: Path, summary: Dict[str, Any]) -> Path:
    """
    Write ``summary.json`` with sorted keys and a trailing newline.

    NaN and infinite metrics are written as null so the file stays valid JSON.
    """
    path = ensure_directory(Path(out_dir)) / SUMMARY_FILENAME
    try:
        with open(path, "w") as f:
            json.dump(_finite_or_null(summary), f, indent=2, sort_keys=True, allow_nan=False)
            f.write("\n")
    except OSError as e:
        raise handle_io_error(str(path), e) from e
    logger.info(f"Summary written to {path}")
    return path


def load_summary(out_dir: Path) -> Dict[str, Any]:
    path = Path(out_dir) / SUMMARY_FILENAME
    if not path.exists():
        raise OutputError(
            f"No summary found in {out_dir}",
            ["Run 'accmo run <config>' first", "Pass the directory given to --out"],
        )
    with open(path) as f:
        return json.load(f)


def _tidy(frame: pd.DataFrame, figure_id: str, prefix: str, columns: List[str]) -> pd.DataFrame:
    parts = []
    for column in columns:
        parts.append(pd.DataFrame({
            "figure_id": figure_id,
            "series": f"{prefix}/{column}",
            "k": frame["k"].to_numpy(),
            "value": frame[column].to_numpy(),
        }))
    return pd.concat(parts, ignore_index=True) if parts else pd.DataFrame(columns=PLOT_COLUMNS)


def emit_plot_data(out_dir: Path) -> Dict[str, Path]:
    """
    Build tidy figure bundles from a finished experiment directory.

    Bundles, all with columns (figure_id, series, k, value):
        iterate_paths: x_j along every run (only for traced coordinates)
        value_curves: f_i along every run
        kkt_curves: KKT residual along every run
        image_scatter: final f_i of every run, k = k_final

    Returns:
        Mapping figure_id -> written CSV path
    """
    out_dir = Path(out_dir)
    summary = load_summary(out_dir)
    bundles: Dict[str, List[pd.DataFrame]] = {
        "iterate_paths": [], "value_curves": [], "kkt_curves": [], "image_scatter": [],
    }

    for row in summary.get("rows", []):
        prefix = f"{row['solver']}/start{row['start_id']:04d}"
        trace_path = out_dir / TRACE_DIRNAME / trace_filename(row["solver"], row["start_id"])
        if trace_path.exists():
            frame = pd.read_csv(trace_path)
            value_columns = [c for c in frame.columns if c.startswith("f_")]
            coordinate_columns = [c for c in frame.columns if c.startswith("x_")]
            bundles["value_curves"].append(_tidy(frame, "value_curves", prefix, value_columns))
            bundles["kkt_curves"].append(_tidy(frame, "kkt_curves", prefix, ["kkt_residual"]))
            if coordinate_columns:
                bundles["iterate_paths"].append(_tidy(frame, "iterate_paths", prefix, coordinate_columns))
        for i, value in enumerate(row.get("final_values", [])):
            bundles["image_scatter"].append(pd.DataFrame({
                "figure_id": ["image_scatter"],
                "series": [f"{prefix}/f_{i + 1}"],
                "k": [row["k_final"]],
                "value": [value],
            }))

    directory = ensure_directory(out_dir / PLOT_DATA_DIRNAME)
    written = {}
    for figure_id, parts in bundles.items():
        frame = pd.concat(parts, ignore_index=True) if parts else pd.DataFrame(columns=PLOT_COLUMNS)
        written[figure_id] = write_csv(frame[PLOT_COLUMNS], directory / f"{figure_id}.csv")
    logger.info(f"Plot data written to {directory}")
    return written
