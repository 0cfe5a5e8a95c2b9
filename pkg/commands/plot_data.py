"""
Plot-data command for accmo.
"""
from core.constants import EXIT_OK
from utils.output import emit_plot_data
from utils.ui import print_key_values, success


def plot_data_command(out_dir: str) -> int:
    """
    Regenerate tidy figure CSVs from a finished experiment directory.

    Returns:
        0 on success

    Raises:
        OutputError: No summary in ``out_dir`` or the files cannot be written
    """
    written = emit_plot_data(out_dir)
    print_key_values("Plot data", {figure: str(path) for figure, path in written.items()})
    success(f"Wrote {len(written)} bundle(s)")
    return EXIT_OK
