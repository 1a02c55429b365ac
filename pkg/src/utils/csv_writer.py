"""
CSV emission for sweep results.
A '#'-prefixed header block echoes the resolved run; the table has columns axis,value,flags.
"""

import logging
from pathlib import Path
from typing import List, Optional, Union

import pandas as pd

from ..models.results import Flag
from ..models.sweep import SweepResult, SweepRow
from .errors import OutputError

logger = logging.getLogger(__name__)

FLAG_SEPARATOR = ";"


def result_frame(result: SweepResult) -> pd.DataFrame:
    """Rows of a SweepResult as a DataFrame with string flags."""
    return pd.DataFrame({
        "axis": [row.axis for row in result.rows],
        "value": [row.value for row in result.rows],
        "flags": [FLAG_SEPARATOR.join(flag.value for flag in row.flags) for row in result.rows],
    })


def header_lines(result: SweepResult, preset: Optional[str] = None) -> str:
    lines = []
    if preset:
        lines.append(f"# preset: {preset}")
    lines.extend(f"# {key}: {value}" for key, value in result.header.items())
    lines.extend(f"# reproduction-choice: {choice}" for choice in result.reproduction_choices)
    return "\n".join(lines) + "\n"


def write_sweep_csv(result: SweepResult, path: Union[str, Path], preset: Optional[str] = None) -> Path:
    """
    Write a sweep result as UTF-8 CSV with LF line endings.

    Args:
        result: Sweep to write
        path: Destination file
        preset: Preset name echoed in the header

    Returns:
        The written path

    Raises:
        OutputError: the destination cannot be written
    """
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(header_lines(result, preset))
            result_frame(result).to_csv(f, index=False, lineterminator="\n", na_rep="nan")
    except OSError as e:
        raise OutputError(f"cannot write CSV: {e.strerror or e}", path) from e
    logger.info(f"Wrote {len(result.rows)} rows to {path}")
    return path


def emit(result: SweepResult, path: Union[str, Path], emit_plot: bool = False,
         preset: Optional[str] = None) -> List[Path]:
    """
    Write the CSV and, when asked, an SVG plot with the same stem.

    Returns:
        Paths written, CSV first
    """
    written = [write_sweep_csv(result, path, preset)]
    if emit_plot:
        from .plotting import write_sweep_plot
        written.append(write_sweep_plot(result, Path(path).with_suffix(".svg")))
    return written


def read_sweep_csv(path: Union[str, Path]) -> pd.DataFrame:
    """Read a CSV written by write_sweep_csv back into a DataFrame (flags as strings)."""
    try:
        return pd.read_csv(
            path,
            comment="#",
            float_precision="round_trip",
            keep_default_na=False,
            na_values={"axis": ["nan"], "value": ["nan"]},
            dtype={"flags": str},
        )
    except OSError as e:
        raise OutputError(f"cannot read CSV: {e.strerror or e}", path) from e


def rows_from_frame(frame: pd.DataFrame) -> List[SweepRow]:
    """Rebuild SweepRows from a DataFrame produced by read_sweep_csv."""
    rows = []
    for axis, value, flags in zip(frame["axis"], frame["value"], frame["flags"]):
        parsed = tuple(Flag(flag) for flag in str(flags).split(FLAG_SEPARATOR) if flag)
        rows.append(SweepRow(axis=float(axis), value=float(value), flags=parsed))
    return rows
