"""
Minimal SVG line plots of sweep results.
Output is reproducible: no timestamp metadata and a fixed SVG id salt.
"""

import logging
from pathlib import Path
from typing import Union

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from ..models.results import Flag
from ..models.sweep import SweepResult
from .errors import OutputError

logger = logging.getLogger(__name__)

plt.rcParams["svg.hashsalt"] = "spinqpt"


def write_sweep_plot(result: SweepResult, path: Union[str, Path]) -> Path:
    """
    Plot value against axis; flagged sector crossings are drawn as markers.

    Raises:
        OutputError: the figure cannot be written
    """
    path = Path(path)
    axis = np.array([row.axis for row in result.rows])
    values = np.array([row.value for row in result.rows])
    crossing = np.array([Flag.SECTOR_CROSSING in row.flags for row in result.rows], dtype=bool)

    fig, ax = plt.subplots(figsize=(6, 4))
    try:
        smooth = np.where(crossing, np.nan, values)
        ax.plot(axis, smooth, lw=1.2)
        if crossing.any():
            ax.plot(axis[crossing], values[crossing], "x", ms=4)
        ax.set_xlabel(result.header.get("axis", "axis"))
        ax.set_ylabel(result.header.get("quantity", "value"))
        ax.set_title(result.name)
        fig.tight_layout()
        path.parent.mkdir(parents=True, exist_ok=True)
        fig.savefig(path, format="svg", metadata={"Date": None})
    except OSError as e:
        raise OutputError(f"cannot write plot: {e.strerror or e}", path) from e
    finally:
        plt.close(fig)
    logger.info(f"Wrote plot {path}")
    return path
