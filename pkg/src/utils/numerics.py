"""
Curve diagnostics shared by tests, presets and the self-check: peak counting, widths and jumps.
"""

import logging
from typing import Optional, Sequence, Tuple

import numpy as np
from scipy.signal import find_peaks, peak_widths

logger = logging.getLogger(__name__)


def fill_undefined(values: Sequence[float], grid: Optional[Sequence[float]] = None) -> np.ndarray:
    """Replace NaN points by linear interpolation between their defined neighbours."""
    values = np.asarray(values, dtype=float)
    axis = np.arange(values.size, dtype=float) if grid is None else np.asarray(grid, dtype=float)
    defined = np.isfinite(values)
    if defined.all() or not defined.any():
        return values.copy()
    return np.interp(axis, axis[defined], values[defined])


def count_peaks(values: Sequence[float], relative_prominence: float = 0.05,
                grid: Optional[Sequence[float]] = None) -> Tuple[int, np.ndarray]:
    """
    Count peaks whose prominence exceeds a fraction of the curve maximum.

    Args:
        values: Sampled curve, NaN allowed
        relative_prominence: Minimum prominence as a fraction of max(values)
        grid: Sample positions used to interpolate undefined points

    Returns:
        (number of peaks, their indices)
    """
    filled = fill_undefined(values, grid)
    top = np.nanmax(filled) if filled.size else 0.0
    if not top > 0:
        return 0, np.array([], dtype=int)
    peaks, _ = find_peaks(filled, prominence=relative_prominence * top)
    return len(peaks), peaks


def full_width_half_max(grid: Sequence[float], values: Sequence[float]) -> float:
    """Width of the highest peak at half its prominence, in grid units."""
    grid = np.asarray(grid, dtype=float)
    filled = fill_undefined(values, grid)
    peaks, _ = find_peaks(filled)
    if peaks.size == 0:
        return float("nan")
    highest = peaks[np.argmax(filled[peaks])]
    _, _, left, right = peak_widths(filled, [highest], rel_height=0.5)
    return float(np.interp(right[0], np.arange(grid.size), grid) - np.interp(left[0], np.arange(grid.size), grid))


def largest_jump(grid: Sequence[float], values: Sequence[float]) -> Tuple[float, float]:
    """
    Largest absolute difference between successive samples.

    Returns:
        (midpoint of the two grid points, size of the jump)
    """
    grid = np.asarray(grid, dtype=float)
    steps = np.abs(np.diff(np.asarray(values, dtype=float)))
    idx = int(np.nanargmax(steps))
    return 0.5 * (grid[idx] + grid[idx + 1]), float(steps[idx])
