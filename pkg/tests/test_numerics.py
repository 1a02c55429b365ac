"""Tests for curve diagnostics and the ordered parallel map."""

import math

import numpy as np
import pytest

from src.utils.numerics import count_peaks, fill_undefined, full_width_half_max, largest_jump
from src.utils.parallel import ordered_map


class TestFillUndefined:
    """Tests for NaN interpolation."""

    def test_interpolates_on_grid(self):
        filled = fill_undefined([0.0, float("nan"), 4.0], grid=[0.0, 1.0, 4.0])
        np.testing.assert_allclose(filled, [0.0, 1.0, 4.0])

    def test_all_defined_is_copied(self):
        values = np.array([1.0, 2.0])
        filled = fill_undefined(values)
        filled[0] = 5.0
        assert values[0] == 1.0

    def test_all_undefined_left_alone(self):
        assert np.isnan(fill_undefined([float("nan")] * 3)).all()


class TestPeaks:
    """Tests for peak counting and widths."""

    def test_two_gaussians(self):
        grid = np.linspace(0, 10, 1001)
        values = np.exp(-(grid - 3) ** 2) + 2 * np.exp(-(grid - 7) ** 2)
        count, peaks = count_peaks(values)
        assert count == 2
        np.testing.assert_allclose(grid[peaks], [3, 7], atol=0.02)

    def test_small_ripples_ignored(self):
        grid = np.linspace(0, 10, 1001)
        values = np.exp(-(grid - 5) ** 2) + 0.01 * np.sin(20 * grid)
        assert count_peaks(values)[0] == 1

    def test_undefined_peak_top_is_bridged(self):
        grid = np.linspace(-1, 1, 201)
        values = 1 - grid ** 2
        values[100] = float("nan")
        count, peaks = count_peaks(values, grid=grid)
        assert count == 1

    def test_flat_curve_has_no_peaks(self):
        count, peaks = count_peaks(np.zeros(10))
        assert count == 0
        assert peaks.size == 0

    def test_gaussian_width(self):
        grid = np.linspace(-5, 5, 10001)
        values = np.exp(-grid ** 2 / 2)
        assert full_width_half_max(grid, values) == pytest.approx(2 * math.sqrt(2 * math.log(2)), rel=1e-3)

    def test_width_without_peak(self):
        assert math.isnan(full_width_half_max([0, 1, 2], [0, 1, 2]))


class TestLargestJump:
    """Tests for jump location."""

    def test_step(self):
        grid = np.linspace(0, 1, 11)
        values = np.where(grid < 0.55, 0.0, 3.0)
        location, size = largest_jump(grid, values)
        assert location == pytest.approx(0.55)
        assert size == 3.0


class TestOrderedMap:
    """Tests for worker-independent evaluation."""

    @pytest.mark.parametrize("workers", [1, 2, 8])
    def test_preserves_order(self, workers):
        assert ordered_map(lambda x: x * x, range(20), workers) == [x * x for x in range(20)]

    def test_empty(self):
        assert ordered_map(lambda x: x, [], 4) == []
