"""Tests for the closed-form block spectrum."""

import math

import numpy as np
import pytest

from src.models.params import ModelParams, block_index
from src.models.results import EdgeLabel
from src.solvers.spectrum_solver import (
    analytic_spectrum,
    block_eigensystem,
    block_energies,
    block_matrix,
    edge_state_energies,
    lower_branch,
    lower_branch_slope,
)
from src.utils.errors import DomainError


@pytest.fixture
def coupled():
    return ModelParams(omega0=100, omega=0.5, A=0.2, delta=0.1, N=20)


class TestBlockMatrix:
    """Tests for the 2x2 sector matrices."""

    def test_uncoupled_block(self):
        matrix = block_matrix(ModelParams(omega0=1, omega=1, A=0, delta=0, N=4), 1)
        np.testing.assert_allclose(np.diag(matrix), [-1.5, -1.5])
        assert matrix[0, 1] == 0
        assert matrix[1, 0] == 0

    def test_off_diagonal(self, coupled):
        matrix = block_matrix(coupled, 3)
        assert matrix[0, 1] == pytest.approx(0.2 * math.sqrt(54), rel=1e-15)
        assert matrix[0, 1] == matrix[1, 0]

    def test_top_sector_couples_with_lambda(self, coupled):
        assert block_matrix(coupled, coupled.N)[0, 1] == pytest.approx(0.2 * math.sqrt(20), rel=1e-15)

    def test_accepts_block_index(self, coupled):
        np.testing.assert_array_equal(block_matrix(coupled, block_index(coupled, 7)), block_matrix(coupled, 7))

    @pytest.mark.parametrize("n", [0, 21])
    def test_out_of_range(self, coupled, n):
        with pytest.raises(DomainError):
            block_matrix(coupled, n)


class TestBlockEigensystem:
    """Tests for closed-form eigenvalues and eigenvectors."""

    def test_degenerate_block(self):
        spectrum = block_eigensystem(ModelParams(omega0=1, omega=1, A=0, delta=0, N=4), 1)
        assert spectrum.E_minus == pytest.approx(-1.5)
        assert spectrum.E_plus == pytest.approx(-1.5)
        # Fully degenerate blocks keep (|up, n-1>, |down, n>) order
        assert (spectrum.c_up_minus, spectrum.c_down_minus) == (1.0, 0.0)
        assert (spectrum.c_up_plus, spectrum.c_down_plus) == (0.0, 1.0)

    def test_uncoupled_block_orders_by_energy(self):
        params = ModelParams(omega0=100, omega=0.5, A=0, delta=0.1, N=10)
        spectrum = block_eigensystem(params, 4)
        matrix = block_matrix(params, 4)
        # |down, n> lies far below |up, n-1> for large omega0
        assert (spectrum.c_up_minus, spectrum.c_down_minus) == (0.0, 1.0)
        assert spectrum.E_minus == pytest.approx(matrix[1, 1], rel=1e-14)

    @pytest.mark.parametrize("n", range(1, 21))
    def test_matches_matrix_eigenvalues(self, coupled, n):
        spectrum = block_eigensystem(coupled, n)
        expected = np.linalg.eigvalsh(block_matrix(coupled, n))
        scale = np.max(np.abs(expected))
        assert spectrum.E_minus == pytest.approx(expected[0], rel=1e-12, abs=1e-12 * scale)
        assert spectrum.E_plus == pytest.approx(expected[1], rel=1e-12, abs=1e-12 * scale)

    @pytest.mark.parametrize("n", [1, 5, 10, 20])
    def test_eigenvectors(self, coupled, n):
        spectrum = block_eigensystem(coupled, n)
        matrix = block_matrix(coupled, n)
        minus = np.array([spectrum.c_up_minus, spectrum.c_down_minus])
        plus = np.array([spectrum.c_up_plus, spectrum.c_down_plus])

        assert minus @ minus == pytest.approx(1, abs=1e-12)
        assert plus @ plus == pytest.approx(1, abs=1e-12)
        assert minus @ plus == pytest.approx(0, abs=1e-12)
        np.testing.assert_allclose(matrix @ minus, spectrum.E_minus * minus, atol=1e-10)
        np.testing.assert_allclose(matrix @ plus, spectrum.E_plus * plus, atol=1e-10)

    def test_vectorised_energies_match(self, coupled):
        e_minus, e_plus = block_energies(coupled, np.arange(1, 21))
        for n in range(1, 21):
            spectrum = block_eigensystem(coupled, n)
            assert e_minus[n - 1] == pytest.approx(spectrum.E_minus, rel=1e-14)
            assert e_plus[n - 1] == pytest.approx(spectrum.E_plus, rel=1e-14)


class TestEdgeStates:
    """Tests for the unpaired states."""

    def test_down_zero_energy(self):
        down_zero, _ = edge_state_energies(ModelParams(omega0=100, omega=0.5, delta=0.1, N=10))
        assert down_zero.label == EdgeLabel.DOWN_ZERO
        assert down_zero.energy == pytest.approx(-52)

    def test_symmetric_case(self):
        down_zero, up_full = edge_state_energies(ModelParams(omega0=1, omega=1, delta=0, N=2))
        assert down_zero.energy == pytest.approx(-1.5)
        assert up_full.energy == pytest.approx(1.5)
        assert up_full.label == EdgeLabel.UP_FULL

    @pytest.mark.parametrize("N", [1, 7, 400])
    def test_resonant_delta_removes_bath_term(self, N):
        down_zero, _ = edge_state_energies(ModelParams(omega0=3, omega=0.5, delta=0.5, N=N))
        assert down_zero.energy == pytest.approx(-1.5)


class TestAnalyticSpectrum:
    """Tests for the assembled spectrum and the continued lower branch."""

    def test_size_and_order(self, coupled):
        energies = analytic_spectrum(coupled)
        assert energies.shape == (2 * (coupled.N + 1),)
        assert np.all(np.diff(energies) >= 0)

    def test_lower_branch_at_integers(self, coupled):
        n = np.arange(1, coupled.N + 1)
        e_minus, _ = block_energies(coupled, n)
        np.testing.assert_allclose(lower_branch(coupled, n.astype(float)), e_minus, rtol=1e-13)

    @pytest.mark.parametrize("x", [0.7, 5.3, 12.0, 19.5])
    def test_slope_matches_difference(self, coupled, x):
        h = 1e-5
        numeric = (lower_branch(coupled, x + h) - lower_branch(coupled, x - h)) / (2 * h)
        assert lower_branch_slope(coupled, x) == pytest.approx(numeric, rel=1e-6, abs=1e-8)
