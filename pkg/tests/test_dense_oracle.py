"""Tests for the dense-diagonalisation oracle and its agreement with the block formulas."""

import numpy as np
import pytest

from src.models.params import ModelParams
from src.solvers.dense_oracle import (
    build_hamiltonian,
    dense_oracle_spectrum,
    down_index,
    oracle_ground_vector,
)
from src.solvers.ground_state_solver import ground_state_vector
from src.solvers.spectrum_solver import analytic_spectrum
from src.utils.errors import ResourceLimitError


def random_params(rng: np.random.Generator) -> ModelParams:
    omega = rng.uniform(0.1, 2.0)
    return ModelParams(
        omega0=omega * rng.uniform(1.0, 1e3),
        omega=omega,
        A=rng.uniform(0.0, 2.0) * omega,
        delta=rng.uniform(-2.0, 2.0) * omega,
        N=int(rng.integers(2, 65)),
    )


class TestOracleSpectrum:
    """Tests for the dense spectrum."""

    def test_uncoupled_single_spin(self):
        result = dense_oracle_spectrum(ModelParams(omega0=1, omega=1, A=0, delta=0, N=1))
        np.testing.assert_allclose(result.energies, [-1, 0, 0, 1], atol=1e-14)
        assert result.vectors is None

    def test_hamiltonian_is_symmetric(self):
        hamiltonian = build_hamiltonian(ModelParams(omega0=10, omega=0.5, A=0.3, delta=-0.2, N=9))
        assert hamiltonian.shape == (20, 20)
        np.testing.assert_array_equal(hamiltonian, hamiltonian.T)

    def test_matches_blocks_at_N10(self):
        params = ModelParams(omega0=100, omega=0.5, A=0.5, delta=0.1, N=10)
        oracle = dense_oracle_spectrum(params).energies
        scale = np.max(np.abs(oracle))
        np.testing.assert_allclose(analytic_spectrum(params), oracle, rtol=0, atol=1e-10 * scale)

    def test_random_draws_match_blocks(self):
        rng = np.random.default_rng(7)
        for _ in range(200):
            params = random_params(rng)
            oracle = dense_oracle_spectrum(params).energies
            scale = np.max(np.abs(oracle))
            np.testing.assert_allclose(analytic_spectrum(params), oracle, rtol=0, atol=1e-10 * scale,
                                       err_msg=str(params))

    def test_coupling_sign_flip(self):
        params = ModelParams(omega0=20, omega=0.5, A=0.4, delta=0.1, N=12)
        plus = dense_oracle_spectrum(params).energies
        minus = dense_oracle_spectrum(params, coupling=-params.A).energies
        np.testing.assert_allclose(plus, minus, rtol=0, atol=1e-10 * np.max(np.abs(plus)))

    def test_cap_enforced(self):
        with pytest.raises(ResourceLimitError):
            dense_oracle_spectrum(ModelParams(omega0=1, omega=1, N=10), cap=5)


class TestOracleGroundVector:
    """Tests for oracle eigenvectors."""

    def test_normal_phase_ground_state_is_down_zero(self):
        params = ModelParams(omega0=100, omega=0.5, delta=0.1, N=20).with_g_tilde(0.5)
        vector = oracle_ground_vector(params)
        assert abs(vector[down_index(params, 0)]) >= 1 - 1e-8

    @pytest.mark.parametrize("g_tilde", [0.5, 1.3, 2.0])
    def test_matches_embedded_exact_state(self, g_tilde):
        params = ModelParams(omega0=100, omega=0.5, delta=-0.1, N=30).with_g_tilde(g_tilde)
        overlap = abs(np.dot(oracle_ground_vector(params), ground_state_vector(params)))
        assert overlap == pytest.approx(1, abs=1e-10)
