"""Tests for model parameters, derived quantities and probe validation."""

import math
from fractions import Fraction

import pytest
from pydantic import ValidationError

from src.models.params import ModelParams, block_index, derive
from src.models.probe import InitialState, WeightKind
from src.utils.errors import DomainError, UndefinedRegimeError


class TestDerive:
    """Tests for derived frequencies and couplings."""

    def test_resonant_bath_delta_zero(self):
        derived = derive(ModelParams(omega0=100, omega=0.5, A=0.3, delta=0.0, N=200))
        assert derived.omega0_tilde == 100
        assert derived.omega_tilde == 0.5
        assert derived.lambda_c == pytest.approx(math.sqrt(50), rel=1e-15)
        assert derived.eta == 200

    def test_negative_delta_raises_omega0_tilde(self):
        derived = derive(ModelParams(omega0=100, omega=0.5, delta=-0.25, N=200))
        assert derived.omega0_tilde == pytest.approx(150)
        assert derived.omega_tilde == pytest.approx(0.75)
        assert derived.lambda_c == pytest.approx(10.6066, abs=1e-4)

    def test_undefined_regime_is_marked_not_raised(self):
        derived = derive(ModelParams(omega0=1, omega=1, delta=1, N=1))
        assert derived.omega_tilde == 0
        assert derived.g_tilde is None
        assert derived.lambda_c is None
        assert not derived.regime_defined

    @pytest.mark.parametrize("A,N", [(0.1, 1), (0.37, 20), (2.0, 1001)])
    def test_lambda_and_g_tilde_identity(self, A, N):
        params = ModelParams(omega0=100, omega=0.5, A=A, delta=0.1 if N < 1000 else 0.0, N=N)
        derived = derive(params)
        assert derived.lam == A * math.sqrt(N)
        assert derived.g_tilde * derived.lambda_c == pytest.approx(derived.lam, rel=1e-14)
        assert derived.g == pytest.approx(derived.lam / math.sqrt(100 * 0.5), rel=1e-15)

    def test_j_is_exact_for_odd_N(self):
        assert ModelParams(omega0=1, omega=1, N=3).j == Fraction(3, 2)


class TestCouplingBackSolve:
    """Tests for ModelParams.with_g_tilde."""

    @pytest.mark.parametrize("g_tilde", [0.0, 0.5, 1.0, 1.7])
    def test_round_trip(self, g_tilde):
        params = ModelParams(omega0=100, omega=0.5, delta=-0.1, N=200).with_g_tilde(g_tilde)
        assert derive(params).g_tilde == pytest.approx(g_tilde, rel=1e-14, abs=1e-15)

    def test_negative_g_tilde_rejected(self):
        with pytest.raises(DomainError):
            ModelParams(omega0=100, omega=0.5, N=10).with_g_tilde(-0.1)

    def test_undefined_regime_rejected(self):
        # omega0_tilde = 50 - 0.4*200 < 0
        with pytest.raises(UndefinedRegimeError):
            ModelParams(omega0=50, omega=0.5, delta=0.4, N=200).with_g_tilde(1.0)

    def test_inverted_regime_uses_absolute_product(self):
        template = ModelParams(omega0=1000, omega=0.1, delta=0.15, N=200)
        params = template.with_g_tilde(1.2, allow_inverted=True)
        assert params.A == pytest.approx(1.2 * math.sqrt(0.05 * 970 / 200), rel=1e-12)
        with pytest.raises(UndefinedRegimeError):
            template.with_g_tilde(1.2)


class TestValidation:
    """Tests for input invariants."""

    @pytest.mark.parametrize("fields", [
        {"omega0": 0, "omega": 1, "N": 1},
        {"omega0": 1, "omega": -1, "N": 1},
        {"omega0": 1, "omega": 1, "N": 0},
        {"omega0": 1, "omega": 1, "A": -0.1, "N": 1},
        {"omega0": 1, "omega": 1, "N": 1, "gamma": 2},
    ])
    def test_invalid_params_rejected(self, fields):
        with pytest.raises(ValidationError):
            ModelParams(**fields)

    def test_params_are_frozen(self):
        params = ModelParams(omega0=1, omega=1, N=1)
        with pytest.raises(ValidationError):
            params.A = 2.0


class TestBlockIndex:
    """Tests for U(1) sector labels."""

    def test_offsets(self):
        params = ModelParams(omega0=1, omega=1, N=5)
        block = block_index(params, 2)
        assert block.m == Fraction(2 - 1) - Fraction(5, 2)
        assert block.two_m_plus_one == 2 * 2 - 5 - 1
        assert block.k_n == (5 - 2 + 1) * 2

    def test_top_sector_k_equals_N(self):
        params = ModelParams(omega0=1, omega=1, N=20)
        assert block_index(params, 20).k_n == 20

    @pytest.mark.parametrize("n", [0, 21, -3, 2.5])
    def test_out_of_range(self, n):
        with pytest.raises(DomainError):
            block_index(ModelParams(omega0=1, omega=1, N=20), n)


class TestInitialState:
    """Tests for probe validation."""

    def test_defaults(self):
        state = InitialState()
        assert abs(state.b_up) ** 2 + abs(state.b_down) ** 2 == pytest.approx(1, abs=1e-12)
        assert state.alpha_probe == 2.0
        assert state.weight_kind == WeightKind.BOSONIC_COHERENT
        assert state.truncation is None

    def test_complex_amplitudes(self):
        state = InitialState(b_up=2 ** -0.5, b_down=1j * 2 ** -0.5)
        assert state.b_down.imag == pytest.approx(2 ** -0.5)

    def test_unnormalised_rejected(self):
        with pytest.raises(ValidationError):
            InitialState(b_up=1.0, b_down=0.1)
