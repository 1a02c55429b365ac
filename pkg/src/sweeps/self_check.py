"""
Built-in numerical self-test run by `spinqpt check`.
Compares the closed-form spectrum with the dense oracle and verifies the algebraic identities the
effective-Hamiltonian and mean-field results rely on.
"""

import logging
from dataclasses import dataclass
from typing import Iterator, List

import numpy as np

from ..models.params import ModelParams, derive
from ..solvers.dense_oracle import dense_oracle_spectrum
from ..solvers.effective_hamiltonian import normal_effective, superradiant_frame
from ..solvers.mean_field_solver import mf_excitation, ng_rewritten
from ..solvers.spectrum_solver import analytic_spectrum, edge_state_energies

logger = logging.getLogger(__name__)

SPECTRUM_TOLERANCE = 1e-10
KAPPA_TOLERANCE = 1e-9
REWRITE_TOLERANCE = 1e-9
CONSTANT_TOLERANCE = 1e-12
CHECK_SEED = 20240611


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    worst: float
    detail: str


def random_superradiant_params(rng: np.random.Generator, count: int) -> Iterator[ModelParams]:
    """
    Draw admissible superradiant parameters: |delta| < omega, omega0_tilde > 0 and g_tilde in (1, 2].

    omega0_tilde is drawn directly and omega0 = omega0_tilde + N delta; draws with omega0 <= 0 are redrawn.
    """
    produced = 0
    while produced < count:
        omega = rng.uniform(0.1, 2.0)
        delta = rng.uniform(-0.9, 0.9) * omega
        N = int(rng.integers(10, 1001))
        omega0 = rng.uniform(10.0, 1000.0) + N * delta
        if omega0 <= 0:
            continue
        g_tilde = 2.0 - rng.uniform(0.0, 1.0)
        produced += 1
        yield ModelParams(omega0=omega0, omega=omega, delta=delta, N=N).with_g_tilde(g_tilde)


def check_oracle_equivalence(params: ModelParams) -> CheckResult:
    analytic = analytic_spectrum(params)
    oracle = dense_oracle_spectrum(params).energies
    scale = float(np.max(np.abs(oracle)))
    worst = float(np.max(np.abs(analytic - oracle))) / scale
    return CheckResult(
        name="oracle equivalence",
        passed=worst <= SPECTRUM_TOLERANCE,
        worst=worst,
        detail=f"N={params.N}, {oracle.size} levels, max |analytic - oracle| / max|E| = {worst:.3e}",
    )


def check_kappa_identity(draws: List[ModelParams]) -> CheckResult:
    worst = 0.0
    for params in draws:
        frame = superradiant_frame(params)
        lam = derive(params).lam
        scale = abs(params.omega) + abs(lam)
        worst = max(worst, abs(frame.kappa1) / scale, abs(frame.kappa2) / scale,
                    abs(frame.identity_residual) / (params.omega * frame.omega_bar0))
    return CheckResult(
        name="kappa1 = kappa2 = 0",
        passed=worst <= KAPPA_TOLERANCE,
        worst=worst,
        detail=f"{len(draws)} superradiant draws, worst scaled residual {worst:.3e}",
    )


def check_rewritten_excitation(draws: List[ModelParams]) -> CheckResult:
    worst = 0.0
    for params in draws:
        direct = mf_excitation(params).n_g
        worst = max(worst, abs(ng_rewritten(params) - direct) / (1 + direct))
    return CheckResult(
        name="rationalised n_g",
        passed=worst <= REWRITE_TOLERANCE,
        worst=worst,
        detail=f"{len(draws)} draws, worst |rationalised - direct| / (1 + n_g) = {worst:.3e}",
    )


def check_normal_constant(draws: List[ModelParams]) -> CheckResult:
    worst = 0.0
    for params in draws:
        down_zero, _ = edge_state_energies(params)
        constant = normal_effective(params).constant
        worst = max(worst, abs(constant - down_zero.energy) / max(1.0, abs(down_zero.energy)))
    return CheckResult(
        name="normal-phase constant",
        passed=worst <= CONSTANT_TOLERANCE,
        worst=worst,
        detail=f"{len(draws)} draws, worst relative difference {worst:.3e}",
    )


def run_self_check(draws: int = 100, seed: int = CHECK_SEED) -> List[CheckResult]:
    """
    Run every check.

    Args:
        draws: Random parameter draws per identity check
        seed: Seed of the parameter generator

    Returns:
        One CheckResult per check, in a fixed order
    """
    rng = np.random.default_rng(seed)
    superradiant = list(random_superradiant_params(rng, draws))
    oracle_params = ModelParams(omega0=100.0, omega=0.5, A=0.5, delta=0.1, N=10)

    results = [
        check_oracle_equivalence(oracle_params),
        check_kappa_identity(superradiant),
        check_rewritten_excitation(superradiant),
        check_normal_constant(superradiant),
    ]
    for result in results:
        log = logger.info if result.passed else logger.error
        log(f"{result.name}: {'ok' if result.passed else 'FAILED'} ({result.detail})")
    return results
