"""
Schrieffer-Wolff effective Hamiltonians.
Normal-phase constant, gap and generator amplitude; displaced-frame coefficients in the superradiant
phase; and the |delta| < omega admissibility test.
"""

import math
import logging

from ..models.params import ModelParams, derive, require_g_tilde
from ..models.results import Admissibility, NormalPhaseEffective, SuperradiantFrame, Phase
from ..utils.errors import DomainError, InadmissibleError
from .mean_field_solver import mf_excitation, superradiant_omega_bar

logger = logging.getLogger(__name__)


def qpt_admissible(params: ModelParams) -> Admissibility:
    """
    Necessary condition |delta| < omega for the superradiant transition.

    The radicand (lam^2 + 2 delta omega0_tilde)/(omega^2 - delta^2) of the displaced frame is attached
    as a diagnostic (None when omega^2 = delta^2).
    """
    derived = derive(params)
    detuning = params.omega ** 2 - params.delta ** 2
    radicand = None
    if detuning != 0:
        radicand = (derived.lam ** 2 + 2 * params.delta * derived.omega0_tilde) / detuning

    if params.delta >= params.omega:
        return Admissibility(False, f"delta={params.delta} >= omega={params.omega}", radicand)
    if params.delta <= -params.omega:
        return Admissibility(False, f"delta={params.delta} <= -omega={-params.omega}", radicand)
    return Admissibility(True, f"|delta|={abs(params.delta)} < omega={params.omega}", radicand)


def _require_admissible(params: ModelParams) -> None:
    verdict = qpt_admissible(params)
    if not verdict:
        raise InadmissibleError(verdict.reason)


def normal_effective(params: ModelParams) -> NormalPhaseEffective:
    """
    Low-energy effective Hamiltonian of the normal phase.

    constant = -omega0_tilde/2 - omega j, gap = omega_tilde (1 - g_tilde^2), generator amplitude lam/omega0_tilde.

    Raises:
        InadmissibleError: |delta| >= omega
        UndefinedRegimeError: g_tilde undefined
    """
    _require_admissible(params)
    derived = derive(params)
    g_tilde = require_g_tilde(derived)
    return NormalPhaseEffective(
        constant=-derived.omega0_tilde / 2 - params.omega * float(derived.j),
        gap=derived.omega_tilde * (1 - g_tilde ** 2),
        sw_coefficient=derived.lam / derived.omega0_tilde,
    )


def superradiant_frame(params: ModelParams) -> SuperradiantFrame:
    """
    Displaced-frame parameters of the superradiant effective Hamiltonian.

    alpha = sqrt(n_g) (real), theta = atan2(2 alpha lam, 2 alpha^2 delta + omega0_tilde)/2, omega_bar0 from
    the closed form, and the kappa coefficients. kappa1 and kappa2 vanish at the mean-field minimum
    through 2 delta^2 alpha^2 + lam^2 + delta omega0_tilde = omega omega_bar0.

    Args:
        params: Model parameters with |delta| < omega and g_tilde > 1

    Returns:
        SuperradiantFrame

    Raises:
        InadmissibleError: |delta| >= omega
        DomainError: normal-phase parameters
    """
    _require_admissible(params)
    solution = mf_excitation(params)
    if solution.phase != Phase.SUPERRADIANT:
        raise DomainError(f"superradiant frame needs g_tilde > 1, got phase {solution.phase.value}")

    derived = derive(params)
    lam, w0t = derived.lam, derived.omega0_tilde
    omega, delta = params.omega, params.delta
    alpha = solution.coherence
    alpha2 = alpha ** 2

    omega_bar0 = superradiant_omega_bar(derived, omega, delta, solution.n_g)
    theta = 0.5 * math.atan2(2 * alpha * lam, 2 * alpha2 * delta + w0t)

    kappa0 = omega / 4 - (2 * alpha2 * delta ** 2 + delta * w0t) / (4 * omega_bar0)
    kappa1 = omega * alpha - (lam ** 2 * alpha + 2 * alpha ** 3 * delta ** 2 + delta * alpha * w0t) / omega_bar0
    kappa2 = omega / 4 - (2 * alpha2 * delta ** 2 + delta * w0t + lam ** 2) / (4 * omega_bar0)
    residual = (2 * delta ** 2 * alpha2 + lam ** 2 + delta * w0t) - omega * omega_bar0

    if kappa0 < 0:
        logger.warning(f"kappa0={kappa0:.6g} is negative; effective potential not confining")

    return SuperradiantFrame(
        alpha=alpha,
        theta=theta,
        omega_bar0=omega_bar0,
        kappa0=kappa0,
        kappa1=kappa1,
        kappa2=kappa2,
        kappa0_negated=-kappa0,
        identity_residual=residual,
        ground_energy=omega * alpha2 - omega_bar0 / 2 - omega * float(derived.j),
    )
