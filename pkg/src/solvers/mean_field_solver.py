"""
Closed-form mean-field results for the central spin model.
Energy functional, superradiant excitation number (direct and rationalised forms), the delta = 0
limits, the near-resonance limit, and the coherence order parameter.
"""

import math
import logging
import sys

from ..models.params import ModelParams, DerivedParams, derive, require_g_tilde
from ..models.results import MeanFieldEnergyPoint, MeanFieldSolution, Phase
from ..utils.errors import DomainError, InadmissibleError

logger = logging.getLogger(__name__)

# |delta| below this fraction of omega uses the delta = 0 limit form
DELTA_ZERO_SWITCH = 1e-8
# Relative rounding error tolerated in the direct form before the rationalised one is used
CANCELLATION_LIMIT = 1e-10
OMEGA_BAR_DRIFT = 1e-8


def omega_bar_0(derived: DerivedParams, delta: float, n: float) -> float:
    """sqrt(4 lam^2 n + 4 n^2 delta^2 + 4 n delta omega0_tilde + omega0_tilde^2)."""
    lam, w0t = derived.lam, derived.omega0_tilde
    radicand = 4 * lam ** 2 * n + 4 * n ** 2 * delta ** 2 + 4 * n * delta * w0t + w0t ** 2
    # (2n delta + omega0_tilde)^2 + 4 lam^2 n >= 0 for n >= 0
    assert radicand >= -1e-12 * max(1.0, w0t ** 2), f"negative radicand {radicand}"
    return math.sqrt(max(radicand, 0.0))


def mf_energy(params: ModelParams, n: float) -> MeanFieldEnergyPoint:
    """
    Mean-field energy E(n) = omega(n - j) - omega_bar_0(n)/2.

    Args:
        params: Model parameters
        n: Continuum excitation number (>= 0)

    Returns:
        MeanFieldEnergyPoint with the energy and omega_bar_0(n)

    Raises:
        DomainError: n < 0
    """
    if n < 0:
        raise DomainError(f"mean-field excitation number must be non-negative, got {n}")
    derived = derive(params)
    bar = omega_bar_0(derived, params.delta, n)
    energy = params.omega * (n - float(derived.j)) - bar / 2
    return MeanFieldEnergyPoint(n=float(n), energy=energy, omega_bar_0=bar)


def harmonic_expansion_delta0(params: ModelParams, n: float) -> float:
    """
    Delta = 0 square-root form -(omega0/2) sqrt(1 + 4 g^2 n / eta) + omega(n - j - 1).

    It sits exactly omega below mf_energy at delta = 0.
    """
    if params.delta != 0:
        raise DomainError(f"expansion holds only at delta = 0, got delta={params.delta}")
    if n < 0:
        raise DomainError(f"excitation number must be non-negative, got {n}")
    derived = derive(params)
    return (-(params.omega0 / 2) * math.sqrt(1 + 4 * derived.g ** 2 * n / derived.eta)
            + params.omega * (n - float(derived.j) - 1))


def harmonic_spectrum_delta0(params: ModelParams, n: int) -> float:
    """
    Large-eta expansion of the lower branch at delta = 0.

    E(n) = -omega0/2 - omega j + (1 - g^2 + g^2 (n-1)/(2j)) n omega

    Raises:
        DomainError: delta != 0 or n < 0
    """
    if params.delta != 0:
        raise DomainError(f"harmonic expansion holds only at delta = 0, got delta={params.delta}")
    if n < 0:
        raise DomainError(f"excitation number must be non-negative, got {n}")
    derived = derive(params)
    if derived.eta < 10:
        logger.warning(f"harmonic expansion assumes eta >> 1, got eta={derived.eta:.3g}")
    g2 = derived.g ** 2
    j = float(derived.j)
    return -params.omega0 / 2 - params.omega * j + (1 - g2 + g2 * (n - 1) / (2 * j)) * n * params.omega


def _require_superradiant(params: ModelParams) -> DerivedParams:
    if abs(params.delta) >= params.omega:
        raise InadmissibleError(f"|delta|={abs(params.delta)} >= omega={params.omega}")
    derived = derive(params)
    g_tilde = require_g_tilde(derived)
    if g_tilde <= 1:
        raise DomainError(f"superradiant formula needs g_tilde > 1, got {g_tilde}")
    return derived


def _excitation_rationalised(derived: DerivedParams, omega: float, delta: float) -> float:
    lam, w0t = derived.lam, derived.omega0_tilde
    detuning = omega ** 2 - delta ** 2
    numerator = lam ** 2 * (lam ** 2 + 2 * delta * w0t) - detuning * w0t ** 2
    denominator = (2 * detuning * (lam ** 2 + delta * w0t)
                   + 2 * lam * omega * math.sqrt(detuning * (lam ** 2 + 2 * delta * w0t)))
    return numerator / denominator


def _excitation_delta0_limit(derived: DerivedParams, omega: float) -> float:
    g2 = derived.g_tilde ** 2
    return derived.omega0_tilde / (4 * omega) * (g2 - 1 / g2)


def ng_rewritten(params: ModelParams) -> float:
    """
    Superradiant excitation number in rationalised form.

    n_g = [lam^2(lam^2 + 2 delta w0t) - (omega^2 - delta^2) w0t^2]
          / [2(omega^2 - delta^2)(lam^2 + delta w0t) + 2 lam omega sqrt((omega^2 - delta^2)(lam^2 + 2 delta w0t))]

    Equal to the direct form, finite at delta = 0.

    Raises:
        InadmissibleError: |delta| >= omega
        DomainError: g_tilde <= 1 or undefined
    """
    derived = _require_superradiant(params)
    return _excitation_rationalised(derived, params.omega, params.delta)


def _superradiant_excitation(derived: DerivedParams, omega: float, delta: float) -> float:
    if abs(delta) < DELTA_ZERO_SWITCH * omega:
        return _excitation_delta0_limit(derived, omega)

    lam, w0t = derived.lam, derived.omega0_tilde
    u = lam * omega * math.sqrt((lam ** 2 + 2 * delta * w0t) / (omega ** 2 - delta ** 2))
    v = lam ** 2 + delta * w0t
    # u - v loses digits when n_g is small against lam^2 or delta is small
    if abs(u - v) > 0 and sys.float_info.epsilon * max(abs(u), abs(v)) / abs(u - v) < CANCELLATION_LIMIT:
        return (u - v) / (2 * delta ** 2)
    return _excitation_rationalised(derived, omega, delta)


def superradiant_omega_bar(derived: DerivedParams, omega: float, delta: float, n_g: float) -> float:
    """Closed-form omega_bar_0 at the superradiant minimum, checked against the generic radicand."""
    lam, w0t = derived.lam, derived.omega0_tilde
    closed = math.sqrt((lam ** 4 + 2 * delta * lam ** 2 * w0t) / (omega ** 2 - delta ** 2))
    generic = omega_bar_0(derived, delta, n_g)
    if abs(closed - generic) > OMEGA_BAR_DRIFT * max(1.0, abs(generic)):
        logger.warning(f"omega_bar_0 closed form {closed:.12g} differs from radicand value {generic:.12g}")
    return closed


def mf_excitation(params: ModelParams) -> MeanFieldSolution:
    """
    Mean-field ground state.

    Normal phase (g_tilde <= 1): n_g = 0. Superradiant phase (g_tilde > 1):
    n_g = -(lam^2 + delta w0t)/(2 delta^2) + lam omega/(2 delta^2) sqrt((lam^2 + 2 delta w0t)/(omega^2 - delta^2)),
    with the (omega0_tilde/(4 omega))(g_tilde^2 - g_tilde^-2) limit for |delta| < 1e-8 omega.
    Energy is omega n_g - omega_bar_0/2 - omega j and the coherence is sqrt(n_g).

    Args:
        params: Model parameters

    Returns:
        MeanFieldSolution; phase INADMISSIBLE with NaN fields when |delta| >= omega

    Raises:
        UndefinedRegimeError: g_tilde undefined for admissible delta
    """
    if abs(params.delta) >= params.omega:
        nan = float("nan")
        return MeanFieldSolution(n_g=nan, energy=nan, coherence=nan, phase=Phase.INADMISSIBLE)

    derived = derive(params)
    g_tilde = require_g_tilde(derived)
    j = float(derived.j)

    if g_tilde <= 1:
        energy = -params.omega * j - derived.omega0_tilde / 2
        return MeanFieldSolution(n_g=0.0, energy=energy, coherence=0.0, phase=Phase.NORMAL)

    n_g = max(_superradiant_excitation(derived, params.omega, params.delta), 0.0)
    bar = superradiant_omega_bar(derived, params.omega, params.delta, n_g)
    energy = params.omega * n_g - bar / 2 - params.omega * j
    return MeanFieldSolution(n_g=n_g, energy=energy, coherence=math.sqrt(n_g), phase=Phase.SUPERRADIANT)


def ng_near_resonance(params: ModelParams) -> float:
    """
    Excitation number as omega_tilde -> 0: n_g = omega0_tilde/(2 delta^2) (g_tilde omega - delta).

    Raises:
        DomainError: outside 0 < delta < omega or g_tilde omega < delta
    """
    if not 0 < params.delta < params.omega:
        raise DomainError(f"near-resonance limit needs 0 < delta < omega, got delta={params.delta}, omega={params.omega}")
    derived = derive(params)
    g_tilde = require_g_tilde(derived)
    excess = g_tilde * params.omega - params.delta
    if excess < -1e-12 * params.omega:
        raise DomainError(f"near-resonance limit needs g_tilde*omega >= delta, got {g_tilde * params.omega} < {params.delta}")
    return derived.omega0_tilde / (2 * params.delta ** 2) * max(excess, 0.0)
