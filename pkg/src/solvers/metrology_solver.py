"""
Criticality-based sensing quantities.
Ground-state fidelity and QFI across the transition, the central-spin signal <sigma_x(t)>, and the
error-propagation inverse variance.
"""

import math
import logging
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.stats import binom, poisson

from ..models.params import ModelParams, derive, require_g_tilde
from ..models.probe import InitialState, WeightKind
from ..models.results import Branch, FidelityReport, Flag, GroundStateReport, ProbeWeights, SensitivityCurve
from ..utils.errors import DomainError, UndefinedRegimeError
from ..utils.parallel import ordered_map
from .dense_oracle import ORACLE_N_CAP, oracle_ground_vector
from .ground_state_solver import find_ground_state

logger = logging.getLogger(__name__)

DEFAULT_QFI_STEP = 1e-5
DEFAULT_DERIVATIVE_STEP = 1e-6
TRUNCATION_LOSS_LIMIT = 1e-8
UNIT_SIGNAL_TOLERANCE = 1e-12
DERIVATIVE_MODES = ("analytic", "finite_difference")


def _sector_angle(report: GroundStateReport) -> float:
    return math.atan2(report.c_down, report.c_up)


def fidelity_between(first: GroundStateReport, second: GroundStateReport) -> FidelityReport:
    """
    Overlap of two exact ground states.

    States in different U(1) sectors share no basis state and have zero overlap. Within a block the
    infidelity is evaluated from the angle difference so it stays accurate when f is close to 1.
    """
    if first.branch != second.branch or first.n_g != second.n_g:
        return FidelityReport(fidelity=0.0, infidelity=1.0, sector_crossing=True)
    if first.branch != Branch.BLOCK_MINUS:
        return FidelityReport(fidelity=1.0, infidelity=0.0, sector_crossing=False)

    angle = _sector_angle(first) - _sector_angle(second)
    cosine = math.cos(angle)
    if cosine >= 0:
        infidelity = 2 * math.sin(angle / 2) ** 2
    else:
        infidelity = 2 * math.cos(angle / 2) ** 2
    return FidelityReport(fidelity=abs(cosine), infidelity=infidelity, sector_crossing=False)


def fidelity_report(
    template: ModelParams,
    g_tilde: float,
    delta_g: float,
    allow_inverted: bool = False,
) -> FidelityReport:
    """
    Fidelity between exact ground states at g_tilde and g_tilde + delta_g.

    Raises:
        DomainError: either coupling is outside the defined regime
    """
    first = find_ground_state(template.with_g_tilde(g_tilde, allow_inverted=allow_inverted))
    second = find_ground_state(template.with_g_tilde(g_tilde + delta_g, allow_inverted=allow_inverted))
    return fidelity_between(first, second)


def ground_fidelity(
    template: ModelParams,
    g_tilde: float,
    delta_g: float,
    allow_inverted: bool = False,
) -> float:
    """f(g_tilde, delta_g) = |<psi(g_tilde)|psi(g_tilde + delta_g)>| in [0, 1]."""
    return fidelity_report(template, g_tilde, delta_g, allow_inverted=allow_inverted).fidelity


def oracle_ground_fidelity(
    template: ModelParams,
    g_tilde: float,
    delta_g: float,
    allow_inverted: bool = False,
    cap: int = ORACLE_N_CAP,
) -> float:
    """Same overlap computed from dense-oracle ground vectors."""
    first = oracle_ground_vector(template.with_g_tilde(g_tilde, allow_inverted=allow_inverted), cap=cap)
    second = oracle_ground_vector(template.with_g_tilde(g_tilde + delta_g, allow_inverted=allow_inverted), cap=cap)
    return float(min(1.0, abs(np.dot(first, second))))


def qfi_point(
    template: ModelParams,
    g_tilde: float,
    delta_g: float = DEFAULT_QFI_STEP,
    allow_inverted: bool = False,
) -> Tuple[float, bool]:
    """
    QFI estimate 8(1 - f)/delta_g^2 and whether the step crosses a sector boundary.

    Raises:
        DomainError: delta_g <= 0 or coupling undefined
    """
    if not delta_g > 0:
        raise DomainError(f"fidelity step must be positive, got {delta_g}")
    report = fidelity_report(template, g_tilde, delta_g, allow_inverted=allow_inverted)
    return 8 * report.infidelity / delta_g ** 2, report.sector_crossing


def qfi(
    template: ModelParams,
    g_tilde: float,
    delta_g: float = DEFAULT_QFI_STEP,
    allow_inverted: bool = False,
) -> float:
    """Quantum Fisher information of the exact ground state with respect to g_tilde."""
    return qfi_point(template, g_tilde, delta_g, allow_inverted=allow_inverted)[0]


def qfi_sweep(
    template: ModelParams,
    grid: Sequence[float],
    delta_g: float = DEFAULT_QFI_STEP,
    allow_inverted: bool = False,
    workers: int = 1,
) -> SensitivityCurve:
    """
    QFI along a g_tilde grid.

    Points where the coupling is undefined hold NaN with the undefined flag; steps that cross a
    sector boundary keep their spike value with the sector_crossing flag.
    """
    def point(g_tilde: float) -> Tuple[float, List[Flag]]:
        try:
            value, crossing = qfi_point(template, g_tilde, delta_g, allow_inverted=allow_inverted)
        except UndefinedRegimeError as e:
            logger.debug(f"QFI undefined at g_tilde={g_tilde}: {e}")
            return float("nan"), [Flag.UNDEFINED]
        return value, ([Flag.SECTOR_CROSSING] if crossing else [])

    grid = [float(g) for g in grid]
    results = ordered_map(point, grid, workers)
    return SensitivityCurve(grid=grid, values=[r[0] for r in results], flags=[r[1] for r in results])


def default_truncation(alpha: float, N: int) -> int:
    """n_max = min(2j, ceil(alpha^2 + 10 alpha + 20))."""
    return int(min(N, math.ceil(alpha ** 2 + 10 * alpha + 20)))


def probe_weights(state: InitialState, N: int) -> ProbeWeights:
    """
    Populations |d_n|^2 of the probe, truncated to n_max and renormalised.

    Bosonic weights are Poisson with mean alpha^2; spin-coherent weights are binomial over the 2j
    Dicke levels with the same mean.

    Raises:
        DomainError: spin-coherent mean alpha^2 exceeds 2j
    """
    alpha = state.alpha_probe
    n_max = default_truncation(alpha, N) if state.truncation is None else min(state.truncation, N)
    n = np.arange(n_max + 1)

    if state.weight_kind == WeightKind.SPIN_COHERENT:
        if alpha ** 2 > N:
            raise DomainError(f"spin-coherent mean alpha^2={alpha ** 2} exceeds 2j={N}")
        raw = binom.pmf(n, N, alpha ** 2 / N)
    else:
        raw = poisson.pmf(n, alpha ** 2)

    total = float(raw.sum())
    loss = 1.0 - total
    warning = loss > TRUNCATION_LOSS_LIMIT
    if warning:
        logger.warning(f"Probe truncation at n_max={n_max} loses {loss:.3g} of the weight")
    return ProbeWeights(n=n, weights=raw / total, truncation_loss=loss, truncation_warning=warning)


def revival_period(params: ModelParams) -> float:
    """T = pi/(omega_tilde g_tilde^2 + delta), the period of <sigma_x(t)>."""
    derived = derive(params)
    rate = derived.omega_tilde * require_g_tilde(derived) ** 2 + params.delta
    if rate == 0:
        raise DomainError("signal is static: omega_tilde g_tilde^2 + delta = 0")
    return math.pi / abs(rate)


def _signal(omega_tilde: float, delta: float, g_tilde: float, state: InitialState,
            weights: ProbeWeights, t: float) -> Tuple[float, float]:
    # phi(n) = 2(omega_tilde g^2 + delta) n, d phi/dg = 4 omega_tilde g n
    phases = np.exp(1j * t * 2 * (omega_tilde * g_tilde ** 2 + delta) * weights.n)
    coherence = np.conj(state.b_up) * state.b_down
    value = 2 * np.real(coherence * np.sum(weights.weights * phases))
    slope = 2 * np.real(coherence * np.sum(weights.weights * 1j * t * 4 * omega_tilde * g_tilde * weights.n * phases))
    return float(np.clip(value, -1.0, 1.0)), float(slope)


def sigma_x_expectation(params: ModelParams, state: InitialState, t: float) -> float:
    """
    <sigma_x(t)> = 2 Re{b_up* b_down sum_n |d_n|^2 exp(i t phi(n))} in the normal-phase effective picture.

    Args:
        params: Model parameters (g_tilde taken from A)
        state: Probe state
        t: Evolution time

    Returns:
        Expectation value in [-1, 1]. Truncation loss above 1e-8 is logged here; the flag itself is
        probe_weights(state, N).truncation_warning and is copied onto every sweep row.
    """
    derived = derive(params)
    weights = probe_weights(state, params.N)
    return _signal(derived.omega_tilde, params.delta, require_g_tilde(derived), state, weights, t)[0]


def signal_derivative(
    params: ModelParams,
    state: InitialState,
    t: float,
    mode: str = "analytic",
    h: float = DEFAULT_DERIVATIVE_STEP,
) -> Tuple[float, float]:
    """
    <sigma_x(t)> and its derivative in g_tilde with the probe held fixed.

    The analytic mode differentiates the phases inside the sum; the finite-difference mode uses a
    five-point central stencil of width h.

    Returns:
        (signal, derivative)
    """
    if mode not in DERIVATIVE_MODES:
        raise DomainError(f"unknown derivative mode {mode!r}, expected one of {DERIVATIVE_MODES}")
    derived = derive(params)
    g_tilde = require_g_tilde(derived)
    weights = probe_weights(state, params.N)
    value, slope = _signal(derived.omega_tilde, params.delta, g_tilde, state, weights, t)
    if mode == "analytic":
        return value, slope

    def at(offset: float) -> float:
        return _signal(derived.omega_tilde, params.delta, g_tilde + offset, state, weights, t)[0]

    stencil = (at(-2 * h) - 8 * at(-h) + 8 * at(h) - at(2 * h)) / (12 * h)
    return value, stencil


def inverse_variance(
    template: ModelParams,
    state: InitialState,
    t: float,
    g_tilde: float,
    mode: str = "analytic",
) -> Optional[float]:
    """
    Error-propagation inverse variance (d<sigma_x>/dg_tilde)^2 / (1 - <sigma_x>^2).

    Returns:
        The value, or None where |<sigma_x>| = 1 within 1e-12
    """
    params = template.with_g_tilde(g_tilde)
    value, slope = signal_derivative(params, state, t, mode=mode)
    if 1 - abs(value) <= UNIT_SIGNAL_TOLERANCE:
        logger.debug(f"Inverse variance undefined at g_tilde={g_tilde}: <sigma_x>={value}")
        return None
    return slope ** 2 / ((1 - value) * (1 + value))


def inverse_variance_sweep(
    template: ModelParams,
    state: InitialState,
    t: float,
    grid: Sequence[float],
    mode: str = "analytic",
    workers: int = 1,
) -> SensitivityCurve:
    """Inverse variance along a g_tilde grid; undefined points hold NaN with the undefined flag."""
    truncation_flag = probe_weights(state, template.N).truncation_warning

    def point(g_tilde: float) -> Tuple[float, List[Flag]]:
        flags = [Flag.TRUNCATION_WARNING] if truncation_flag else []
        try:
            value = inverse_variance(template, state, t, g_tilde, mode=mode)
        except UndefinedRegimeError as e:
            logger.debug(f"Inverse variance skipped at g_tilde={g_tilde}: {e}")
            value = None
        if value is None:
            return float("nan"), [Flag.UNDEFINED] + flags
        return value, flags

    grid = [float(g) for g in grid]
    if grid and max(grid) >= 1:
        # Signal phase is the normal-phase effective one; evaluated as given past g_tilde = 1
        logger.warning(f"Inverse variance grid reaches g_tilde={max(grid):.3g} >= 1, beyond the normal phase")
    results = ordered_map(point, grid, workers)
    return SensitivityCurve(grid=grid, values=[r[0] for r in results], flags=[r[1] for r in results])
