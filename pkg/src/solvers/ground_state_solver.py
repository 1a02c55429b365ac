"""
Exact ground state over all U(1) sectors.
Provides the integer order parameter n_g, the continuum relaxation of the lower branch, and
finite-difference curvature of the ground energy along g_tilde.
"""

import math
import logging
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import brentq

from ..models.params import ModelParams, derive
from ..models.results import Branch, EnergyCurve, GroundStateReport, RelaxedGroundState
from ..utils.errors import DomainError, UndefinedRegimeError
from ..utils.parallel import ordered_map
from .dense_oracle import down_index, up_index
from .spectrum_solver import (
    block_eigensystem,
    block_energies,
    edge_state_energies,
    lower_branch,
    lower_branch_slope,
)

logger = logging.getLogger(__name__)

DEFAULT_FD_STEP = 1e-3
TIE_TOLERANCE = 1e-12
ENERGY_MODES = ("continuum", "integer")


def find_ground_state(params: ModelParams) -> GroundStateReport:
    """
    Scan E_minus(n) for n in [1, 2j] against |down, 0>.

    Ties go to the smallest n (|down, 0> counts as n = 0). |up, 2j> sits omega0 + 2*omega*j above
    |down, 0> and never competes.

    Args:
        params: Model parameters

    Returns:
        GroundStateReport of the global minimum
    """
    down_zero, _ = edge_state_energies(params)
    e_minus, _ = block_energies(params, np.arange(1, params.N + 1))
    idx = int(np.argmin(e_minus))
    # Differences at rounding level count as ties
    tolerance = TIE_TOLERANCE * max(1.0, abs(down_zero.energy))

    if down_zero.energy <= e_minus[idx] + tolerance:
        return GroundStateReport(n_g=0, energy=down_zero.energy, branch=Branch.EDGE_DOWN_ZERO)
    block = block_eigensystem(params, idx + 1)
    return GroundStateReport(
        n_g=idx + 1,
        energy=float(e_minus[idx]),
        branch=Branch.BLOCK_MINUS,
        c_up=block.c_up_minus,
        c_down=block.c_down_minus,
    )


def ground_state_vector(params: ModelParams, report: Optional[GroundStateReport] = None) -> np.ndarray:
    """
    Embed the exact ground state in the 2(N+1)-dimensional product basis.

    Args:
        params: Model parameters
        report: Previously computed ground state, recomputed when omitted

    Returns:
        Unit vector with the dense-oracle basis ordering
    """
    report = report or find_ground_state(params)
    vector = np.zeros(2 * (params.N + 1))
    if report.branch == Branch.EDGE_DOWN_ZERO:
        vector[down_index(params, 0)] = 1.0
    else:
        vector[up_index(params, report.n_g - 1)] = report.c_up
        vector[down_index(params, report.n_g)] = report.c_down
    return vector


def relaxed_ground_state(params: ModelParams) -> RelaxedGroundState:
    """
    Minimise the lower branch over real x in [0, 2j].

    The stationary point is bracketed by the neighbours of the integer minimum and solved on the
    analytic slope. The result is never above the integer ground energy.
    """
    report = find_ground_state(params)
    down_zero, _ = edge_state_energies(params)
    connected = derive(params).omega0_tilde - params.omega - params.delta > 0
    n0 = report.n_g
    # Only continue through (0, 1) when the branch meets |down, 0> at x = 0
    left = max(0.0 if connected else 1.0, n0 - 1.0)
    right = min(float(params.N), n0 + 1.0)
    if left >= right:
        return RelaxedGroundState(x=float(n0), energy=report.energy)

    slope_left = lower_branch_slope(params, left)
    slope_right = lower_branch_slope(params, right)
    if slope_left >= 0:
        x = left
    elif slope_right <= 0:
        x = right
    else:
        x = brentq(lambda value: lower_branch_slope(params, value), left, right)

    energy = down_zero.energy if (x == 0.0 and connected) else float(lower_branch(params, x))
    if report.energy < energy:
        return RelaxedGroundState(x=float(n0), energy=report.energy)
    return RelaxedGroundState(x=float(x), energy=energy)


def ground_energy(params: ModelParams, mode: str = "continuum") -> float:
    """Ground energy from the integer scan or its continuum relaxation."""
    if mode == "integer":
        return find_ground_state(params).energy
    if mode == "continuum":
        return relaxed_ground_state(params).energy
    raise DomainError(f"unknown energy mode {mode!r}, expected one of {ENERGY_MODES}")


def finite_size_critical_coupling(template: ModelParams) -> float:
    """
    Coupling at which the continued lower branch first leaves x = 0.

    g_c(N)^2 = (1 - (omega + delta)/omega0_tilde) * N/(N+1), which tends to 1 for large omega0_tilde.

    Raises:
        UndefinedRegimeError: omega_tilde or omega0_tilde - omega - delta not positive
    """
    derived = derive(template)
    slack = derived.omega0_tilde - template.omega - template.delta
    if derived.omega_tilde <= 0 or slack <= 0:
        raise UndefinedRegimeError(
            f"no finite-size transition from n=0: omega_tilde={derived.omega_tilde:.6g}, "
            f"omega0_tilde-omega-delta={slack:.6g}"
        )
    return math.sqrt(slack / derived.omega0_tilde * template.N / (template.N + 1))


def _check_grid(grid: Sequence[float]) -> np.ndarray:
    values = np.asarray(grid, dtype=float)
    if values.ndim != 1 or values.size == 0:
        raise DomainError("grid must be a non-empty one-dimensional sequence")
    if values.size > 1 and np.any(np.diff(values) <= 0):
        raise DomainError("grid must be strictly increasing")
    return values


def excitation_sweep(
    template: ModelParams,
    grid: Sequence[float],
    allow_inverted: bool = False,
    workers: int = 1,
) -> List[Tuple[float, Optional[int]]]:
    """
    Exact n_g along a g_tilde grid.

    Args:
        template: Parameters whose A is replaced at each point
        grid: g_tilde values
        allow_inverted: Back-solve A from |omega_tilde * omega0_tilde|
        workers: Thread count for point evaluation

    Returns:
        (g_tilde, n_g) pairs; n_g is None where g_tilde is undefined
    """
    values = _check_grid(grid)

    def point(g_tilde: float) -> Tuple[float, Optional[int]]:
        try:
            params = template.with_g_tilde(g_tilde, allow_inverted=allow_inverted)
        except UndefinedRegimeError as e:
            logger.debug(f"Skipping g_tilde={g_tilde}: {e}")
            return g_tilde, None
        return g_tilde, find_ground_state(params).n_g

    return ordered_map(point, [float(g) for g in values], workers)


def energy_second_derivative(
    template: ModelParams,
    grid: Sequence[float],
    h: float = DEFAULT_FD_STEP,
    mode: str = "continuum",
    allow_inverted: bool = False,
    workers: int = 1,
) -> EnergyCurve:
    """
    Central second difference of the ground energy in g_tilde.

    d2[i] = (E(g+h) - 2E(g) + E(g-h)) / h^2. The continuum mode removes the kinks of integer sector
    switching so only the transition itself shows up as a jump.

    Args:
        template: Parameters whose A is replaced at each point
        grid: g_tilde values, each admitting g - h >= 0
        h: Finite-difference step
        mode: "continuum" or "integer"
        allow_inverted: Back-solve A from |omega_tilde * omega0_tilde|
        workers: Thread count for point evaluation

    Returns:
        EnergyCurve on the grid

    Raises:
        DomainError: h <= 0, bad grid, or g - h < 0
        UndefinedRegimeError: g_tilde undefined for the template
    """
    if not h > 0:
        raise DomainError(f"finite-difference step must be positive, got {h}")
    if mode not in ENERGY_MODES:
        raise DomainError(f"unknown energy mode {mode!r}, expected one of {ENERGY_MODES}")
    values = _check_grid(grid)
    if values[0] - h < 0:
        raise DomainError(f"grid start {values[0]} does not admit g_tilde - h with h={h}")

    def energy_at(g_tilde: float) -> float:
        return ground_energy(template.with_g_tilde(g_tilde, allow_inverted=allow_inverted), mode)

    def point(g_tilde: float) -> Tuple[float, float]:
        below, centre, above = (energy_at(g_tilde - h), energy_at(g_tilde), energy_at(g_tilde + h))
        return centre, (above - 2 * centre + below) / h ** 2

    results = ordered_map(point, [float(g) for g in values], workers)
    return EnergyCurve(
        grid=[float(g) for g in values],
        energy=[r[0] for r in results],
        d2=[r[1] for r in results],
    )
