"""
Exact spectrum of the XXZ central spin model via its U(1) block decomposition.
Each sector n in [1, 2j] is a 2x2 block on |up, n-1>, |down, n>; |down, 0> and |up, 2j> are unpaired.
"""

import math
import logging
from typing import Tuple, Union

import numpy as np

from ..models.params import ModelParams, BlockIndex, block_index
from ..models.results import BlockSpectrum, EdgeState, EdgeLabel

logger = logging.getLogger(__name__)

BlockLike = Union[int, BlockIndex]


def _resolve(params: ModelParams, n: BlockLike) -> BlockIndex:
    if isinstance(n, BlockIndex):
        # Re-validate against these params
        return block_index(params, n.n)
    return block_index(params, n)


def block_matrix(params: ModelParams, n: BlockLike) -> np.ndarray:
    """
    2x2 real symmetric matrix of sector n.

    Args:
        params: Model parameters
        n: Excitation number in [1, 2j] or a BlockIndex

    Returns:
        [[omega0/2 + (omega+delta)m, A*sqrt(k_n)], [A*sqrt(k_n), -omega0/2 + (omega-delta)(m+1)]]
    """
    block = _resolve(params, n)
    m = float(block.m)
    off = params.A * math.sqrt(block.k_n)
    return np.array([
        [params.omega0 / 2 + (params.omega + params.delta) * m, off],
        [off, -params.omega0 / 2 + (params.omega - params.delta) * (m + 1)],
    ])


def _omegas(params: ModelParams, n: np.ndarray, k_n: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    # 2m+1 = 2n - N - 1 is an exact integer even for odd N
    two_m_plus_one = 2 * n - params.N - 1
    omega1 = 2 * params.A * np.sqrt(k_n)
    omega2 = two_m_plus_one * params.delta - params.omega + params.omega0
    omega3 = params.delta - two_m_plus_one * params.omega
    return omega1, omega2, omega3


def block_energies(params: ModelParams, n: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """
    Vectorised E_minus(n), E_plus(n) for integer sectors.

    Args:
        params: Model parameters
        n: Integer array of sector labels, all in [1, 2j]

    Returns:
        Tuple of (E_minus, E_plus) arrays
    """
    n = np.asarray(n, dtype=np.int64)
    k_n = ((params.N - n + 1) * n).astype(float)
    omega1, omega2, omega3 = _omegas(params, n, k_n)
    root = np.hypot(omega1, omega2)
    return 0.5 * (-omega3 - root), 0.5 * (-omega3 + root)


def lower_branch(params: ModelParams, x: Union[float, np.ndarray]) -> Union[float, np.ndarray]:
    """E_minus continued to real excitation number x in [0, 2j]."""
    x = np.asarray(x, dtype=float)
    k = x * (params.N - x + 1)
    omega1, omega2, omega3 = _omegas(params, x, np.maximum(k, 0.0))
    value = 0.5 * (-omega3 - np.hypot(omega1, omega2))
    return float(value) if value.ndim == 0 else value


def lower_branch_slope(params: ModelParams, x: float) -> float:
    """dE_minus/dx of the continued lower branch."""
    omega2 = (2 * x - params.N - 1) * params.delta - params.omega + params.omega0
    radicand = 4 * params.A ** 2 * x * (params.N - x + 1) + omega2 ** 2
    numerator = params.A ** 2 * (params.N - 2 * x + 1) + params.delta * omega2
    if radicand <= 0:
        # Branch point of the square root at x = 0
        return -math.inf if params.A > 0 else params.omega
    return params.omega - numerator / math.sqrt(radicand)


def block_eigensystem(params: ModelParams, n: BlockLike) -> BlockSpectrum:
    """
    Closed-form eigenvalues and eigenvectors of sector n.

    The mixing angle phi = atan2(Omega1, Omega2)/2 gives the plus branch (cos phi, sin phi) and the
    minus branch (-sin phi, cos phi). Uncoupled blocks (Omega1 = 0) return bare basis states ordered
    by energy, with (|up, n-1>, |down, n>) as (minus, plus) when fully degenerate.

    Args:
        params: Model parameters
        n: Excitation number in [1, 2j] or a BlockIndex

    Returns:
        BlockSpectrum for the sector
    """
    block = _resolve(params, n)
    omega1, omega2, omega3 = (float(v) for v in _omegas(params, np.array(block.n), np.array(float(block.k_n))))
    root = math.hypot(omega1, omega2)
    e_minus = 0.5 * (-omega3 - root)
    e_plus = 0.5 * (-omega3 + root)

    if omega1 == 0.0:
        if omega2 > 0:
            # up lies above down
            minus, plus = (0.0, 1.0), (1.0, 0.0)
        else:
            minus, plus = (1.0, 0.0), (0.0, 1.0)
    else:
        phi = 0.5 * math.atan2(omega1, omega2)
        plus = (math.cos(phi), math.sin(phi))
        minus = (-math.sin(phi), math.cos(phi))

    return BlockSpectrum(
        n=block.n,
        E_minus=e_minus,
        E_plus=e_plus,
        c_up_minus=minus[0],
        c_down_minus=minus[1],
        c_up_plus=plus[0],
        c_down_plus=plus[1],
        Omega1=omega1,
        Omega2=omega2,
        Omega3=omega3,
    )


def edge_state_energies(params: ModelParams) -> Tuple[EdgeState, EdgeState]:
    """
    Energies of the unpaired states |down, 0> and |up, 2j>.

    Returns:
        (down_zero, up_full)
    """
    j = float(params.j)
    down_zero = -params.omega0 / 2 - (params.omega - params.delta) * j
    up_full = params.omega0 / 2 + (params.omega + params.delta) * j
    return EdgeState(EdgeLabel.DOWN_ZERO, down_zero), EdgeState(EdgeLabel.UP_FULL, up_full)


def analytic_spectrum(params: ModelParams) -> np.ndarray:
    """All 2(N+1) energies from the blocks and the two edge states, ascending."""
    e_minus, e_plus = block_energies(params, np.arange(1, params.N + 1))
    down_zero, up_full = edge_state_energies(params)
    return np.sort(np.concatenate([e_minus, e_plus, [down_zero.energy, up_full.energy]]))


if __name__ == "__main__":
    from ..config import configure_logging

    configure_logging()
    demo = ModelParams(omega0=100, omega=0.5, A=0.2, delta=0.1, N=20)
    logger.info(f"Block n=3 of {demo}: {block_eigensystem(demo, 3)}")
    logger.info(f"Lowest five levels: {analytic_spectrum(demo)[:5]}")
