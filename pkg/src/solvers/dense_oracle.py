"""
Dense-diagonalisation oracle.
Builds H in the product basis {|up/down> x |j, m>} from angular-momentum matrix elements and solves it
with a dense symmetric eigensolver, independently of the block formulas.
"""

import logging
from typing import Optional

import numpy as np
from scipy.linalg import eigh

from ..models.params import ModelParams
from ..models.results import OracleSpectrum
from ..utils.errors import ResourceLimitError

logger = logging.getLogger(__name__)

ORACLE_N_CAP = 4096


def up_index(params: ModelParams, bath_excitations: int) -> int:
    """Position of |up, m = -j + bath_excitations> in the product basis."""
    return bath_excitations


def down_index(params: ModelParams, bath_excitations: int) -> int:
    """Position of |down, m = -j + bath_excitations> in the product basis."""
    return params.N + 1 + bath_excitations


def build_hamiltonian(params: ModelParams, coupling: Optional[float] = None) -> np.ndarray:
    """
    Assemble the 2(N+1) x 2(N+1) Hamiltonian matrix.

    Args:
        params: Model parameters
        coupling: Transverse coupling to use instead of params.A (may be negative)

    Returns:
        Dense real symmetric matrix
    """
    A = params.A if coupling is None else coupling
    size = params.N + 1
    j = float(params.j)
    m = np.arange(size) - j

    hamiltonian = np.zeros((2 * size, 2 * size))
    # S_z = +1/2 block then S_z = -1/2 block
    hamiltonian[np.arange(size), np.arange(size)] = params.omega0 / 2 + (params.omega + params.delta) * m
    hamiltonian[size + np.arange(size), size + np.arange(size)] = -params.omega0 / 2 + (params.omega - params.delta) * m

    # J+ S-: |up, m> -> |down, m+1> with sqrt(j(j+1) - m(m+1))
    raising = np.sqrt(np.maximum(j * (j + 1) - m[:-1] * (m[:-1] + 1), 0.0))
    rows = size + np.arange(1, size)
    cols = np.arange(size - 1)
    hamiltonian[rows, cols] = A * raising
    hamiltonian[cols, rows] = A * raising
    return hamiltonian


def dense_oracle_spectrum(
    params: ModelParams,
    with_vectors: bool = False,
    coupling: Optional[float] = None,
    cap: int = ORACLE_N_CAP,
) -> OracleSpectrum:
    """
    Full Dicke-sector spectrum by dense diagonalisation.

    Args:
        params: Model parameters
        with_vectors: Also return eigenvectors (columns, same order as energies)
        coupling: Override for A, e.g. to check the A -> -A symmetry
        cap: Largest N accepted

    Returns:
        OracleSpectrum with ascending energies

    Raises:
        ResourceLimitError: N exceeds cap
    """
    if params.N > cap:
        raise ResourceLimitError(f"dense oracle limited to N <= {cap}, got N={params.N}")

    logger.debug(f"Dense oracle solve, dimension {2 * (params.N + 1)}")
    hamiltonian = build_hamiltonian(params, coupling=coupling)
    if with_vectors:
        energies, vectors = eigh(hamiltonian)
        return OracleSpectrum(energies=energies, vectors=vectors)
    return OracleSpectrum(energies=eigh(hamiltonian, eigvals_only=True))


def oracle_ground_vector(params: ModelParams, cap: int = ORACLE_N_CAP) -> np.ndarray:
    """Lowest eigenvector of the dense Hamiltonian."""
    result = dense_oracle_spectrum(params, with_vectors=True, cap=cap)
    return result.vectors[:, 0]
