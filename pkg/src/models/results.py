"""
Result records returned by the solvers.
All records are frozen; array fields are never mutated after construction.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional

import numpy as np


class EdgeLabel(str, Enum):
    DOWN_ZERO = "down_zero"
    UP_FULL = "up_full"


class Branch(str, Enum):
    EDGE_DOWN_ZERO = "edge_down_zero"
    BLOCK_MINUS = "block_minus"


class Phase(str, Enum):
    NORMAL = "normal"
    SUPERRADIANT = "superradiant"
    INADMISSIBLE = "inadmissible"


class Flag(str, Enum):
    UNDEFINED = "undefined"
    SECTOR_CROSSING = "sector_crossing"
    TRUNCATION_WARNING = "truncation_warning"


@dataclass(frozen=True)
class BlockSpectrum:
    """
    Eigensystem of one 2x2 U(1) block.

    Coefficients are on (|up, n-1>, |down, n>) for the lower (minus) and upper (plus) branch.
    """
    n: int
    E_minus: float
    E_plus: float
    c_up_minus: float
    c_down_minus: float
    c_up_plus: float
    c_down_plus: float
    Omega1: float
    Omega2: float
    Omega3: float


@dataclass(frozen=True)
class EdgeState:
    label: EdgeLabel
    energy: float


@dataclass(frozen=True)
class OracleSpectrum:
    """Dense-diagonalisation result; vectors are columns, present only when requested."""
    energies: np.ndarray
    vectors: Optional[np.ndarray] = None


@dataclass(frozen=True)
class GroundStateReport:
    """Exact ground state found by scanning all U(1) sectors."""
    n_g: int
    energy: float
    branch: Branch
    c_up: float = 0.0
    c_down: float = 0.0


@dataclass(frozen=True)
class RelaxedGroundState:
    """Minimum of the lower branch over real excitation number x in [0, 2j]."""
    x: float
    energy: float


@dataclass(frozen=True)
class EnergyCurve:
    grid: List[float]
    energy: List[float]
    d2: List[float]


@dataclass(frozen=True)
class MeanFieldEnergyPoint:
    n: float
    energy: float
    omega_bar_0: float


@dataclass(frozen=True)
class MeanFieldSolution:
    """Continuum mean-field ground state; n_g, energy and coherence are NaN when inadmissible."""
    n_g: float
    energy: float
    coherence: float
    phase: Phase


@dataclass(frozen=True)
class Admissibility:
    """Outcome of the |delta| < omega test plus the sign of the displaced-frame radicand."""
    admissible: bool
    reason: str
    radicand: Optional[float] = None

    def __bool__(self) -> bool:
        return self.admissible


@dataclass(frozen=True)
class NormalPhaseEffective:
    constant: float
    gap: float
    sw_coefficient: float


@dataclass(frozen=True)
class SuperradiantFrame:
    """
    Displaced-frame coefficients of the superradiant effective Hamiltonian.

    kappa0 is the positive-curvature convention; kappa0_negated carries the opposite sign convention.
    """
    alpha: float
    theta: float
    omega_bar0: float
    kappa0: float
    kappa1: float
    kappa2: float
    kappa0_negated: float
    identity_residual: float
    ground_energy: float


@dataclass(frozen=True)
class FidelityReport:
    fidelity: float
    infidelity: float
    sector_crossing: bool


@dataclass(frozen=True)
class ProbeWeights:
    """Renormalised populations |d_n|^2 on n = 0..n_max."""
    n: np.ndarray
    weights: np.ndarray
    truncation_loss: float
    truncation_warning: bool


@dataclass(frozen=True)
class SensitivityCurve:
    """QFI or inverse-variance values over a g_tilde grid; undefined points hold NaN."""
    grid: List[float]
    values: List[float]
    flags: List[List[Flag]] = field(default_factory=list)
