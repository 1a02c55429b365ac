"""
Physical parameters of the uniform XXZ central spin model.
ModelParams holds the five inputs; derive() computes the frequencies and couplings built from them.
"""

import math
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from ..utils.errors import DomainError, UndefinedRegimeError

logger = logging.getLogger(__name__)


class ModelParams(BaseModel):
    """
    Inputs of H = omega0*S_z + omega*J_z + A(J+S- + J-S+) + 2*delta*J_z*S_z.

    All values are in units where hbar = 1. N bath spins form a collective spin j = N/2.
    """
    model_config = ConfigDict(frozen=True, extra="forbid")

    omega0: float = Field(..., gt=0, description="central-spin transition frequency")
    omega: float = Field(..., gt=0, description="bath-spin frequency")
    A: float = Field(0.0, ge=0, description="transverse coupling per bath spin")
    delta: float = Field(0.0, description="longitudinal coupling, may be negative")
    N: int = Field(..., ge=1, description="number of bath spins")

    @property
    def j(self) -> Fraction:
        """Collective bath spin N/2, kept exact for odd N."""
        return Fraction(self.N, 2)

    def with_coupling(self, A: float) -> "ModelParams":
        """Copy with a different transverse coupling."""
        return self.model_copy(update={"A": float(A)})

    def with_g_tilde(self, g_tilde: float, allow_inverted: bool = False) -> "ModelParams":
        """
        Copy with A back-solved from the reduced coupling, A = g_tilde * sqrt(omega_tilde * omega0_tilde / N).

        Args:
            g_tilde: Target reduced coupling (>= 0)
            allow_inverted: Use |omega_tilde * omega0_tilde| when the product is negative

        Returns:
            ModelParams with the matching A

        Raises:
            DomainError: g_tilde is negative
            UndefinedRegimeError: the product omega_tilde * omega0_tilde is not positive
        """
        if g_tilde < 0:
            raise DomainError(f"g_tilde must be non-negative, got {g_tilde}")
        product = (self.omega - self.delta) * (self.omega0 - self.N * self.delta)
        if product <= 0:
            if not (allow_inverted and product < 0):
                raise UndefinedRegimeError(
                    f"g_tilde undefined: omega_tilde*omega0_tilde = {product:.6g} <= 0 "
                    f"(omega={self.omega}, delta={self.delta}, omega0={self.omega0}, N={self.N})"
                )
            product = abs(product)
        return self.with_coupling(g_tilde * math.sqrt(product / self.N))


@dataclass(frozen=True)
class DerivedParams:
    """
    Frequencies and couplings derived from ModelParams.

    g_tilde and lambda_c are None when omega_tilde * omega0_tilde <= 0 (not defined in that regime).
    """
    j: Fraction
    lam: float
    eta: float
    omega_tilde: float
    omega0_tilde: float
    g: float
    g_tilde: Optional[float]
    lambda_c: Optional[float]

    @property
    def regime_defined(self) -> bool:
        return self.g_tilde is not None


@dataclass(frozen=True)
class BlockIndex:
    """U(1) sector label: the block spanned by |up, n-1> and |down, n>."""
    n: int
    m: Fraction
    k_n: int

    @property
    def two_m_plus_one(self) -> int:
        return int(2 * self.m + 1)


def derive(params: ModelParams) -> DerivedParams:
    """
    Compute lambda, eta, omega_tilde, omega0_tilde, g, g_tilde and lambda_c.

    Args:
        params: Model parameters

    Returns:
        DerivedParams; g_tilde and lambda_c are None outside omega_tilde*omega0_tilde > 0
    """
    lam = params.A * math.sqrt(params.N)
    omega_tilde = params.omega - params.delta
    omega0_tilde = params.omega0 - params.N * params.delta
    product = omega_tilde * omega0_tilde

    if product > 0:
        lambda_c = math.sqrt(product)
        g_tilde = lam / lambda_c
    else:
        lambda_c = None
        g_tilde = None

    return DerivedParams(
        j=params.j,
        lam=lam,
        eta=params.omega0 / params.omega,
        omega_tilde=omega_tilde,
        omega0_tilde=omega0_tilde,
        g=lam / math.sqrt(params.omega0 * params.omega),
        g_tilde=g_tilde,
        lambda_c=lambda_c,
    )


def require_g_tilde(derived: DerivedParams) -> float:
    """Return g_tilde or raise when it is undefined."""
    if derived.g_tilde is None:
        raise UndefinedRegimeError(
            f"g_tilde undefined: omega_tilde={derived.omega_tilde:.6g}, omega0_tilde={derived.omega0_tilde:.6g}"
        )
    return derived.g_tilde


def block_index(params: ModelParams, n: int) -> BlockIndex:
    """
    Build the sector label for excitation number n.

    Raises:
        DomainError: n outside [1, 2j]
    """
    if isinstance(n, bool) or int(n) != n:
        raise DomainError(f"block index must be an integer, got {n!r}")
    n = int(n)
    if n < 1 or n > params.N:
        raise DomainError(f"block index n={n} outside [1, {params.N}]")
    m = n - 1 - params.j
    return BlockIndex(n=n, m=m, k_n=(params.N - n + 1) * n)
