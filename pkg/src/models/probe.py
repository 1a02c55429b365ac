"""
Probe state for the central-spin dynamics: a central-spin superposition times coherent bath weights.
"""

from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

NORM_TOLERANCE = 1e-12


class WeightKind(str, Enum):
    BOSONIC_COHERENT = "bosonic_coherent"
    SPIN_COHERENT = "spin_coherent"


class InitialState(BaseModel):
    """
    b_up|up> + b_down|down> on the central spin, bath populations |d_n|^2 of a coherent state.

    truncation is the cutoff n_max; None selects min(2j, ceil(alpha^2 + 10 alpha + 20)).
    """
    model_config = ConfigDict(frozen=True, extra="forbid")

    b_up: complex = Field(default=complex(2 ** -0.5))
    b_down: complex = Field(default=complex(2 ** -0.5))
    alpha_probe: float = Field(default=2.0, ge=0)
    weight_kind: WeightKind = WeightKind.BOSONIC_COHERENT
    truncation: Optional[int] = Field(default=None, ge=0)

    @model_validator(mode="after")
    def check_normalised(self) -> "InitialState":
        norm = abs(self.b_up) ** 2 + abs(self.b_down) ** 2
        if abs(norm - 1) > NORM_TOLERANCE:
            raise ValueError(f"|b_up|^2 + |b_down|^2 must be 1, got {norm!r}")
        return self
