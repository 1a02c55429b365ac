"""
Sweep configuration and result records.
A SweepConfig describes one axis grid and one quantity, optionally repeated over a family of series.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Dict, List, Optional, Tuple

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from .params import ModelParams
from .probe import InitialState
from .results import Flag
from ..utils.errors import ConfigError

logger = logging.getLogger(__name__)


class SweepAxis(str, Enum):
    G_TILDE = "g_tilde"
    DELTA = "delta"
    ETA = "eta"
    TIME = "time"


class Quantity(str, Enum):
    ENERGY = "energy"
    ENERGY_MF = "energy_mf"
    D2_ENERGY = "d2_energy"
    N_G_EXACT = "n_g_exact"
    N_G_CONTINUUM = "n_g_continuum"
    N_G_MF = "n_g_mf"
    COHERENCE = "coherence"
    QFI = "qfi"
    INVERSE_VARIANCE = "inverse_variance"
    SIGMA_X = "sigma_x"


DYNAMICS_QUANTITIES = (Quantity.INVERSE_VARIANCE, Quantity.SIGMA_X)


class TimeScale(str, Enum):
    ABSOLUTE = "absolute"
    INVERSE_OMEGA_TILDE = "inverse_omega_tilde"


class GridSpec(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    start: float
    stop: float
    points: int = Field(..., ge=2)

    @model_validator(mode="after")
    def check_order(self) -> "GridSpec":
        if not self.start < self.stop:
            raise ValueError(f"grid start {self.start} must be below stop {self.stop}")
        return self


class StepSpec(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    h_fd: float = Field(default=1e-3, gt=0)
    delta_g_qfi: float = Field(default=1e-5, gt=0)


class SeriesOverride(BaseModel):
    """One member of a curve family; unset fields keep the base model value."""
    model_config = ConfigDict(frozen=True, extra="forbid")

    label: str
    delta: Optional[float] = None
    eta: Optional[float] = Field(default=None, gt=0)
    N: Optional[int] = Field(default=None, ge=1)


class SweepConfig(BaseModel):
    """
    Resolved description of a sweep.

    Axis values other than g_tilde need a fixed g_tilde; dynamics quantities need a probe and, unless
    the axis is time, an evolution time (scaled by 1/omega_tilde when time_scale says so).
    """
    model_config = ConfigDict(frozen=True, extra="forbid")

    name: str = "sweep"
    model: ModelParams
    sweep_axis: SweepAxis = SweepAxis.G_TILDE
    grid: GridSpec
    quantity: Quantity
    output_path: Optional[str] = None
    emit_plot: bool = False
    probe: Optional[InitialState] = None
    steps: StepSpec = StepSpec()
    g_tilde: Optional[float] = Field(default=None, ge=0)
    time: Optional[float] = None
    time_scale: TimeScale = TimeScale.ABSOLUTE
    # Ground energy behind d2_energy only; the energy quantity is always the exact integer-sector one
    energy_mode: str = Field(default="continuum", pattern="^(continuum|integer)$")
    derivative_mode: str = Field(default="analytic", pattern="^(analytic|finite_difference)$")
    allow_inverted: bool = False
    auto_N: bool = False
    series: List[SeriesOverride] = Field(default_factory=list)
    companions: List[Quantity] = Field(default_factory=list)
    reproduction_choices: List[str] = Field(default_factory=list)

    @model_validator(mode="after")
    def check_quantity_fields(self) -> "SweepConfig":
        dynamics = self.quantity in DYNAMICS_QUANTITIES or any(q in DYNAMICS_QUANTITIES for q in self.companions)
        if dynamics and self.probe is None:
            raise ValueError(f"quantity {self.quantity.value} needs a probe state")
        if dynamics and self.sweep_axis != SweepAxis.TIME and self.time is None:
            raise ValueError("dynamics quantities need an evolution time unless the axis is time")
        if self.sweep_axis == SweepAxis.TIME and not dynamics:
            raise ValueError("the time axis is only meaningful for sigma_x and inverse_variance")
        if self.sweep_axis != SweepAxis.G_TILDE and self.g_tilde is None:
            raise ValueError(f"axis {self.sweep_axis.value} needs a fixed g_tilde")
        labels = [s.label for s in self.series]
        if len(labels) != len(set(labels)):
            raise ValueError("series labels must be unique")
        return self

    def expand(self) -> List["SweepConfig"]:
        """
        Split a family into single-series, single-quantity configs.

        Returns:
            One config per (series, quantity) pair, in declaration order
        """
        members = self.series or [SeriesOverride(label="")]
        expanded = []
        for member in members:
            update = {}
            if member.delta is not None:
                update["delta"] = member.delta
            if member.eta is not None:
                update["omega0"] = member.eta * self.model.omega
            if member.N is not None:
                update["N"] = member.N
            model = self.model.model_copy(update=update)
            for quantity in [self.quantity] + list(self.companions):
                suffix = "_".join(part for part in (member.label, quantity.value) if part)
                expanded.append(self.model_copy(update={
                    "name": f"{self.name}_{suffix}" if suffix else self.name,
                    "model": model,
                    "quantity": quantity,
                    "series": [],
                    "companions": [],
                }))
        return expanded


@dataclass(frozen=True)
class SweepRow:
    axis: float
    value: float
    flags: Tuple[Flag, ...] = ()


@dataclass(frozen=True)
class SweepResult:
    """Header (ordered key/value echo of the resolved run) and one row per grid point."""
    name: str
    header: Dict[str, str]
    rows: List[SweepRow]
    reproduction_choices: Tuple[str, ...] = ()


def load_sweep_config(path: str, overrides: Optional[Dict] = None) -> SweepConfig:
    """
    Read a YAML sweep document and validate it.

    Args:
        path: YAML file
        overrides: Top-level keys that replace file values (CLI flags)

    Returns:
        Validated SweepConfig

    Raises:
        ConfigError: unreadable file, bad YAML, or validation failure
    """
    try:
        with open(path, "r", encoding="utf-8") as f:
            document = yaml.safe_load(f)
    except OSError as e:
        raise ConfigError(f"cannot read config: {e.strerror or e}", path) from e
    except yaml.YAMLError as e:
        raise ConfigError(f"invalid YAML: {e}", path) from e

    if not isinstance(document, dict):
        raise ConfigError("config must be a mapping at the top level", path)
    document.update({k: v for k, v in (overrides or {}).items() if v is not None})

    try:
        config = SweepConfig.model_validate(document)
    except ValidationError as e:
        raise ConfigError(f"invalid sweep config: {e}", path) from e
    logger.info(f"Loaded sweep config '{config.name}' from {Path(path)}")
    return config
