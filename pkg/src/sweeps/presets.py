"""
Figure-reproduction recipes.
Each preset is a fully resolved SweepConfig; parameters the figures do not state (N, grids, probe
amplitude) are fixed here and listed as reproduction choices in the emitted header.
"""

import math
import logging
from typing import Dict, List

from ..models.params import ModelParams
from ..models.probe import InitialState
from ..models.sweep import (
    GridSpec,
    Quantity,
    SeriesOverride,
    SweepAxis,
    SweepConfig,
    TimeScale,
)
from ..utils.errors import ConfigError

logger = logging.getLogger(__name__)

AUTO_N_CHOICE = "N chosen per series by the mean-field fill policy (n_g <= N/10 at the largest g_tilde)"


def _delta_family(label_prefix: str, deltas: List[float]) -> List[SeriesOverride]:
    return [SeriesOverride(label=f"{label_prefix}{delta:+g}", delta=delta) for delta in deltas]


def _fig1a() -> SweepConfig:
    return SweepConfig(
        name="fig1a",
        model=ModelParams(omega0=100.0, omega=0.5, delta=0.0, N=200),
        grid=GridSpec(start=0.5, stop=1.5, points=400),
        quantity=Quantity.D2_ENERGY,
        auto_N=True,
        series=_delta_family("delta", [-0.25, -0.1, 0.1, 0.25]),
        reproduction_choices=[
            AUTO_N_CHOICE,
            "g_tilde grid [0.5, 1.5] with 400 points",
            "continuum ground energy for the second difference",
        ],
    )


def _fig1b() -> SweepConfig:
    return SweepConfig(
        name="fig1b",
        model=ModelParams(omega0=100.0, omega=0.5, delta=0.0, N=200),
        grid=GridSpec(start=0.0, stop=1.5, points=151),
        quantity=Quantity.ENERGY,
        companions=[Quantity.ENERGY_MF],
        auto_N=True,
        series=_delta_family("delta", [-0.25, -0.1, 0.1, 0.25]),
        reproduction_choices=[AUTO_N_CHOICE, "g_tilde grid [0, 1.5] with 151 points",
                              "exact integer-sector ground energy"],
    )


def _fig2(name: str, deltas: List[float], start: float, quantity: Quantity,
          companions: List[Quantity], extra: List[str]) -> SweepConfig:
    return SweepConfig(
        name=name,
        model=ModelParams(omega0=50.0, omega=0.5, delta=0.0, N=200),
        grid=GridSpec(start=start, stop=1.5, points=151),
        quantity=quantity,
        companions=companions,
        auto_N=True,
        series=_delta_family("delta", deltas),
        reproduction_choices=[AUTO_N_CHOICE, f"g_tilde grid [{start:g}, 1.5] with 151 points"] + extra,
    )


def _fig2a() -> SweepConfig:
    return _fig2("fig2a", [0.0, -0.1, -0.25, -0.4], 0.0, Quantity.N_G_EXACT, [Quantity.N_G_MF], [])


def _fig2b() -> SweepConfig:
    return _fig2(
        "fig2b", [0.1, 0.25, 0.4], 0.9, Quantity.N_G_EXACT, [Quantity.N_G_MF],
        ["delta values {0.1, 0.25, 0.4} (not listed individually in the figure)"],
    )


def _fig3() -> SweepConfig:
    return _fig2(
        "fig3", [-0.4, -0.25, -0.1, 0.0, 0.1, 0.25, 0.4], 0.0, Quantity.COHERENCE, [],
        ["delta family is the union of the excitation-number families"],
    )


def _fig4a() -> SweepConfig:
    return SweepConfig(
        name="fig4a",
        model=ModelParams(omega0=1000.0, omega=0.1, delta=0.0, N=200),
        grid=GridSpec(start=0.5, stop=1.5, points=201),
        quantity=Quantity.QFI,
        auto_N=True,
        series=[SeriesOverride(label=f"eta{eta:g}", eta=eta) for eta in (1e2, 1e3, 1e4)],
        reproduction_choices=[
            AUTO_N_CHOICE,
            "g_tilde grid [0.5, 1.5] with 201 points",
            "delta = 0",
            "sector crossings flagged; their values scale as 1/delta_g^2",
        ],
    )


def _fig4b() -> SweepConfig:
    return SweepConfig(
        name="fig4b",
        model=ModelParams(omega0=1000.0, omega=0.1, delta=0.0, N=200),
        grid=GridSpec(start=0.5, stop=1.5, points=201),
        quantity=Quantity.QFI,
        auto_N=True,
        allow_inverted=True,
        series=_delta_family("delta", [-0.15, -0.05, 0.05, 0.15]),
        reproduction_choices=[
            AUTO_N_CHOICE,
            "g_tilde grid [0.5, 1.5] with 201 points",
            "delta values {-0.15, -0.05, 0.05, 0.15}",
            "A back-solved from |omega_tilde*omega0_tilde| when the product is negative",
        ],
    )


def _fig5(name: str, periods: float) -> SweepConfig:
    return SweepConfig(
        name=name,
        model=ModelParams(omega0=100.0, omega=0.5, delta=0.0, N=200),
        grid=GridSpec(start=0.8, stop=1.0, points=401),
        quantity=Quantity.INVERSE_VARIANCE,
        probe=InitialState(alpha_probe=2.0),
        time=2 * math.pi * periods,
        time_scale=TimeScale.INVERSE_OMEGA_TILDE,
        series=_delta_family("delta", [0.0, 0.05, 0.1]),
        reproduction_choices=[
            "N = 200",
            "bosonic coherent probe with alpha = 2",
            "g_tilde grid [0.8, 1.0] with 401 points",
            "delta values {0, 0.05, 0.1}",
        ],
    )


PRESETS = {
    "fig1a": _fig1a,
    "fig1b": _fig1b,
    "fig2a": _fig2a,
    "fig2b": _fig2b,
    "fig3": _fig3,
    "fig4a": _fig4a,
    "fig4b": _fig4b,
    "fig5a": lambda: _fig5("fig5a", 1.0),
    "fig5b": lambda: _fig5("fig5b", 2.0),
}


def preset_names() -> List[str]:
    return list(PRESETS)


def preset(name: str) -> SweepConfig:
    """
    Look up a figure recipe.

    Args:
        name: One of preset_names()

    Returns:
        Fully resolved SweepConfig

    Raises:
        ConfigError: unknown preset name
    """
    if name not in PRESETS:
        raise ConfigError(f"unknown preset {name!r}; available presets: {', '.join(PRESETS)}")
    config = PRESETS[name]()
    logger.debug(f"Resolved preset {name}: {len(config.expand())} sweep(s)")
    return config


def preset_table() -> Dict[str, str]:
    """One-line description per preset for the CLI listing."""
    return {name: f"{cfg.quantity.value} over {cfg.sweep_axis.value}, {len(cfg.series) or 1} series"
            for name, cfg in ((name, factory()) for name, factory in PRESETS.items())}
