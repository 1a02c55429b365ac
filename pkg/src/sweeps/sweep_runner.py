"""
Sweep runner.
Resolves a SweepConfig (including the default N policy), evaluates every grid point through the
solver modules, and assembles deterministic SweepResults.
"""

import logging
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from .. import __version__
from ..models.params import ModelParams, derive
from ..models.results import Flag, Phase
from ..models.sweep import (
    Quantity,
    SweepAxis,
    SweepConfig,
    SweepResult,
    SweepRow,
    TimeScale,
)
from ..solvers.ground_state_solver import energy_second_derivative, find_ground_state, relaxed_ground_state
from ..solvers.mean_field_solver import mf_excitation
from ..solvers.metrology_solver import inverse_variance, probe_weights, qfi_point, sigma_x_expectation
from ..utils.errors import DomainError
from ..utils.parallel import ordered_map

logger = logging.getLogger(__name__)

POLICY_START_N = 100
POLICY_FILL_RATIO = 0.1

PointResult = Tuple[float, Tuple[Flag, ...]]


class SweepRunner:
    """
    Runs sweeps and preset families.
    """

    def __init__(self, workers: int = 1, n_cap: int = 6400):
        """
        Initialize the runner.

        Args:
            workers: Threads used per sweep (results do not depend on it)
            n_cap: Largest N the automatic N policy may choose
        """
        self.workers = max(1, int(workers))
        self.n_cap = n_cap

    def resolve_N(self, config: SweepConfig) -> Tuple[int, str]:
        """
        Default N policy for exact-ground-state sweeps.

        N doubles from 100 up to n_cap; the first N whose mean-field n_g at the largest swept coupling
        is at most N/10 (with omega0_tilde > 0) wins. Otherwise the allowed N with the smallest
        n_g/N is used, or the largest allowed N when the mean field is undefined.

        Returns:
            (N, description for the header)
        """
        g_max = config.grid.stop if config.sweep_axis == SweepAxis.G_TILDE else config.g_tilde
        candidates = []
        N = POLICY_START_N
        while N <= self.n_cap:
            candidates.append(N)
            N *= 2

        allowed: List[Tuple[int, Optional[float]]] = []
        for N in candidates:
            template = config.model.model_copy(update={"N": N})
            derived = derive(template)
            if derived.omega0_tilde <= 0:
                continue
            if derived.omega_tilde * derived.omega0_tilde <= 0 and not config.allow_inverted:
                continue
            n_mf = None
            try:
                solution = mf_excitation(template.with_g_tilde(g_max, allow_inverted=config.allow_inverted))
                if solution.phase != Phase.INADMISSIBLE:
                    n_mf = solution.n_g
            except DomainError:
                pass
            if n_mf is not None and n_mf <= POLICY_FILL_RATIO * N:
                return N, f"first N with mean-field n_g={n_mf:.4g} <= N/10 at g_tilde={g_max}"
            allowed.append((N, n_mf))

        if not allowed:
            raise DomainError(
                f"no N in [{POLICY_START_N}, {self.n_cap}] keeps omega0_tilde > 0 for series '{config.name}'"
            )
        with_mf = [(N, n) for N, n in allowed if n is not None]
        if with_mf:
            N, n_mf = min(with_mf, key=lambda item: (item[1] / item[0], item[0]))
            return N, f"smallest n_g/N={n_mf / N:.4g} among allowed N (no N reached n_g <= N/10)"
        N = allowed[-1][0]
        return N, "largest allowed N (mean field undefined)"

    def _evolution_time(self, config: SweepConfig, template: ModelParams) -> Optional[float]:
        if config.time is None:
            return None
        if config.time_scale == TimeScale.INVERSE_OMEGA_TILDE:
            return config.time / derive(template).omega_tilde
        return config.time

    def _point_function(self, config: SweepConfig, template: ModelParams) -> Callable[[float], PointResult]:
        quantity = config.quantity
        allow_inverted = config.allow_inverted
        time = self._evolution_time(config, template)
        truncation = ()
        if config.probe is not None:
            if probe_weights(config.probe, template.N).truncation_warning:
                truncation = (Flag.TRUNCATION_WARNING,)

        def coordinates(x: float) -> Tuple[ModelParams, float, Optional[float]]:
            # Returns (template for this point, g_tilde, time)
            if config.sweep_axis == SweepAxis.G_TILDE:
                return template, x, time
            if config.sweep_axis == SweepAxis.DELTA:
                return template.model_copy(update={"delta": x}), config.g_tilde, time
            if config.sweep_axis == SweepAxis.ETA:
                return template.model_copy(update={"omega0": x * template.omega}), config.g_tilde, time
            return template, config.g_tilde, x

        def evaluate(x: float) -> PointResult:
            point_template, g_tilde, t = coordinates(x)
            if quantity == Quantity.D2_ENERGY:
                curve = energy_second_derivative(point_template, [g_tilde], h=config.steps.h_fd,
                                                 mode=config.energy_mode, allow_inverted=allow_inverted)
                return curve.d2[0], ()
            if quantity == Quantity.QFI:
                value, crossing = qfi_point(point_template, g_tilde, config.steps.delta_g_qfi,
                                            allow_inverted=allow_inverted)
                return value, ((Flag.SECTOR_CROSSING,) if crossing else ())
            if quantity == Quantity.INVERSE_VARIANCE:
                value = inverse_variance(point_template, config.probe, t, g_tilde, mode=config.derivative_mode)
                if value is None:
                    return float("nan"), (Flag.UNDEFINED,) + truncation
                return value, truncation

            params = point_template.with_g_tilde(g_tilde, allow_inverted=allow_inverted)
            if quantity == Quantity.SIGMA_X:
                return sigma_x_expectation(params, config.probe, t), truncation
            if quantity == Quantity.ENERGY:
                return find_ground_state(params).energy, ()
            if quantity == Quantity.N_G_EXACT:
                return float(find_ground_state(params).n_g), ()
            if quantity == Quantity.N_G_CONTINUUM:
                return relaxed_ground_state(params).x, ()

            solution = mf_excitation(params)
            if solution.phase == Phase.INADMISSIBLE:
                return float("nan"), (Flag.UNDEFINED,)
            if quantity == Quantity.N_G_MF:
                return solution.n_g, ()
            if quantity == Quantity.COHERENCE:
                return solution.coherence, ()
            return solution.energy, ()

        def guarded(x: float) -> PointResult:
            try:
                return evaluate(x)
            except DomainError as e:
                logger.debug(f"{config.name}: undefined point {x}: {e}")
                return float("nan"), (Flag.UNDEFINED,)

        return guarded

    def _header(self, config: SweepConfig, template: ModelParams, n_note: Optional[str]) -> Dict[str, str]:
        derived = derive(template)
        header = {
            "tool": f"spinqpt {__version__}",
            "name": config.name,
            "quantity": config.quantity.value,
            "axis": config.sweep_axis.value,
            "grid": f"start={config.grid.start!r} stop={config.grid.stop!r} points={config.grid.points}",
            "params": (f"omega0={template.omega0!r} omega={template.omega!r} delta={template.delta!r} "
                       f"N={template.N}"),
            "derived": (f"eta={derived.eta!r} omega_tilde={derived.omega_tilde!r} "
                        f"omega0_tilde={derived.omega0_tilde!r} lambda_c={derived.lambda_c!r}"),
            "coupling": ("A = g_tilde*sqrt(|omega_tilde*omega0_tilde|/N)" if config.allow_inverted
                         else "A = g_tilde*sqrt(omega_tilde*omega0_tilde/N)"),
            "steps": f"h_fd={config.steps.h_fd!r} delta_g_qfi={config.steps.delta_g_qfi!r}",
        }
        if config.quantity == Quantity.D2_ENERGY:
            header["energy_mode"] = config.energy_mode
        if config.sweep_axis != SweepAxis.G_TILDE:
            header["g_tilde"] = repr(config.g_tilde)
        if config.probe is not None:
            probe = config.probe
            header["probe"] = (f"b_up={probe.b_up!r} b_down={probe.b_down!r} alpha={probe.alpha_probe!r} "
                               f"weights={probe.weight_kind.value} truncation={probe.truncation}")
            header["derivative_mode"] = config.derivative_mode
        time = self._evolution_time(config, template)
        if time is not None:
            header["time"] = f"{time!r} ({config.time!r} x {config.time_scale.value})"
        if n_note:
            header["N_policy"] = n_note
        return header

    def run_sweep(self, config: SweepConfig) -> SweepResult:
        """
        Evaluate one single-series config.

        Points where a quantity is undefined are kept as flagged NaN rows.

        Args:
            config: Single-series sweep configuration

        Returns:
            SweepResult with one row per grid point
        """
        if config.series or config.companions:
            raise DomainError("run_sweep takes a single-series config; use run_family for families")

        template = config.model
        n_note = None
        if config.auto_N:
            N, n_note = self.resolve_N(config)
            template = template.model_copy(update={"N": N})
            logger.info(f"{config.name}: N={N} ({n_note})")

        grid = np.linspace(config.grid.start, config.grid.stop, config.grid.points)
        evaluate = self._point_function(config, template)
        results = ordered_map(evaluate, [float(x) for x in grid], self.workers)

        rows = [SweepRow(axis=float(x), value=float(value), flags=tuple(flags))
                for x, (value, flags) in zip(grid, results)]
        undefined = sum(1 for row in rows if Flag.UNDEFINED in row.flags)
        if undefined:
            logger.warning(f"{config.name}: {undefined} of {len(rows)} points undefined")
        return SweepResult(
            name=config.name,
            header=self._header(config, template, n_note),
            rows=rows,
            reproduction_choices=tuple(config.reproduction_choices),
        )

    def run_family(self, config: SweepConfig) -> List[SweepResult]:
        """Expand a family config and run every member in order."""
        members = config.expand()
        logger.info(f"Running '{config.name}': {len(members)} sweep(s) on {self.workers} worker(s)")
        return [self.run_sweep(member) for member in members]


def run_sweep(config: SweepConfig, workers: int = 1) -> SweepResult:
    """Run a single-series sweep with a default runner."""
    return SweepRunner(workers=workers).run_sweep(config)
