"""
Command-line entry point for spinqpt.
Runs configured sweeps and figure presets, prints spectra and runs the numerical self-check.
"""

import sys
import logging
import argparse
from pathlib import Path
from typing import List, Optional, Sequence

from pydantic import ValidationError

try:
    from .config import configure_logging, get_settings
    from .models.params import ModelParams
    from .models.sweep import SweepResult, load_sweep_config
    from .solvers.dense_oracle import dense_oracle_spectrum
    from .solvers.spectrum_solver import analytic_spectrum
    from .sweeps.presets import preset, preset_table
    from .sweeps.self_check import CHECK_SEED, run_self_check
    from .sweeps.sweep_runner import SweepRunner
    from .utils.csv_writer import emit
    from .utils.errors import ConfigError, DomainError, OutputError, ResourceLimitError
except ImportError:
    # Run directly as a script
    from src.config import configure_logging, get_settings
    from src.models.params import ModelParams
    from src.models.sweep import SweepResult, load_sweep_config
    from src.solvers.dense_oracle import dense_oracle_spectrum
    from src.solvers.spectrum_solver import analytic_spectrum
    from src.sweeps.presets import preset, preset_table
    from src.sweeps.self_check import CHECK_SEED, run_self_check
    from src.sweeps.sweep_runner import SweepRunner
    from src.utils.csv_writer import emit
    from src.utils.errors import ConfigError, DomainError, OutputError, ResourceLimitError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_DOMAIN = 3


class UsageError(Exception):
    """Bad command line."""


class CliParser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors map to exit code 1 instead of argparse's 2."""

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = CliParser(prog="spinqpt", description="XXZ central spin model: spectra, sweeps and figure presets.")
    parser.add_argument("--workers", type=int, default=None, help="threads per sweep (default SPINQPT_WORKERS)")
    parser.add_argument("--log-level", default=None, help="logging level (default SPINQPT_LOG_LEVEL)")
    commands = parser.add_subparsers(dest="command", parser_class=CliParser)
    commands.required = True

    sweep = commands.add_parser("sweep", help="run a sweep described by a YAML config")
    sweep.add_argument("--config", required=True, help="YAML sweep document")
    sweep.add_argument("--out", default=None, help="CSV file, or directory for curve families")
    sweep.add_argument("--plot", action="store_true", help="also write an SVG plot per CSV")

    recipe = commands.add_parser("preset", help="run a figure preset")
    recipe.add_argument("name", nargs="?", help="preset name; omit with --list")
    recipe.add_argument("--list", action="store_true", help="list available presets")
    recipe.add_argument("--out", default=None, help="CSV file, or directory for curve families")
    recipe.add_argument("--plot", action="store_true", help="also write an SVG plot per CSV")

    spectrum = commands.add_parser("spectrum", help="print the full sorted spectrum")
    spectrum.add_argument("--omega0", type=float, required=True)
    spectrum.add_argument("--omega", type=float, required=True)
    spectrum.add_argument("--A", type=float, required=True)
    spectrum.add_argument("--delta", type=float, required=True)
    spectrum.add_argument("--N", type=int, required=True)
    spectrum.add_argument("--oracle", action="store_true", help="use dense diagonalisation instead of the blocks")

    check = commands.add_parser("check", help="run the numerical self-check")
    check.add_argument("--draws", type=int, default=100, help="random draws per identity check")
    check.add_argument("--seed", type=int, default=CHECK_SEED, help="seed of the random draws")
    return parser


def output_paths(results: Sequence[SweepResult], out: Optional[str], default_dir: str) -> List[Path]:
    """
    A single result goes to `out` when it names a .csv file; otherwise every result is written as
    <name>.csv inside the directory `out` (or the default output directory).
    """
    if out is not None and len(results) == 1 and Path(out).suffix == ".csv":
        return [Path(out)]
    directory = Path(out) if out is not None else Path(default_dir)
    return [directory / f"{result.name}.csv" for result in results]


def _emit_all(results: Sequence[SweepResult], out: Optional[str], plot: bool, default_dir: str,
              preset_name: Optional[str] = None) -> None:
    for result, path in zip(results, output_paths(results, out, default_dir)):
        for written in emit(result, path, emit_plot=plot, preset=preset_name):
            print(written)


def run_sweep_command(args, runner: SweepRunner, default_dir: str) -> int:
    config = load_sweep_config(args.config, overrides={
        "output_path": args.out,
        "emit_plot": True if args.plot else None,
    })
    results = runner.run_family(config)
    _emit_all(results, config.output_path, config.emit_plot, default_dir)
    return EXIT_OK


def run_preset_command(args, runner: SweepRunner, default_dir: str) -> int:
    if args.list or args.name is None:
        if args.name is None and not args.list:
            raise UsageError("spinqpt preset: a preset name is required")
        for name, description in preset_table().items():
            print(f"{name}\t{description}")
        return EXIT_OK
    config = preset(args.name)
    results = runner.run_family(config)
    out = args.out if args.out is not None else str(Path(default_dir) / args.name)
    _emit_all(results, out, args.plot, default_dir, preset_name=args.name)
    return EXIT_OK


def run_spectrum_command(args, oracle_cap: int) -> int:
    params = ModelParams(omega0=args.omega0, omega=args.omega, A=args.A, delta=args.delta, N=args.N)
    if args.oracle:
        energies = dense_oracle_spectrum(params, cap=oracle_cap).energies
    else:
        energies = analytic_spectrum(params)
    for energy in energies:
        print(repr(float(energy)))
    return EXIT_OK


def run_check_command(args) -> int:
    results = run_self_check(draws=args.draws, seed=args.seed)
    for result in results:
        print(f"{'PASS' if result.passed else 'FAIL'}  {result.name}: {result.detail}")
    return EXIT_OK if all(result.passed for result in results) else EXIT_DOMAIN


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parse arguments, dispatch the command and map failures to exit codes.

    Returns:
        0 success, 1 usage or config error, 2 I/O error, 3 domain or resource error
    """
    settings = get_settings()
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        print(e, file=sys.stderr)
        return EXIT_USAGE

    configure_logging(args.log_level or settings.log_level)
    runner = SweepRunner(workers=args.workers or settings.workers, n_cap=settings.n_cap)

    try:
        if args.command == "sweep":
            return run_sweep_command(args, runner, settings.output_dir)
        if args.command == "preset":
            return run_preset_command(args, runner, settings.output_dir)
        if args.command == "spectrum":
            return run_spectrum_command(args, settings.oracle_cap)
        return run_check_command(args)
    except (UsageError, ConfigError, ValidationError) as e:
        logger.error(str(e))
        return EXIT_USAGE
    except OutputError as e:
        logger.error(str(e))
        return EXIT_IO
    except (DomainError, ResourceLimitError) as e:
        logger.error(str(e))
        # Sweeps flag undefined points; a domain error here means the run itself is misconfigured
        return EXIT_USAGE if args.command in ("sweep", "preset") else EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
