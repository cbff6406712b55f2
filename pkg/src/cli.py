"""Command-line interface: `filter run | synth | verify`."""
import argparse
import sys
from pathlib import Path
from typing import List, Optional

from dotenv import load_dotenv
from pydantic import ValidationError

from src.data_loader import DataLoader
from src.exceptions import (
    BaseAppException,
    ConfigurationError,
    DataLoadError,
    DataValidationError,
    NumericalError,
    PlanValidationError,
)
from src.logger import get_logger, set_console_level
from src.models.plan_models import SynthKind
from src.services import FilterService, SynthService, VerifyService

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_CONFIG = 2
EXIT_IO = 3
EXIT_NUMERIC = 4


def exit_code_for(error: BaseException) -> int:
    """Map an exception to the process exit code."""
    if isinstance(error, (ConfigurationError, PlanValidationError, DataValidationError, ValidationError)):
        return EXIT_CONFIG
    if isinstance(error, DataLoadError):
        return EXIT_IO
    if isinstance(error, NumericalError):
        return EXIT_NUMERIC
    return EXIT_FAILURE


def _parse_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(
        prog="filter",
        description="Hermite/Laguerre spectral filtering of sampled signals.",
    )
    parser.add_argument("--log-level", dest="log_level", choices=["DEBUG", "INFO", "WARNING", "ERROR"],
                        help="Console log threshold (default: LOG_LEVEL)")
    commands = parser.add_subparsers(dest="command", required=True)

    run = commands.add_parser("run", help="Apply a filter plan to a CSV signal")
    run.add_argument("--config", dest="config_path", type=Path, required=True, help="JSON filter plan")
    run.add_argument("--input", dest="input_path", type=Path, required=True)
    run.add_argument("--output", dest="output_path", type=Path, required=True)
    run.add_argument("--report", dest="report_path", type=Path)
    run.add_argument("--t0", type=float, help="Grid origin for single-column input")
    run.add_argument("--dt", type=float, help="Grid step for single-column input")

    synth = commands.add_parser("synth", help="Write a synthetic test signal")
    synth.add_argument("--kind", type=SynthKind, choices=list(SynthKind), required=True)
    synth.add_argument("--n", type=int, default=512)
    synth.add_argument("--t0", type=float, default=-8.0)
    synth.add_argument("--dt", type=float, default=0.03125)
    synth.add_argument("--out", dest="out_path", type=Path, required=True)
    synth.add_argument("--mix", help='hermite_mix weights, "n:w,n:w"')
    synth.add_argument("--base", type=SynthKind, choices=list(SynthKind), default=SynthKind.GAUSSIAN_PULSE)
    synth.add_argument("--snr-db", dest="snr_db", type=float, default=20.0)
    synth.add_argument("--seed", type=int, default=0)

    verify = commands.add_parser("verify", help="Run the embedded invariant suite")
    verify.add_argument("--check", dest="checks", action="append", help="Run only this check (repeatable)")

    return parser.parse_args(argv)


def _run(args: argparse.Namespace) -> int:
    plan = DataLoader().load_plan(args.config_path)
    report = FilterService().run(
        plan, args.input_path, args.output_path, report_path=args.report_path, t0=args.t0, dt=args.dt
    )
    print(f"input_energy={report.input_energy:.12g} output_energy={report.output_energy:.12g} "
          f"residual_l2={report.residual_l2:.3e}")
    return EXIT_OK


def _synth(args: argparse.Namespace) -> int:
    if args.base == SynthKind.NOISY:
        raise DataValidationError("--base cannot be 'noisy'")
    signal, comment = SynthService().synth_signal(
        args.kind, args.n, args.t0, args.dt,
        mix=args.mix, base=args.base, snr_db=args.snr_db, seed=args.seed,
    )
    DataLoader().write_signal(args.out_path, signal, comment=comment)
    return EXIT_OK


def _verify(args: argparse.Namespace) -> int:
    service = VerifyService()
    unknown = [name for name in args.checks or [] if name not in service.checks]
    if unknown:
        raise ConfigurationError(f"Unknown check(s): {', '.join(unknown)}; available: {', '.join(service.checks)}")
    results = service.run_all(args.checks)
    for result in results:
        print(result.line())
    failed = [r.name for r in results if not r.passed]
    if failed:
        print(f"{len(failed)} of {len(results)} check(s) failed: {', '.join(failed)}")
        return EXIT_NUMERIC
    print(f"all {len(results)} checks passed")
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    load_dotenv()
    args = _parse_args(argv)
    if args.log_level:
        set_console_level(args.log_level)
    handlers = {"run": _run, "synth": _synth, "verify": _verify}
    try:
        return handlers[args.command](args)
    except (BaseAppException, ValidationError) as e:
        code = exit_code_for(e)
        logger.error(f"{args.command} failed ({e.__class__.__name__}): {e}")
        print(f"error: {e}", file=sys.stderr)
        return code
