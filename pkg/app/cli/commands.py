"""Command-line front end: evaluate constants, reproduce the convergence tables.

Results go to stdout; diagnostics (structlog JSON and error messages) go to stderr.
"""

import argparse
import sys
from collections.abc import Sequence
from fractions import Fraction
from typing import TextIO

from pydantic import ValidationError

from app.core.config import CliSettings, get_cli_settings
from app.core.exceptions import (
    EXIT_OK,
    EXIT_USAGE,
    ConfigurationError,
    ConvergenceError,
    SeriesError,
    exit_code_for,
)
from app.core.logging import get_logger, set_run_id, setup_logging
from app.features.engines.engines_models import EngineConfig, EvaluationReport
from app.features.engines.engines_service import (
    direct_evaluate,
    euler_maclaurin_evaluate,
    evaluate_constant_report,
    romberg_evaluate,
)
from app.features.series.series_models import SeriesFamily, SeriesSpec
from app.features.series.series_service import estimate_direct_terms, render_direct_terms
from app.features.tables.tables_service import (
    TableNumber,
    build_table,
    records_data,
    render_csv,
    render_plain,
    to_record,
)
from app.shared.hpreal.hpreal import format_significant

logger = get_logger(__name__)

PROG = "loglog-series"
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")
DEFAULT_DIGITS = 15
DEFAULT_FORMAT = "plain"


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return value


def _positive_rational(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"invalid number: {text!r}") from None
    if value <= 0:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return value


def build_parser() -> argparse.ArgumentParser:
    """Argument parser for the ``loglog-series`` command."""
    parser = argparse.ArgumentParser(
        prog=PROG,
        description=(
            "Evaluate sum 1/[k log k (log log k)^alpha] (series c) and "
            "sum 1/[k (log k)^alpha] (series d) to high precision."
        ),
        allow_abbrev=False,
    )
    parser.add_argument("--series", choices=[f.value for f in SeriesFamily], help="series family")
    parser.add_argument("--alpha", type=int, help="series exponent (>= 2)")
    parser.add_argument(
        "--engine",
        choices=["em", "romberg", "direct"],
        help="acceleration engine (default: em)",
    )
    parser.add_argument("--n", dest="switch_index", type=int, help="switch-over index N")
    parser.add_argument("--s-max", type=int, help="highest correction order")
    parser.add_argument("--k-hat", type=int, help="Romberg truncation index")
    parser.add_argument(
        "--digits", type=_positive_int, help=f"significant digits printed (default: {DEFAULT_DIGITS})"
    )
    parser.add_argument(
        "--precision", type=_positive_int, default=50, help="working digits (default: 50)"
    )
    parser.add_argument("--table", type=int, choices=[1, 2], help="reproduce a convergence table")
    parser.add_argument(
        "--format", choices=["plain", "csv"], help=f"output format (default: {DEFAULT_FORMAT})"
    )
    parser.add_argument(
        "--estimate-delta",
        type=_positive_rational,
        help="print the number of terms direct summation needs for accuracy DELTA",
    )
    parser.add_argument(
        "--log-level", choices=LOG_LEVELS, default="WARNING", help="stderr log level"
    )
    return parser


def _check_modes(parser: argparse.ArgumentParser, args: argparse.Namespace) -> None:
    series_flags = {
        "--series": args.series,
        "--alpha": args.alpha,
        "--engine": args.engine,
        "--n": args.switch_index,
        "--s-max": args.s_max,
        "--k-hat": args.k_hat,
    }
    given = [flag for flag, value in series_flags.items() if value is not None]
    if args.digits is not None:
        given.append("--digits")
    if args.table is not None:
        conflicts = [*given, *(["--estimate-delta"] if args.estimate_delta is not None else [])]
        if conflicts:
            parser.error(f"--table cannot be combined with {', '.join(conflicts)}")
    elif args.estimate_delta is not None:
        conflicts = [*given, *(["--format"] if args.format is not None else [])]
        if conflicts:
            parser.error(f"--estimate-delta cannot be combined with {', '.join(conflicts)}")
    elif args.series is None or args.alpha is None:
        parser.error("either --table, --estimate-delta or both --series and --alpha are required")

    # Defaults are applied here so that explicit flags stay detectable above.
    if args.digits is None:
        args.digits = DEFAULT_DIGITS
    if args.format is None:
        args.format = DEFAULT_FORMAT


def _evaluate(args: argparse.Namespace, settings: CliSettings) -> EvaluationReport:
    spec = SeriesSpec(family=SeriesFamily(args.series), alpha=args.alpha)
    precision = settings.precision()
    engine = args.engine or "em"

    if engine == "em" and args.switch_index is None:
        if args.s_max is not None or args.k_hat is not None:
            raise ConfigurationError("--s-max and --k-hat need --n")
        return evaluate_constant_report(
            spec,
            args.digits,
            precision,
            settings.escalation_switch_indices,
            settings.escalation_s_max,
        )
    if args.switch_index is None:
        raise ConfigurationError(f"the {engine} engine needs --n")
    if engine != "romberg" and args.k_hat is not None:
        raise ConfigurationError("--k-hat applies to the romberg engine only")

    default_s_max = {"em": settings.em_s_max, "romberg": settings.romberg_s_max, "direct": 0}
    cfg = EngineConfig(
        switch_index=args.switch_index,
        s_max=default_s_max[engine] if args.s_max is None else args.s_max,
        k_hat=args.k_hat,
        precision=precision,
    )
    if engine == "romberg":
        return romberg_evaluate(spec, cfg)
    if engine == "direct":
        return direct_evaluate(spec, cfg)
    return euler_maclaurin_evaluate(spec, cfg)


def cmd_eval(args: argparse.Namespace, settings: CliSettings, stdout: TextIO) -> int:
    """Evaluate one series and print its value.

    Args:
        args: Parsed flags.
        settings: Command-line settings.
        stdout: Destination of the result.

    Returns:
        Exit status 0.
    """
    report = _evaluate(args, settings)
    if args.format == "csv":
        stdout.write(render_csv(records_data([to_record(report, digits=args.digits)])))
    else:
        stdout.write(format_significant(report.value, args.digits) + "\n")
    logger.info(
        "cli.eval.render_completed",
        series=report.spec.label,
        engine=report.engine,
        switch_index=report.config.switch_index,
        s_max=report.config.s_max,
    )
    return EXIT_OK


def cmd_table(which: TableNumber, fmt: str, settings: CliSettings, stdout: TextIO) -> int:
    """Print one of the convergence tables.

    Args:
        which: 1 (Romberg) or 2 (Euler-Maclaurin).
        fmt: "plain" or "csv".
        settings: Command-line settings.
        stdout: Destination of the table.

    Returns:
        Exit status 0.
    """
    table = build_table(which, settings.precision())
    stdout.write(render_csv(table) if fmt == "csv" else render_plain(table))
    logger.info("cli.table.render_completed", table=which, format=fmt)
    return EXIT_OK


def cmd_estimate(delta: Fraction, settings: CliSettings, stdout: TextIO) -> int:
    """Print how many terms direct summation needs for absolute accuracy delta."""
    ctx = settings.precision()
    stdout.write(render_direct_terms(estimate_direct_terms(delta, ctx)) + "\n")
    return EXIT_OK


def run(argv: Sequence[str] | None = None, stdout: TextIO | None = None) -> int:
    """Parse flags, dispatch to a command and map failures to exit codes.

    Args:
        argv: Command-line arguments without the program name.
        stdout: Destination of results; defaults to sys.stdout.

    Returns:
        0 on success, 1 on numerical or convergence failure, 2 on usage errors.
    """
    out = stdout if stdout is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _check_modes(parser, args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    settings = get_cli_settings(working_digits=args.precision, log_level=args.log_level)
    setup_logging(log_level=settings.log_level)
    set_run_id()
    try:
        if args.table is not None:
            return cmd_table(args.table, args.format, settings, out)
        if args.estimate_delta is not None:
            return cmd_estimate(args.estimate_delta, settings, out)
        return cmd_eval(args, settings, out)
    except (SeriesError, ValidationError) as exc:
        print(f"{PROG}: error: {exc}", file=sys.stderr)
        if isinstance(exc, ConvergenceError):
            print(f"{PROG}: previous = {exc.previous}, last = {exc.last}", file=sys.stderr)
        return exit_code_for(exc)
