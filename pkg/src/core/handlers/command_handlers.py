"""
Command handlers for the dimspread CLI

Each handler takes the parsed argparse namespace and an output stream and
returns the process exit code. Domain errors propagate to main(), which maps
them onto exit codes.
"""

import argparse
import sys
from typing import Any, TextIO

from loguru import logger

from src.core.asymptotics.predictions import CATALOGUE
from src.core.measures.registry import MEASURES, MeasureParams
from src.core.output.models import OutputRow
from src.core.output.writers import build_meta, write_rows
from src.core.states.models import QuantumState, Space, SystemKind
from src.core.sweep.models import load_sweep_file, sweep_spec_from_mapping
from src.core.sweep.runner import (
    PREDICTION_IDS,
    measure_rows,
    residual_conventions,
    run_sweep,
)
from src.core.verification.suites import SuiteReport, run_suite
from src.exceptions import DomainError
from src.utils import log_execution_time, parse_int_list

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1


def _command_line(argv: list[str] | None) -> str:
    return " ".join(["dimspread", *(argv if argv is not None else sys.argv[1:])])


def resolve_strength(system: SystemKind, z: float | None, lam: float | None) -> float:
    """Pick --Z for hydrogenic and --lambda for oscillator states"""
    if system is SystemKind.HYDROGENIC:
        if lam is not None:
            raise DomainError("--lambda applies to oscillator states; use --Z")
        return 1.0 if z is None else z
    if z is not None:
        raise DomainError("--Z applies to hydrogenic states; use --lambda")
    return 1.0 if lam is None else lam


def _parse_mu(text: str) -> tuple[int, ...]:
    try:
        return tuple(parse_int_list(text))
    except ValueError as e:
        raise DomainError(f"--mu must be a comma list of integers: {e}") from e


def state_from_args(args: argparse.Namespace) -> QuantumState:
    system = SystemKind(args.system)
    strength = resolve_strength(system, args.Z, args.lam)
    if args.mu is not None:
        if args.m is not None:
            raise DomainError("pass either --mu or --m, not both")
        return QuantumState(
            system=system,
            dimension=args.D,
            n=args.n,
            l=args.l,
            mu=_parse_mu(args.mu),
            strength=strength,
        )
    return QuantumState.from_m(system, args.D, args.n, args.l, args.m or 0, strength)


def spaces_from_arg(space: str) -> list[Space]:
    if space == "both":
        return [Space.POSITION, Space.MOMENTUM]
    return [Space(space)]


def _emit(
    rows: list[OutputRow],
    args: argparse.Namespace,
    stream: TextIO,
    measure_ids: list[str],
    argv: list[str] | None,
    predict: bool,
) -> None:
    meta = build_meta(
        _command_line(argv),
        timestamp=not args.no_timestamp,
        residual=residual_conventions(measure_ids) if predict else None,
    )
    write_rows(rows, stream, meta, args.format)


@log_execution_time
def cmd_compute(
    args: argparse.Namespace, stream: TextIO | None = None, argv: list[str] | None = None
) -> int:
    """One row per (measure, space) for a single state"""
    stream = stream or sys.stdout
    state = state_from_args(args)
    measures = args.measure or ["heisenberg2"]
    params = MeasureParams(alpha=args.alpha, beta=args.beta, q=args.q, p=args.p, method=args.method)
    spaces = spaces_from_arg(args.space)
    logger.info(f"Computing {measures} for {state.label()}")

    rows: list[OutputRow] = []
    for measure_id in measures:
        rows.extend(
            measure_rows(
                state,
                measure_id,
                spaces,
                params,
                predict=args.predict,
                cross_check=args.cross_check,
            )
        )
    _emit(rows, args, stream, measures, argv, args.predict)
    return EXIT_OK


# argparse dest -> sweep manifest key
_SWEEP_FLAGS = {
    "system": "system",
    "Z": "Z",
    "lam": "lambda",
    "D": "D",
    "n": "n",
    "l": "l",
    "m": "m",
    "mu": "mu",
    "space": "space",
    "measure": "measure",
    "variable": "variable",
    "values": "values",
    "start": "start",
    "stop": "stop",
    "count": "count",
    "scale": "scale",
    "q": "q",
    "alpha": "alpha",
    "beta": "beta",
    "p": "p",
    "method": "method",
    "predict": "predict",
    "keep_going": "keep_going",
}


def sweep_mapping(args: argparse.Namespace) -> dict[str, Any]:
    """Manifest keys overlaid with the flags given on the command line"""
    raw: dict[str, Any] = {}
    if args.config:
        raw.update({k.strip().lower(): v for k, v in load_sweep_file(args.config).items()})
    for dest, key in _SWEEP_FLAGS.items():
        value = getattr(args, dest, None)
        if value is None or value is False:
            continue
        if key in ("Z", "lambda"):
            for other in ("z", "lambda", "strength"):
                raw.pop(other, None)
        raw[key.lower()] = value
    return raw


@log_execution_time
def cmd_sweep(
    args: argparse.Namespace, stream: TextIO | None = None, argv: list[str] | None = None
) -> int:
    """Rows in sweep order; with --keep-going failed rows are skipped"""
    stream = stream or sys.stdout
    spec = sweep_spec_from_mapping(sweep_mapping(args))
    outcome = run_sweep(spec, max_workers=args.workers)
    _emit(outcome.rows, args, stream, spec.measures, argv, spec.predict)
    return outcome.exit_code


def format_report(reports: list[SuiteReport]) -> str:
    lines = []
    for report in reports:
        worst = report.worst()
        status = "PASS" if report.passed else "FAIL"
        summary = f"{report.suite}: {status} ({len(report.checks)} checks"
        if worst is not None:
            summary += f", worst margin {worst.margin:.3e} at {worst.name} / {worst.subject}"
        lines.append(summary + ")")
        for check in report.failures:
            lines.append(
                f"  FAIL {check.name} / {check.subject}: margin {check.margin:.3e}"
                + (f" ({check.detail})" if check.detail else "")
            )
    return "\n".join(lines) + "\n"


@log_execution_time
def cmd_verify(
    args: argparse.Namespace, stream: TextIO | None = None, argv: list[str] | None = None
) -> int:
    """Run verification suites; exit 1 when any property fails"""
    stream = stream or sys.stdout
    reports = run_suite(args.suite, args.matrix)
    stream.write(format_report(reports))
    if all(report.passed for report in reports):
        return EXIT_OK
    return EXIT_VERIFICATION_FAILED


def cmd_list_measures(
    args: argparse.Namespace, stream: TextIO | None = None, argv: list[str] | None = None
) -> int:
    """Print the measure catalogue"""
    stream = stream or sys.stdout
    for spec in MEASURES.values():
        scope = "per-space" if spec.per_space else "combined"
        parameters = ",".join(spec.parameters) or "-"
        prediction = PREDICTION_IDS.get(spec.measure_id)
        predicted = f"predict:{prediction}" if prediction in CATALOGUE else "predict:-"
        stream.write(f"{spec.measure_id}\t{scope}\t{parameters}\t{predicted}\t{spec.description}\n")
    return EXIT_OK
