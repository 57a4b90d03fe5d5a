#!/usr/bin/env python3
"""
dimspread
Command-line entry point: compute | sweep | verify | list-measures
"""

import argparse
import sys

from loguru import logger

from src.config import get_settings
from src.core.handlers import cmd_compute, cmd_list_measures, cmd_sweep, cmd_verify
from src.core.measures.registry import MEASURES
from src.core.output.writers import FORMATS
from src.core.verification.suites import MATRICES, SUITES
from src.exceptions import SpreadError


def configure_logging(level: str | None = None) -> None:
    """Single stderr sink; stdout carries data only"""
    settings = get_settings()
    logger.remove()
    logger.add(
        sys.stderr,
        level=(level or settings.log_level).upper(),
        format="{time:YYYY-MM-DD HH:mm:ss} - {name} - {level} - {message}",
    )


def _add_state_arguments(parser: argparse.ArgumentParser, sweep: bool = False) -> None:
    group = parser.add_argument_group("state")
    group.add_argument("--system", choices=["hydrogenic", "oscillator"], required=not sweep)
    group.add_argument("--Z", type=float, help="nuclear charge (hydrogenic)")
    group.add_argument("--lambda", dest="lam", type=float, help="oscillator strength")
    group.add_argument("--D", type=int, required=not sweep, help="dimension D ≥ 2")
    group.add_argument("--n", type=int, required=not sweep)
    group.add_argument("--l", type=int, default=None if sweep else 0)
    group.add_argument("--mu", help="comma list μ₂,…,μ_{D-1}")
    group.add_argument("--m", type=int, help="|m| shorthand: whole μ chain equal to |m|")


def _add_measure_arguments(parser: argparse.ArgumentParser, sweep: bool = False) -> None:
    group = parser.add_argument_group("measures")
    group.add_argument(
        "--space",
        choices=["position", "momentum", "both"],
        default=None if sweep else "position",
    )
    group.add_argument(
        "--measure", action="append", choices=sorted(MEASURES), help="repeatable"
    )
    group.add_argument("--q", type=float, help="Rényi/Tsallis order")
    group.add_argument("--alpha", type=float, help="moment order or lower LMC-Rényi order")
    group.add_argument("--beta", type=float, help="upper LMC-Rényi order")
    group.add_argument("--p", type=float, help="position order of the Rényi sum")
    group.add_argument(
        "--method",
        choices=["auto", "closed", "quadrature"],
        default=None if sweep else "auto",
    )
    group.add_argument("--predict", action="store_true", default=None if sweep else False)


def _add_output_arguments(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("output")
    group.add_argument("--format", choices=FORMATS, default="csv")
    group.add_argument(
        "--no-timestamp", action="store_true", help="omit the timestamp metadata line"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dimspread",
        description="Spreading, entropy and complexity measures of D-dimensional "
        "hydrogenic and oscillator states",
    )
    parser.add_argument("--log-level", help="override DIMSPREAD_LOG_LEVEL")
    commands = parser.add_subparsers(dest="command", required=True)

    compute = commands.add_parser("compute", help="measures of a single state")
    _add_state_arguments(compute)
    _add_measure_arguments(compute)
    _add_output_arguments(compute)
    compute.add_argument(
        "--cross-check", action="store_true", help="add quadrature-vs-closed columns"
    )
    compute.set_defaults(handler=cmd_compute)

    sweep = commands.add_parser("sweep", help="measures over a range of D, q or alpha")
    sweep.add_argument("--config", help="key = value sweep manifest; flags override it")
    _add_state_arguments(sweep, sweep=True)
    _add_measure_arguments(sweep, sweep=True)
    _add_output_arguments(sweep)
    group = sweep.add_argument_group("sweep")
    group.add_argument("--variable", choices=["D", "q", "alpha"])
    group.add_argument("--values", help="explicit comma list")
    group.add_argument("--start", type=float)
    group.add_argument("--stop", type=float)
    group.add_argument("--count", type=int)
    group.add_argument("--scale", choices=["linear", "log"])
    group.add_argument("--keep-going", action="store_true", default=None)
    group.add_argument("--workers", type=int, help="worker threads (DIMSPREAD_MAX_WORKERS)")
    sweep.set_defaults(handler=cmd_sweep)

    verify = commands.add_parser("verify", help="run the verification suites")
    verify.add_argument("--suite", choices=[*SUITES, "all"], default="all")
    verify.add_argument("--matrix", choices=MATRICES, default="small")
    verify.set_defaults(handler=cmd_verify)

    listing = commands.add_parser("list-measures", help="print the measure catalogue")
    listing.set_defaults(handler=cmd_list_measures)
    return parser


def main(argv: list[str] | None = None) -> int:
    """Main application entry point"""
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level)
    logger.info(f"Starting dimspread {args.command}")
    try:
        code = args.handler(args, argv=argv)
    except SpreadError as e:
        sys.stderr.write(e.describe() + "\n")
        return e.exit_code
    logger.info(f"dimspread {args.command} finished with exit code {code}")
    return code


if __name__ == "__main__":
    sys.exit(main())
