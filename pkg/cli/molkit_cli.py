#!/usr/bin/env python3
"""
Unified command-line interface for molkit.

This module provides a single entry point for batch verifications:
- lattice: checks, decompositions and congruences of finite ortholattices
- space: operations in subspace lattices of Q^n under a positive definite form
- geom: point geometries, polarities and geometric representations
- frame: frames of subspace lattices and their coordinate rings
- witness: the A_k / B_k constructions and the frame generation replays
- term: term evaluation, identities and orthoimplications
- corpus: lattice files for the test corpus

Exit status is 0 when every check passes, 1 when a check fails or a
computation is refused, 2 on usage and input errors.
"""

import argparse
import importlib
import json
import logging
import sys
from typing import List, Optional

from tabulate import tabulate

from src.config.settings import Settings
from src.core.exceptions import (
    ConfigurationError,
    MolkitError,
    ParseError,
    TermSyntaxError,
    UnknownSpecError,
)
from src.core.report import Report, to_jsonable
from src.logging import setup_logging

COMMANDS = ("lattice", "space", "geom", "frame", "witness", "term", "corpus")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

_INPUT_ERRORS = (ParseError, UnknownSpecError, ConfigurationError, TermSyntaxError, OSError)

logger = logging.getLogger("molkit")


def _command_module(name: str):
    return importlib.import_module(f"cli.commands.{name}_command")


def build_parser() -> argparse.ArgumentParser:
    """Parser with the global flags and one subparser group per command."""
    parser = argparse.ArgumentParser(
        prog='molkit',
        description='Exact computation in modular ortholattices',
        formatter_class=argparse.RawDescriptionHelpFormatter
    )
    parser.add_argument('--json', action='store_true', help='Print the report as JSON')
    parser.add_argument('--seed', type=int, help='Seed for sampled checks')
    parser.add_argument('--config', help='YAML or JSON file merged over the defaults')
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='More log output on stderr (-v info, -vv debug)')

    subparsers = parser.add_subparsers(dest='command', help='Command to run')
    for name in COMMANDS:
        _command_module(name).add_arguments(subparsers)
    return parser


def render_text(report: Report) -> str:
    """Checks as a table followed by the report data."""
    lines = [f"# {report.command}"]
    rows = [[c.name, c.status, c.detail] for c in report.checks]
    if rows:
        lines.append(tabulate(rows, headers=["check", "status", "detail"], tablefmt="simple"))
    for check in report.failures():
        if check.witness:
            lines.append(f"{check.name}: {json.dumps(to_jsonable(check.witness))}")
    for key, value in report.data.items():
        value = to_jsonable(value)
        if isinstance(value, (dict, list)):
            value = json.dumps(value)
        lines.append(f"{key}: {value}")
    lines.append("PASS" if report.passed else "FAIL")
    return "\n".join(lines)


def render_json(report: Report) -> str:
    return json.dumps(report.to_dict(), indent=2)


def _settings(args: argparse.Namespace) -> Settings:
    settings = Settings.from_file(args.config) if args.config else Settings.get_instance()
    if args.seed is not None:
        settings.set('sampling', 'seed', args.seed)
        settings.set('molkit', 'seed', args.seed)
    return settings


def _log_level(settings: Settings, verbose: int) -> str:
    if verbose >= 2:
        return 'DEBUG'
    if verbose == 1:
        return 'INFO'
    return str(settings.get_logging_params()['level'])


def run(argv: Optional[List[str]] = None) -> int:
    """
    Parse arguments, run one command and print its report.

    Args:
        argv: Arguments without the program name (sys.argv[1:] when omitted)

    Returns:
        Exit status
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    if not args.command:
        parser.print_help()
        return EXIT_USAGE

    try:
        settings = _settings(args)
    except ConfigurationError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE

    params = settings.get_logging_params()
    # the library loggers live under src.*, the command loggers under cli.*
    for name in ('src', 'cli', 'molkit'):
        setup_logging(name, _log_level(settings, args.verbose), bool(params['file_logging']))

    try:
        logger.info(f"Running {args.command}")
        report = _command_module(args.command).handle(args, settings)
    except _INPUT_ERRORS as e:
        logger.error(f"Invalid input: {e}")
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except MolkitError as e:
        logger.error(f"{args.command} failed: {e}")
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_FAILED

    print(render_json(report) if args.json else render_text(report))
    return EXIT_OK if report.passed else EXIT_FAILED


def main() -> None:
    """Main entry point for the molkit CLI."""
    sys.exit(run())


if __name__ == "__main__":
    main()
