"""
Witness command implementation for the molkit CLI.

    molkit witness ab --k K [--a P/Q --b P/Q]
    molkit witness m2 --k K [--verify]
    molkit witness lemma-m [--a P/Q --b P/Q --m M]
    molkit witness m1 --k K
    molkit witness double --in U.sub [--in V.sub]
    molkit witness family --a P/Q --b P/Q [--depth J]
"""

import argparse
import logging

from cli.commands.common import form_arg
from src.config.settings import Settings
from src.core.constants import DEFAULT_FAMILY_DEPTH
from src.core.exceptions import CapExceededError, ParseError
from src.core.report import Report
from src.exactla import parse_rational
from src.subspaces import load_subspace
from src.witness import (
    WitnessConfig,
    build_m2,
    check_doubling,
    invertibility_family_check,
    positive_definite_report,
    verify_lemma_m,
    verify_m1_chain,
)

logger = logging.getLogger(__name__)

ACTIONS = ("ab", "m2", "lemma-m", "m1", "double", "family")


def add_arguments(subparsers) -> None:
    parser = subparsers.add_parser('witness', help='Explicit frame-generated constructions')
    parser.add_argument('action', choices=ACTIONS, help='Construction to check')
    parser.add_argument('--k', type=int, default=1, help='Level of the recursion')
    parser.add_argument('--a', default='1', help='Positive rational seed a')
    parser.add_argument('--b', default='1', help='Positive rational seed b')
    parser.add_argument('--m', type=int, default=1, help='Block size for lemma-m')
    parser.add_argument('--verify', action='store_true',
                        help='m2: check positive definiteness and the psi-identities')
    parser.add_argument('--depth', type=int, default=DEFAULT_FAMILY_DEPTH,
                        help='Largest j of the invertibility family')
    parser.add_argument('--in', dest='inputs', action='append', default=[],
                        help='Subspace file for double (repeat for a second operand)')
    parser.add_argument('--form', help='Gram matrix file or diag:a,b,... for double')


def _seeds(args: argparse.Namespace):
    return parse_rational(args.a), parse_rational(args.b)


def chain_replay(args: argparse.Namespace, settings: Settings) -> Report:
    a, b = _seeds(args)
    cap = settings.get_limits()['chain_cap']
    try:
        return verify_m1_chain(args.k, cap=cap, a=a, b=b)
    except CapExceededError as e:
        logger.error(f"chain replay stopped: {e}")
        report = e.partial
        report.add("cap", False, str(e), {"cap": cap})
        return report


def doubling(args: argparse.Namespace, settings: Settings) -> Report:
    if not 1 <= len(args.inputs) <= 2:
        raise ParseError("double takes one or two --in files")
    space = form_arg(args.form)
    u = load_subspace(args.inputs[0], space)
    v = load_subspace(args.inputs[1], u.ambient) if len(args.inputs) == 2 else u.perp()
    return check_doubling(u, v)


def handle(args: argparse.Namespace, settings: Settings) -> Report:
    """Dispatch a witness action."""
    if args.action == "ab":
        config = WitnessConfig(args.k, *_seeds(args))
        report = positive_definite_report(config.k, config.a, config.b)
        report.data["config"] = config.to_dict()
        return report
    if args.action == "m2":
        instance = build_m2(WitnessConfig(args.k, *_seeds(args)), verify=args.verify)
        instance.report.data.update(instance.to_dict())
        return instance.report
    if args.action == "lemma-m":
        a, b = _seeds(args)
        return verify_lemma_m(args.m, a, b, args.depth)
    if args.action == "m1":
        return chain_replay(args, settings)
    if args.action == "double":
        return doubling(args, settings)
    return invertibility_family_check(*_seeds(args), depth=args.depth)
