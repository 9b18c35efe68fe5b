"""
Space command implementation for the molkit CLI.

    molkit space ortho --form F.mat --in U.sub
    molkit space meet --in U.sub --in V.sub
    molkit space join --in U.sub --in V.sub
    molkit space perspective --in U.sub --in V.sub
    molkit space polarity --form diag:1,2,3 --samples 50
"""

import argparse
import logging
from typing import List

import numpy as np

from cli.commands.common import form_arg
from src.config.settings import Settings
from src.core.exceptions import ParseError
from src.core.report import Report
from src.subspaces import (
    Subspace,
    check_polarity_sample,
    is_perspective,
    load_subspace,
    random_atom,
    write_subspace,
)

logger = logging.getLogger(__name__)

ACTIONS = ("ortho", "meet", "join", "perspective", "polarity")
_OPERANDS = {"ortho": 1, "meet": 2, "join": 2, "perspective": 2, "polarity": 0}


def add_arguments(subparsers) -> None:
    parser = subparsers.add_parser('space', help='Operations in subspace lattices of Q^n')
    parser.add_argument('action', choices=ACTIONS, help='Operation')
    parser.add_argument('--form', help='Gram matrix file or diag:a,b,...; identity when omitted')
    parser.add_argument('--in', dest='inputs', action='append', default=[],
                        help='Subspace file (repeat for binary operations)')
    parser.add_argument('--dim', type=int, help='Dimension for polarity samples without --form')
    parser.add_argument('--samples', type=int, help='Number of random atoms for polarity')


def _operands(args: argparse.Namespace) -> List[Subspace]:
    expected = _OPERANDS[args.action]
    if len(args.inputs) != expected:
        raise ParseError(f"{args.action} takes {expected} --in file(s), got {len(args.inputs)}")
    space = form_arg(args.form)
    return [load_subspace(path, space) for path in args.inputs]


def _describe(report: Report, name: str, u: Subspace) -> None:
    report.data[name] = {"dim": u.dim, "text": write_subspace(u)}


def handle(args: argparse.Namespace, settings: Settings) -> Report:
    """Run one subspace operation and describe the result."""
    if args.action == "polarity":
        sampling = settings.get_sampling_params()
        space = form_arg(args.form, args.dim or 3)
        rng = np.random.default_rng(sampling['seed'])
        count = args.samples or sampling['count']
        atoms = [random_atom(space, rng, sampling['entry_range']) for _ in range(count)]
        report = check_polarity_sample(space, atoms)
        report.command = "space polarity"
        report.data["samples"] = count
        report.data["seed"] = sampling['seed']
        return report

    operands = _operands(args)
    report = Report(f"space {args.action}")
    if args.action == "ortho":
        u = operands[0]
        result = u.perp()
        report.add("complement", (u & result).is_zero and (u + result).is_full,
                   "u & u^perp = 0 and u + u^perp = 1")
        report.add("dimension", result.dim == u.ambient.dimension - u.dim,
                   "dim u^perp = n - dim u")
        _describe(report, "result", result)
    elif args.action in ("meet", "join"):
        u, v = operands
        result = u & v if args.action == "meet" else u + v
        report.add("modular-dimension", (u + v).dim + (u & v).dim == u.dim + v.dim,
                   "dim(u + v) + dim(u & v) = dim u + dim v")
        _describe(report, "result", result)
    else:
        u, v = operands
        witness = is_perspective(u, v)
        report.add("perspective", witness is not None, "common complement in [0, u + v]",
                   None if witness is not None else {"dims": [u.dim, v.dim]})
        if witness is not None:
            _describe(report, "witness", witness)
    logger.info(f"space {args.action} on {len(operands)} operand(s)")
    return report.finish()
