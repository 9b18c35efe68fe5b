"""
Lattice command implementation for the molkit CLI.

    molkit lattice check FILE|SPEC
    molkit lattice decompose FILE|SPEC
    molkit lattice congruences FILE|SPEC
    molkit lattice si FILE|SPEC
"""

import argparse
import logging

from cli.commands.common import lattice_arg
from src.config.settings import Settings
from src.core.report import Report
from src.finlat import (
    check_toll_closure,
    congruence_lattice,
    decompose_finite_mol,
    is_subdirectly_irreducible,
    validate,
)

logger = logging.getLogger(__name__)

ACTIONS = ("check", "decompose", "congruences", "si")


def add_arguments(subparsers) -> None:
    parser = subparsers.add_parser('lattice', help='Analyse a finite ortholattice')
    parser.add_argument('action', choices=ACTIONS, help='Analysis to run')
    parser.add_argument('lattice', help='Lattice file or corpus spec (mo:3, prod:mo:2,bool:1, ...)')


def check_lattice(args: argparse.Namespace) -> Report:
    return validate(lattice_arg(args.lattice))


def decompose_lattice(args: argparse.Namespace) -> Report:
    l = lattice_arg(args.lattice)
    decomposition = decompose_finite_mol(l)
    report = Report("lattice decompose")
    report.add("isomorphism", True, f"{l.size} elements onto {' x '.join(decomposition.labels)}")
    report.data.update(decomposition.to_dict())
    logger.info(f"Decomposed {args.lattice} into {decomposition.labels}")
    return report.finish()


def list_congruences(args: argparse.Namespace) -> Report:
    l = lattice_arg(args.lattice)
    congruences = congruence_lattice(l)
    report = Report("lattice congruences")
    for index, q in enumerate(congruences):
        report.extend(check_toll_closure(q), prefix=f"theta{index}/")
    report.data["count"] = len(congruences)
    report.data["congruences"] = [q.to_dict() for q in congruences]
    return report.finish()


def subdirectly_irreducible(args: argparse.Namespace) -> Report:
    result = is_subdirectly_irreducible(lattice_arg(args.lattice))
    report = Report("lattice si")
    report.add("criteria-agree", result.agrees,
               "congruence enumeration agrees with the perspectivity criterion",
               None if result.agrees else result.to_dict())
    report.data.update(result.to_dict())
    return report.finish()


def handle(args: argparse.Namespace, settings: Settings) -> Report:
    """Dispatch a lattice action."""
    handlers = {
        "check": check_lattice,
        "decompose": decompose_lattice,
        "congruences": list_congruences,
        "si": subdirectly_irreducible,
    }
    return handlers[args.action](args)
