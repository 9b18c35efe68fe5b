"""
Geometry command implementation for the molkit CLI.

    molkit geom components FILE.geo|LATTICE
    molkit geom polarity FILE.geo|LATTICE
    molkit geom closure FILE.geo|LATTICE --points p,q,r
    molkit geom represent LATTICE [--sub a,b,...] [--quotient a/b]
"""

import argparse
import logging

from cli.commands.common import lattice_arg, names_arg, quotient_arg
from src.config.settings import Settings
from src.core.constants import GEOMETRY_SUFFIX
from src.core.exceptions import ParseError
from src.core.report import Report
from src.finlat import congruence_from_quotients, subalgebra, validate
from src.geometry import (
    PointGeometry,
    canonical_representation,
    check_atom_collinearity,
    check_polarity,
    components,
    components_orthogonal,
    geometry_span,
    load_geometry,
    points_of,
    quotient_representation,
    subgeometry_closure,
    subspace_lattice,
)

logger = logging.getLogger(__name__)

ACTIONS = ("components", "polarity", "closure", "represent")


def add_arguments(subparsers) -> None:
    parser = subparsers.add_parser('geom', help='Point geometries and representations')
    parser.add_argument('action', choices=ACTIONS, help='Analysis to run')
    parser.add_argument('source', help=f'Geometry file ({GEOMETRY_SUFFIX}) or lattice file/spec')
    parser.add_argument('--points', help='Comma separated seed points for closure')
    parser.add_argument('--sub', help='Comma separated elements of the represented subalgebra')
    parser.add_argument('--quotient', help="Kernel generator 'a/b' for the represented quotient")


def _geometry(source: str) -> PointGeometry:
    if source.endswith(GEOMETRY_SUFFIX):
        return load_geometry(source)
    return points_of(lattice_arg(source))


def geometry_components(args: argparse.Namespace, settings: Settings) -> Report:
    g = _geometry(args.source)
    parts = components(g)
    report = Report("geom components")
    if g.perp is not None:
        report.add("orthogonal", components_orthogonal(g, parts),
                   "points of distinct components are orthogonal")
    report.data["components"] = [sorted(p) for p in parts]
    return report.finish()


def geometry_polarity(args: argparse.Namespace, settings: Settings) -> Report:
    g = _geometry(args.source)
    report = check_polarity(g)
    bound = settings.get_limits()['subspace_lattice_bound']
    lattice = subspace_lattice(g, bound)
    flags = validate(lattice).data
    report.add("subspace-mol", lattice.has_ortho and bool(flags.get("is_mol")),
               "S(P) with X -> X^perp is a modular ortholattice")
    report.data["subspace_lattice_size"] = lattice.size
    return report


def geometry_closure(args: argparse.Namespace, settings: Settings) -> Report:
    seed = names_arg(args.points)
    if not seed:
        raise ParseError("closure needs --points")
    g = _geometry(args.source)
    cap = settings.get_limits()['closure_cap']
    closed = subgeometry_closure(g, seed, cap=cap)
    span = geometry_span(g, seed)
    report = Report("geom closure")
    report.add("below-span", closed <= span, "the closure lies in the span of the seed")
    report.data["closure"] = sorted(closed)
    report.data["span"] = sorted(span)
    return report.finish()


def geometry_represent(args: argparse.Namespace, settings: Settings) -> Report:
    m = lattice_arg(args.source)
    sub = names_arg(args.sub) or list(m.names)
    report = Report("geom represent")
    report.extend(check_atom_collinearity(m), prefix="collinearity/")
    if args.quotient:
        source = subalgebra(m, sub)
        theta = congruence_from_quotients(source, [quotient_arg(args.quotient)])
        rep = quotient_representation(m, sub, theta)
    else:
        rep = canonical_representation(m, sub)
    report.extend(rep.report)
    report.data.update(rep.report.data)
    report.data["representation"] = rep.to_dict()
    logger.info(f"Represented {rep.source.size} classes on {len(rep.geometry.points)} points")
    return report.finish()


def handle(args: argparse.Namespace, settings: Settings) -> Report:
    """Dispatch a geometry action."""
    handlers = {
        "components": geometry_components,
        "polarity": geometry_polarity,
        "closure": geometry_closure,
        "represent": geometry_represent,
    }
    return handlers[args.action](args, settings)
