"""
Geometric representations of finite MOLs.

A representation sends every element a of a subalgebra to the set of
points below it. For a quotient by a congruence with neutral filter F the
points are restricted to Q, the atoms below every member of F.
"""

import logging
from itertools import combinations
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

import numpy as np

from src.core.exceptions import RepresentationFailure
from src.core.report import Report
from src.finlat.congruence import QuotientSet, congruence_relation, quotient_lattice
from src.finlat.constructors import subalgebra
from src.finlat.lattice import FiniteOrtholattice
from src.geometry.geometry import PointGeometry, PointSet, points_of

logger = logging.getLogger(__name__)


class RepresentationMap:
    """
    Assignment of point sets to the elements of a finite ortholattice.

    Attributes:
        source: The represented lattice
        geometry: Target point geometry with its orthogonality
        assignment: Element name -> set of point names
        report: Checks run while building the map
    """

    def __init__(self, source: FiniteOrtholattice, geometry: PointGeometry,
                 assignment: Dict[str, PointSet], report: Optional[Report] = None):
        self.source = source
        self.geometry = geometry
        self.assignment = assignment
        self.report = report or Report("representation")

    def __getitem__(self, element: str) -> PointSet:
        return self.assignment[element]

    @property
    def verified(self) -> bool:
        return self.report.passed

    def to_dict(self) -> Dict[str, Any]:
        return {
            "assignment": {a: sorted(ps) for a, ps in self.assignment.items()},
            "points": list(self.geometry.points),
            "verified": self.verified,
        }


def _span(g: PointGeometry, points: Iterable[str]) -> FrozenSet[str]:
    return g.names(g.span_ids(g.ids(points)))


def _orthogonal_sets(g: PointGeometry, a: Iterable[str], b: Iterable[str]) -> bool:
    ia, ib = sorted(g.ids(a)), sorted(g.ids(b))
    if not ia or not ib:
        return True
    return bool(g.perp[np.ix_(ia, ib)].all())


def check_embedding(rep: RepresentationMap) -> Report:
    """
    Verify a 0-1 lattice embedding into the subspace lattice with eta(a) orthogonal to eta(a').
    """
    l, g, eta = rep.source, rep.geometry, rep.assignment
    report = Report("representation")
    names = l.names
    everything = frozenset(g.points)
    report.add("bottom", eta[names[l.bottom]] == frozenset(), "eta(0) is empty")
    report.add("top", eta[names[l.top]] == everything, "eta(1) is every point")
    images = [eta[x] for x in names]
    report.add("injective", len(set(images)) == l.size, "distinct elements have distinct images")
    bad_meet = bad_join = None
    for a, b in combinations(range(l.size), 2):
        if bad_meet is None and eta[names[l.m(a, b)]] != eta[names[a]] & eta[names[b]]:
            bad_meet = {"a": names[a], "b": names[b]}
        if bad_join is None and eta[names[l.j(a, b)]] != _span(g, eta[names[a]] | eta[names[b]]):
            bad_join = {"a": names[a], "b": names[b]}
    report.add("meets", bad_meet is None, "eta(a·b) = eta(a) & eta(b)", bad_meet)
    report.add("joins", bad_join is None, "eta(a + b) = span(eta(a) | eta(b))", bad_join)
    if l.has_ortho and g.perp is not None:
        bad = [names[a] for a in range(l.size)
               if not _orthogonal_sets(g, eta[names[a]], eta[names[l.o(a)]])]
        report.add("orthogonal", not bad, "eta(a) is orthogonal to eta(a')",
                   {"elements": bad} if bad else None)
    return report.finish()


def canonical_representation(m: FiniteOrtholattice, sub: Iterable) -> RepresentationMap:
    """
    eta(a) = atoms of m below a, for a in a subalgebra of m.

    Args:
        m: Finite atomic MOL
        sub: Elements of a subalgebra (names or indices)

    Raises:
        NotSubalgebraError: If sub is not closed under +, · and '
    """
    source = subalgebra(m, sub)
    g = points_of(m)
    assignment = {}
    for name in source.names:
        a = m[name]
        assignment[name] = frozenset(m.names[p] for p in m.atoms() if m.le(p, a))
    rep = RepresentationMap(source, g, assignment)
    rep.report = check_embedding(rep)
    induced = induced_point_orthogonality(rep)
    rep.report.extend(check_induced_orthogonality(rep, induced), prefix="induced-")
    return rep


def induced_point_orthogonality(rep: RepresentationMap) -> Set[Tuple[str, str]]:
    """
    p orthogonal to q iff p in eta(a) and q in eta(a') for some a of the source.

    Returns:
        Set of ordered pairs (both orders present)
    """
    l = rep.source
    pairs: Set[Tuple[str, str]] = set()
    for a in range(l.size):
        for p in rep.assignment[l.names[a]]:
            for q in rep.assignment[l.names[l.o(a)]]:
                pairs.add((p, q))
                pairs.add((q, p))
    return pairs


def check_induced_orthogonality(rep: RepresentationMap,
                                pairs: Set[Tuple[str, str]]) -> Report:
    """
    Check the induced relation is an anisotropic orthogonality and that
    eta(a') equals eta(a)^perp computed from it.
    """
    g, l = rep.geometry, rep.source
    report = Report("induced orthogonality")
    isotropic = sorted(p for p, q in pairs if p == q)
    report.add("anisotropic", not isotropic, "no point is orthogonal to itself",
               {"points": isotropic} if isotropic else None)
    partners: Dict[str, Set[str]] = {p: set() for p in g.points}
    for p, q in pairs:
        partners[p].add(q)
    failure = None
    for p in g.points:
        for q, r in combinations(sorted(partners[p]), 2):
            for s in _span(g, [q, r]):
                if s not in partners[p]:
                    failure = {"p": p, "q": q, "r": r, "s": s}
                    break
            if failure:
                break
        if failure:
            break
    report.add("orthogonality", failure is None,
               "p orthogonal to q and r implies p orthogonal to the line q + r", failure)
    bad = []
    for a in range(l.size):
        image = rep.assignment[l.names[a]]
        perp = {q for q in g.points if all(q in partners[p] for p in image)}
        if rep.assignment[l.names[l.o(a)]] != perp:
            bad.append(l.names[a])
    report.add("complement", not bad, "eta(a') equals eta(a)^perp",
               {"elements": bad} if bad else None)
    return report.finish()


def collinear_triple(m: FiniteOrtholattice, a: int, b: int, p: int) -> Tuple[int, int, int]:
    """(p, a·(p + b), b·(p + a))."""
    return p, m.m(a, m.j(p, b)), m.m(b, m.j(p, a))


def _collinear_atoms(m: FiniteOrtholattice, triple: Sequence[int]) -> bool:
    atoms = set(m.atoms())
    p, q, r = triple
    if not {p, q, r} <= atoms or len({p, q, r}) != 3:
        return False
    return m.j(p, q) == m.j(p, r) == m.j(q, r)


def check_atom_collinearity(m: FiniteOrtholattice) -> Report:
    """
    For a·b = 0 and an atom p <= a + b below neither, p, a(p + b), b(p + a)
    are collinear atoms.
    """
    report = Report("atom collinearity")
    checked = 0
    failure = None
    for a in range(m.size):
        for b in range(m.size):
            if m.m(a, b) != m.bottom:
                continue
            ab = m.j(a, b)
            for p in m.atoms():
                if not m.le(p, ab) or m.le(p, a) or m.le(p, b):
                    continue
                checked += 1
                triple = collinear_triple(m, a, b, p)
                if failure is None and not _collinear_atoms(m, triple):
                    failure = {"a": m.names[a], "b": m.names[b],
                               "triple": [m.names[x] for x in triple]}
    report.add("collinear", failure is None, f"{checked} configurations", failure)
    report.data["configurations"] = checked
    return report.finish()


def neutral_filter(l: FiniteOrtholattice, theta: QuotientSet) -> List[int]:
    """Elements congruent to 1."""
    return [int(x) for x in np.flatnonzero(theta.matrix[l.top])]


def check_neutral_filter_bounds(m: FiniteOrtholattice, source: FiniteOrtholattice,
                               filter_names: Sequence[str]) -> Tuple[int, Optional[tuple]]:
    """
    For a, b in the source with a·b = 0 and a point p <= a + b below every
    member of F: a(p + b) and b(p + a) lie below every member of F.

    Returns:
        Number of applicable triples and the first failure (a, b, p) or None
    """
    bound = m.meet_all(m[x] for x in filter_names)
    checked = 0
    for a_name, b_name in ((x, y) for x in source.names for y in source.names):
        a, b = m[a_name], m[b_name]
        if m.m(a, b) != m.bottom:
            continue
        for p in m.atoms():
            if not (m.le(p, m.j(a, b)) and m.le(p, bound)):
                continue
            checked += 1
            _, q, r = collinear_triple(m, a, b, p)
            if not (m.le(q, bound) and m.le(r, bound)):
                return checked, (a_name, b_name, m.names[p])
    return checked, None


def quotient_representation(m: FiniteOrtholattice, sub: Iterable,
                            theta: QuotientSet) -> RepresentationMap:
    """
    Represent sub/theta on Q = atoms below the neutral filter of theta.

    Args:
        m: Finite atomic MOL
        sub: Elements of a subalgebra L of m
        theta: Congruence on the lattice ``subalgebra(m, sub)``

    Returns:
        Map from class names (least member) to point sets of Q

    Raises:
        NotSubalgebraError: If sub is not a subalgebra
        RepresentationFailure: If a neutral filter triple or the embedding
            checks fail
    """
    source = subalgebra(m, sub)
    if theta.lattice.names != source.names:
        raise RepresentationFailure("congruence lives on a different lattice")
    report = Report("geom represent")
    filter_names = [source.names[x] for x in neutral_filter(source, theta)]
    bound = m.meet_all(m[x] for x in filter_names)
    q_points = [m.names[p] for p in m.atoms() if m.le(p, bound)]
    report.data["filter"] = filter_names
    report.data["points"] = q_points

    checked, failure = check_neutral_filter_bounds(m, source, filter_names)
    report.add("neutral-filter", failure is None,
               f"{checked} triples keep a(p+b), b(p+a) below the filter",
               {"triple": list(failure)} if failure else None)
    if failure:
        raise RepresentationFailure("collinear points escape the neutral filter", failure)

    # classes named by their least member
    relation = congruence_relation(theta)
    down_count = source.leq.sum(axis=0)
    least = {}
    for x in range(source.size):
        members = np.flatnonzero(relation[x])
        least[x] = int(members[np.argmin(down_count[members])])

    full = points_of(m)
    q_set = set(q_points)
    collinear = [[full.points[i] for i in t] for t in full.triples
                 if {full.points[i] for i in t} <= q_set]
    perp = None
    if full.perp is not None:
        perp = [(p, q) for p in q_points for q in q_points
                if full.perp[full.index[p], full.index[q]]]
    g = PointGeometry(q_points, collinear, perp)

    assignment: Dict[str, PointSet] = {}
    well_defined = True
    for x in range(source.size):
        image = frozenset(p for p in q_points if m.le(m[p], m[source.names[x]]))
        key = source.names[least[x]]
        if key in assignment and assignment[key] != image:
            well_defined = False
        assignment.setdefault(key, image)
    report.add("well-defined", well_defined, "congruent elements have the same points")

    quotient = quotient_lattice(source, theta)
    rep = RepresentationMap(quotient, g, assignment)
    embedding = check_embedding(rep)
    report.extend(embedding)
    induced = induced_point_orthogonality(rep)
    report.extend(check_induced_orthogonality(rep, induced), prefix="induced-")
    rep.report = report.finish()
    if not rep.report.passed:
        failed = rep.report.failures()[0]
        raise RepresentationFailure(f"representation check {failed.name} failed",
                                    tuple(failed.witness.values()))
    return rep
