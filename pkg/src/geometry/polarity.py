"""
Polarities on point geometries and on finite atomistic lattices.

An orthogonality on the points is a polarity when it is nondegenerate and
every p^perp is a coatom of the subspace lattice. For anisotropic
orthogonalities this is equivalent to p + p^perp = 1 for all points and to
(p + r)·p^perp > 0 for all points p != r.
"""

import logging
from typing import Dict, FrozenSet, Iterable, List

import numpy as np

from src.core.exceptions import NotPolarityError
from src.core.report import Report
from src.finlat.lattice import FiniteOrtholattice
from src.finlat.validate import validate
from src.geometry.geometry import PointGeometry

logger = logging.getLogger(__name__)


def _is_coatom(g: PointGeometry, x: FrozenSet[int]) -> bool:
    full = frozenset(range(g.size))
    if x == full:
        return False
    return all(g.span_ids(x | {p}) == full for p in range(g.size) if p not in x)


def check_polarity(g: PointGeometry) -> Report:
    """
    Check the polarity conditions on every point and pair of points.

    Args:
        g: Geometry carrying an orthogonality

    Returns:
        Report with nondegeneracy, anisotropy, the three equivalent criteria
        and whether they agree; ``data['is_polarity']`` holds the verdict

    Raises:
        NotPolarityError: If g has no orthogonality
    """
    if g.perp is None:
        raise NotPolarityError("geometry carries no orthogonality")
    report = Report("geom polarity")
    full = frozenset(range(g.size))
    names = g.points
    perps = [g.perp_of([p]) for p in range(g.size)]

    degenerate = [names[p] for p in range(g.size) if g.perp[p].all()]
    nondegenerate = not degenerate
    report.add("nondegenerate", nondegenerate, "no point is orthogonal to every point",
               {"points": degenerate} if degenerate else None)

    isotropic = [names[p] for p in range(g.size) if g.perp[p, p]]
    anisotropic = not isotropic
    report.add("anisotropic", anisotropic, "no point is orthogonal to itself",
               {"points": isotropic} if isotropic else None)

    not_coatom = [names[p] for p in range(g.size) if not _is_coatom(g, perps[p])]
    coatoms = not not_coatom
    report.add("coatoms", nondegenerate and coatoms, "p^perp is a coatom for every point",
               {"points": not_coatom} if not_coatom else None)

    not_spanning = [names[p] for p in range(g.size) if g.span_ids(perps[p] | {p}) != full]
    spanning = not not_spanning
    report.add("spanning", spanning, "p + p^perp = 1 for every point",
               {"points": not_spanning} if not_spanning else None)

    pair_failure = None
    for p in range(g.size):
        for r in range(g.size):
            if p != r and not (g.span_ids({p, r}) & perps[p]):
                pair_failure = {"p": names[p], "r": names[r]}
                break
        if pair_failure:
            break
    report.add("pairs", pair_failure is None, "(p + r)·p^perp > 0 for all points p != r",
               pair_failure)

    is_polarity = nondegenerate and coatoms
    verdicts = [is_polarity, spanning, pair_failure is None]
    if anisotropic:
        report.add("criteria-agree", len(set(verdicts)) == 1,
                   "polarity, spanning and pair criteria coincide for anisotropic orthogonality",
                   {"verdicts": verdicts} if len(set(verdicts)) != 1 else None)
    report.data.update({"is_polarity": is_polarity, "anisotropic": anisotropic})
    return report.finish()


def is_polarity(g: PointGeometry) -> bool:
    return g.perp is not None and bool(check_polarity(g).data["is_polarity"])


def atom_perp_matrix(m: FiniteOrtholattice, perp: Iterable) -> np.ndarray:
    """Symmetric boolean matrix on lattice indices from orthogonal atom pairs (names or indices)."""
    matrix = np.zeros((m.size, m.size), dtype=bool)
    for p, q in perp:
        p, q = m.resolve(p), m.resolve(q)
        matrix[p, q] = matrix[q, p] = True
    return matrix


def element_perp(m: FiniteOrtholattice, perp: np.ndarray) -> np.ndarray:
    """
    u -> u^perp: the join of all atoms orthogonal to every atom below u.

    Args:
        m: Finite atomistic lattice
        perp: Orthogonality on atoms as a matrix over lattice indices

    Returns:
        Table of u^perp
    """
    atoms = m.atoms()
    table = np.empty(m.size, dtype=np.int64)
    for u in range(m.size):
        below = [p for p in atoms if m.le(p, u)]
        partners = [q for q in atoms if all(perp[q, p] for p in below)]
        table[u] = m.join_all(partners)
    return table


def check_polarity_closure(m: FiniteOrtholattice, perp: np.ndarray) -> Report:
    """
    Check u^perp^perp = u and u + u^perp = 1 for all u, and that every [0, u]
    with x -> u·x^perp is an MOL.

    Args:
        m: Finite geomodular lattice
        perp: Anisotropic polarity on its atoms (matrix over lattice indices)
    """
    report = Report("polarity closure")
    star = element_perp(m, perp)
    not_closed = [m.names[u] for u in range(m.size) if star[star[u]] != u]
    report.add("double-perp", not not_closed, "u^perp^perp = u for all u",
               {"elements": not_closed} if not_closed else None)
    not_spanning = [m.names[u] for u in range(m.size) if m.j(u, int(star[u])) != m.top]
    report.add("spanning", not not_spanning, "u + u^perp = 1 for all u",
               {"elements": not_spanning} if not_spanning else None)
    bad_intervals: List[str] = []
    for u in range(m.size):
        elements = [int(x) for x in m.below(u)]
        ortho_map = {x: m.m(u, int(star[x])) for x in elements}
        if any(y not in ortho_map for y in ortho_map.values()):
            bad_intervals.append(m.names[u])
            continue
        if not validate(m.restrict(elements, ortho_map)).data["is_mol"]:
            bad_intervals.append(m.names[u])
    report.add("intervals", not bad_intervals, "[0, u] with x -> u·x^perp is an MOL",
               {"elements": bad_intervals} if bad_intervals else None)
    return report.finish()


def closed_elements(m: FiniteOrtholattice, star: np.ndarray) -> List[int]:
    return [u for u in range(m.size) if star[star[u]] == u]


def hat_conditions(m: FiniteOrtholattice, perp: np.ndarray, sub: Iterable) -> Report:
    """
    Evaluate the closure conditions for the extension of a subset by closed elements.

    In a finite lattice every quotient has finite dimension, so the
    finite-dimension congruence is total and the extension is the set C of
    closed elements. Conditions, for a, b in the subset:

        (a) a·b in C
        (b) a + b in C and a^perp + b^perp in C
        (c) a^perp in C

    Args:
        m: Finite modular atomistic lattice
        perp: Anisotropic polarity on its atoms (matrix over lattice indices)
        sub: Elements (names or indices)

    Returns:
        Report; ``data['closed']`` lists the extension when (a)-(c) hold

    Raises:
        NotPolarityError: If perp is not an anisotropic polarity
    """
    atoms = m.atoms()
    if any(perp[p, p] for p in atoms):
        raise NotPolarityError("orthogonality is not anisotropic")
    star = element_perp(m, perp)
    for p in atoms:
        if star[p] not in m.coatoms():
            raise NotPolarityError(f"{m.names[p]}^perp is not a coatom")

    report = Report("hat conditions")
    report.data["mu"] = "total (finite lattice)"
    closed = set(closed_elements(m, star))
    members = sorted({m.resolve(x) for x in sub})

    def failures(predicate) -> List[Dict[str, str]]:
        out = []
        for a in members:
            for b in members:
                if not predicate(a, b):
                    out.append({"a": m.names[a], "b": m.names[b]})
        return out

    bad_a = failures(lambda a, b: m.m(a, b) in closed)
    bad_b = failures(lambda a, b: m.j(a, b) in closed
                     and m.j(int(star[a]), int(star[b])) in closed)
    bad_c = [{"a": m.names[a]} for a in members if int(star[a]) not in closed]
    report.add("meets", not bad_a, "(a) a·b is closed", bad_a[0] if bad_a else None)
    report.add("joins", not bad_b, "(b) a + b and a^perp + b^perp are closed",
               bad_b[0] if bad_b else None)
    report.add("perps", not bad_c, "(c) a^perp is closed", bad_c[0] if bad_c else None)

    # covering property in the lattice of closed elements
    uncovered = None
    for u in sorted(closed):
        for p in atoms:
            if m.le(p, u):
                continue
            v = m.j(u, p)
            if v not in closed or not m.covers[u, v]:
                uncovered = {"u": m.names[u], "p": m.names[p]}
                break
        if uncovered:
            break
    report.add("covering", uncovered is None, "u + p is closed and covers u", uncovered)

    if not (bad_a or bad_b or bad_c):
        ordered = sorted(closed)
        ortho_map = {u: int(star[u]) for u in ordered}
        hat = m.restrict(ordered, ortho_map)
        hat_report = validate(hat)
        report.add("extension-mol", hat_report.data["is_mol"],
                   "closed elements form a modular ortholattice")
        sub_ok = all(a in closed for a in members) and all(
            m.m(a, b) in members and m.j(a, b) in members and int(star[a]) in members
            for a in members for b in members)
        report.add("subset-sub-mol", sub_ok,
                   "the subset is closed under the extension's operations")
        report.data["closed"] = [m.names[u] for u in ordered]
    return report.finish()
