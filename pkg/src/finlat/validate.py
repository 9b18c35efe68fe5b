"""
Exhaustive axiom checks for finite (ortho)lattices.

Structural problems are reported as failing checks, never raised.
"""

import logging
from typing import Optional, Tuple

import numpy as np

from src.core.report import Report
from src.finlat.lattice import MISSING, FiniteOrtholattice

logger = logging.getLogger(__name__)


def lattice_violation(l: FiniteOrtholattice) -> Optional[Tuple[str, ...]]:
    """Names of a pair lacking a join or meet, or None."""
    bad = np.argwhere((l.join == MISSING) | (l.meet == MISSING))
    if len(bad):
        a, b = bad[0]
        return l.names[a], l.names[b]
    return None


def ortho_violation(l: FiniteOrtholattice) -> Optional[Tuple[str, str]]:
    """
    First failure of the ortholattice axioms.

    Returns:
        (axiom, element) or None; needs a lattice with an ortho table
    """
    o = l.ortho
    idx = np.arange(l.size)
    checks = [
        ("x'' = x", o[o] != idx),
        ("x·x' = 0", l.meet[idx, o] != l.bottom),
        ("x + x' = 1", l.join[idx, o] != l.top),
    ]
    for axiom, failures in checks:
        hits = np.flatnonzero(failures)
        if len(hits):
            return axiom, l.names[hits[0]]
    # x <= y implies y' <= x'
    reversed_leq = l.leq[np.ix_(o, o)].T
    hits = np.argwhere(l.leq & ~reversed_leq)
    if len(hits):
        x, y = hits[0]
        return "x <= y implies y' <= x'", f"{l.names[x]} <= {l.names[y]}"
    return None


def modularity_violation(l: FiniteOrtholattice) -> Optional[Tuple[int, int, int]]:
    """
    First triple (u, v, w) with u <= w and u + v·w != (u + v)·w.

    Cached on the lattice; needs a lattice.
    """
    if 'modularity' in l._cache:
        return l._cache['modularity']
    found = None
    join, meet = l.join, l.meet
    for u, w in np.argwhere(l.leq):
        lhs = join[u, meet[:, w]]
        rhs = meet[join[u, :], w]
        bad = np.flatnonzero(lhs != rhs)
        if len(bad):
            found = (int(u), int(bad[0]), int(w))
            break
    l._cache['modularity'] = found
    return found


def orthomodularity_violation(l: FiniteOrtholattice) -> Optional[Tuple[int, int]]:
    """First pair y <= x with x != y + x·y', or None."""
    if 'orthomodularity' in l._cache:
        return l._cache['orthomodularity']
    found = None
    o = l.ortho
    for x in range(l.size):
        ys = np.flatnonzero(l.leq[:, x])
        values = l.join[ys, l.meet[x, o[ys]]]
        bad = np.flatnonzero(values != x)
        if len(bad):
            found = (x, int(ys[bad[0]]))
            break
    l._cache['orthomodularity'] = found
    return found


def is_modular(l: FiniteOrtholattice) -> bool:
    return l.is_lattice and modularity_violation(l) is None


def is_orthomodular(l: FiniteOrtholattice) -> bool:
    return (l.is_lattice and l.has_ortho and ortho_violation(l) is None
            and orthomodularity_violation(l) is None)


def is_mol(l: FiniteOrtholattice) -> bool:
    return is_orthomodular(l) and modularity_violation(l) is None


def validate(l: FiniteOrtholattice) -> Report:
    """
    Check the lattice, ortholattice, modular and orthomodular axioms.

    Args:
        l: Any finite order with names

    Returns:
        Report whose ``data`` holds the flags ``is_lattice``,
        ``is_ortholattice``, ``is_modular``, ``is_orthomodular`` and ``is_mol``
    """
    report = Report("lattice check")
    report.data['size'] = l.size

    order_ok = l.is_partial_order
    report.add("partial-order", order_ok, "reflexive, antisymmetric, transitive")
    bounds_ok = l.bottom is not None and l.top is not None
    report.add("bounds", bounds_ok, "unique 0 and 1")
    missing = lattice_violation(l)
    report.add("lattice", order_ok and missing is None, "all binary joins and meets exist",
               {"pair": list(missing)} if missing else None)
    is_lattice = l.is_lattice and bounds_ok

    is_modular_flag = False
    if is_lattice:
        triple = modularity_violation(l)
        is_modular_flag = triple is None
        report.add("modular", is_modular_flag, "u + v·w = (u + v)·w for u <= w",
                   {"u": l.names[triple[0]], "v": l.names[triple[1]],
                    "w": l.names[triple[2]]} if triple else None)

    is_ortholattice = False
    is_orthomodular_flag = False
    if is_lattice and l.has_ortho:
        failure = ortho_violation(l)
        is_ortholattice = failure is None
        report.add("ortholattice", is_ortholattice, "orthocomplement axioms",
                   {"axiom": failure[0], "at": failure[1]} if failure else None)
        if is_ortholattice:
            pair = orthomodularity_violation(l)
            is_orthomodular_flag = pair is None
            report.add("orthomodular", is_orthomodular_flag, "x = y + x·y' for y <= x",
                       {"x": l.names[pair[0]], "y": l.names[pair[1]]} if pair else None)

    report.data.update({
        "is_lattice": is_lattice,
        "is_ortholattice": is_ortholattice,
        "is_modular": is_modular_flag,
        "is_orthomodular": is_orthomodular_flag,
        "is_mol": is_modular_flag and is_orthomodular_flag,
    })
    logger.info(f"validated lattice of size {l.size}: mol={report.data['is_mol']}")
    return report.finish()
