"""
Standard finite lattices and the constructions that preserve MOLs.
"""

import logging
from typing import Iterable, Sequence

import numpy as np

from src.core.exceptions import NotBelowError, NotSubalgebraError
from src.finlat.lattice import FiniteOrtholattice

logger = logging.getLogger(__name__)


def mo(n: int) -> FiniteOrtholattice:
    """
    MO_n: 0, 1 and n pairs of atoms a_i, a_i'.

    Args:
        n: Number of complementary pairs (n >= 1)
    """
    if n < 1:
        raise ValueError("mo(n) needs n >= 1")
    names = ["0", "1"]
    for i in range(1, n + 1):
        names += [f"a{i}", f"a{i}'"]
    size = len(names)
    leq = np.eye(size, dtype=bool)
    leq[0, :] = True
    leq[:, 1] = True
    ortho = [1, 0]
    for i in range(n):
        ortho += [3 + 2 * i, 2 + 2 * i]
    return FiniteOrtholattice(names, leq, ortho)


def _subset_name(bits: Sequence[int], n: int) -> str:
    if not bits:
        return "0"
    if len(bits) == n:
        return "1"
    sep = "" if n < 10 else "_"
    return "b" + sep.join(str(b + 1) for b in bits)


def boolean(n: int) -> FiniteOrtholattice:
    """
    The Boolean algebra of subsets of {1..n}.

    Elements are ordered by bitmask; the empty set is ``0``, the full set
    ``1`` and ``b13`` stands for {1, 3}.
    """
    if n < 0:
        raise ValueError("boolean(n) needs n >= 0")
    size = 1 << n
    masks = np.arange(size)
    leq = (masks[:, None] & ~masks[None, :]) == 0
    names = [_subset_name([b for b in range(n) if mask >> b & 1], n) for mask in range(size)]
    join = masks[:, None] | masks[None, :]
    meet = masks[:, None] & masks[None, :]
    ortho = (size - 1) ^ masks
    return FiniteOrtholattice(names, leq, ortho, join=join, meet=meet)


def chain(n: int) -> FiniteOrtholattice:
    """
    The n-element chain 0 < c1 < ... < 1.

    Only the 2-element chain carries an orthocomplement.
    """
    if n < 1:
        raise ValueError("chain(n) needs n >= 1")
    if n == 1:
        names = ["0"]
    else:
        names = ["0"] + [f"c{i}" for i in range(1, n - 1)] + ["1"]
    idx = np.arange(n)
    leq = idx[:, None] <= idx[None, :]
    ortho = [1, 0] if n == 2 else ([0] if n == 1 else None)
    return FiniteOrtholattice(names, leq, ortho)


def o6() -> FiniteOrtholattice:
    """
    The hexagon ortholattice: 0 < x < y < 1 and 0 < y' < x' < 1.

    It is an ortholattice but not orthomodular.
    """
    names = ["0", "x", "y", "y'", "x'", "1"]
    pairs = [(0, 1), (1, 2), (2, 5), (0, 3), (3, 4), (4, 5)]
    leq = _closure(6, pairs)
    return FiniteOrtholattice(names, leq, [5, 4, 3, 2, 1, 0])


def _closure(n: int, pairs: Iterable[Sequence[int]]) -> np.ndarray:
    """Reflexive transitive closure of a relation given by pairs."""
    leq = np.eye(n, dtype=bool)
    for a, b in pairs:
        leq[a, b] = True
    # Warshall
    for k in range(n):
        leq |= leq[:, k][:, None] & leq[k][None, :]
    return leq


def product(l1: FiniteOrtholattice, l2: FiniteOrtholattice) -> FiniteOrtholattice:
    """
    Direct product with componentwise order.

    Element (x, y) sits at index ``x * |l2| + y`` and is named ``(x,y)``;
    tables are assembled from the factor tables.
    """
    n1, n2 = l1.size, l2.size
    names = [f"({a},{b})" for a in l1.names for b in l2.names]
    leq = (l1.leq[:, None, :, None] & l2.leq[None, :, None, :]).reshape(n1 * n2, n1 * n2)
    join = (l1.join[:, None, :, None] * n2 + l2.join[None, :, None, :]).reshape(n1 * n2, n1 * n2)
    meet = (l1.meet[:, None, :, None] * n2 + l2.meet[None, :, None, :]).reshape(n1 * n2, n1 * n2)
    ortho = None
    if l1.has_ortho and l2.has_ortho:
        ortho = (l1.ortho[:, None] * n2 + l2.ortho[None, :]).reshape(-1)
    return FiniteOrtholattice(names, leq, ortho, join=join, meet=meet)


def product_all(factors: Sequence[FiniteOrtholattice]) -> FiniteOrtholattice:
    result = factors[0]
    for f in factors[1:]:
        result = product(result, f)
    return result


def interval_subalgebra(l: FiniteOrtholattice, u, v) -> FiniteOrtholattice:
    """
    The interval [v, u] with complementation x -> v + x'·u.

    Args:
        l: An ortholattice
        u: Top of the interval (index or name)
        v: Bottom of the interval (index or name)

    Raises:
        NotBelowError: If v is not below u
    """
    u, v = l.resolve(u), l.resolve(v)
    if not l.leq[v, u]:
        raise NotBelowError(f"{l.names[v]} is not below {l.names[u]}")
    elements = [int(x) for x in l.interval(v, u)]
    ortho_map = {x: l.j(v, l.m(l.o(x), u)) for x in elements}
    return l.restrict(elements, ortho_map)


def is_closed(l: FiniteOrtholattice, elements: Iterable[int]) -> bool:
    """Closed under +, · and ' and containing 0 and 1."""
    keep = np.zeros(l.size, dtype=bool)
    keep[list(elements)] = True
    idx = np.flatnonzero(keep)
    if not (keep[l.bottom] and keep[l.top]):
        return False
    block = np.ix_(idx, idx)
    if not (keep[l.join[block]].all() and keep[l.meet[block]].all()):
        return False
    return l.ortho is None or bool(keep[l.ortho[idx]].all())


def subalgebra(l: FiniteOrtholattice, elements: Iterable) -> FiniteOrtholattice:
    """
    Restriction to a subset closed under the operations.

    Raises:
        NotSubalgebraError: If the subset is not closed
    """
    chosen = sorted({l.resolve(x) for x in elements})
    if not is_closed(l, chosen):
        raise NotSubalgebraError("subset is not closed under +, · and '")
    return l.restrict(chosen)


def generate_subalgebra(l: FiniteOrtholattice, generators: Iterable) -> FiniteOrtholattice:
    """Least subalgebra containing the generators."""
    current = {l.bottom, l.top} | {l.resolve(x) for x in generators}
    frontier = list(current)
    while frontier:
        fresh = set()
        for x in frontier:
            if l.has_ortho:
                fresh.add(l.o(x))
            for y in list(current):
                fresh.add(l.j(x, y))
                fresh.add(l.m(x, y))
        frontier = list(fresh - current)
        current |= fresh
    return l.restrict(sorted(current))
