"""
Perspectivity and neutral ideals of complemented modular lattices.

x and y are perspective when they have a common complement in [0, x + y]:
some z with x + z = y + z = x + y and x·z = y·z = 0.
"""

import logging
from typing import FrozenSet, Iterable, Optional

import numpy as np

from src.core.exceptions import NotModularError, NotNeutralIdealError
from src.finlat.lattice import FiniteOrtholattice
from src.finlat.validate import is_modular

logger = logging.getLogger(__name__)


def require_modular(l: FiniteOrtholattice) -> None:
    if not is_modular(l):
        raise NotModularError("operation needs a modular lattice")


def _witness_row(l: FiniteOrtholattice, x: int) -> np.ndarray:
    """Boolean matrix W[y, z]: z is a common complement of x and y in [0, x + y]."""
    top = l.join[x]                       # x + y, indexed by y
    zero = l.bottom
    disjoint_x = l.meet[x] == zero        # x·z = 0, indexed by z
    return ((l.join[x][None, :] == top[:, None])
            & (l.join == top[:, None])
            & disjoint_x[None, :]
            & (l.meet == zero))


def perspectivity(l: FiniteOrtholattice) -> np.ndarray:
    """
    Perspectivity relation by exhaustive common-complement search.

    Args:
        l: A complemented modular lattice

    Returns:
        Symmetric boolean matrix ``P[x, y]``

    Raises:
        NotModularError: If l is not modular
    """
    if 'perspectivity' in l._cache:
        return l._cache['perspectivity']
    require_modular(l)
    relation = np.zeros((l.size, l.size), dtype=bool)
    for x in range(l.size):
        relation[x] = _witness_row(l, x).any(axis=1)
    relation.setflags(write=False)
    l._cache['perspectivity'] = relation
    logger.debug(f"perspectivity computed on {l.size} elements: {int(relation.sum())} pairs")
    return relation


def perspective_witness(l: FiniteOrtholattice, x: int, y: int) -> Optional[int]:
    """A common complement of x and y in [0, x + y], or None."""
    hits = np.flatnonzero(_witness_row(l, x)[y])
    return int(hits[0]) if len(hits) else None


def join_closure(l: FiniteOrtholattice, elements: Iterable[int]) -> FrozenSet[int]:
    """Close a set under finite joins (the empty join 0 included)."""
    current = set(elements) | {l.bottom}
    frontier = list(current)
    while frontier:
        fresh = {l.j(x, y) for x in frontier for y in current} - current
        current |= fresh
        frontier = list(fresh)
    return frozenset(current)


def neutral_ideal(l: FiniteOrtholattice, a) -> FrozenSet[int]:
    """
    I(a): finite joins of elements perspective to something below a.

    Args:
        l: A complemented modular lattice
        a: Element (index or name)

    Returns:
        The ideal as a set of indices
    """
    a = l.resolve(a)
    relation = perspectivity(l)
    below = l.leq[:, a]
    seeds = np.flatnonzero((relation & below[None, :]).any(axis=1))
    return join_closure(l, (int(x) for x in seeds))


def is_ideal(l: FiniteOrtholattice, ideal: Iterable[int]) -> bool:
    """Nonempty, down-closed and join-closed."""
    members = np.zeros(l.size, dtype=bool)
    members[list(ideal)] = True
    idx = np.flatnonzero(members)
    if not len(idx):
        return False
    down_closed = not (l.leq[:, idx] & ~members[:, None]).any()
    join_closed = bool(members[l.join[np.ix_(idx, idx)]].all())
    return down_closed and join_closed


def is_neutral_ideal(l: FiniteOrtholattice, ideal: Iterable[int]) -> bool:
    """An ideal closed under perspectivity."""
    ideal = list(ideal)
    if not is_ideal(l, ideal):
        return False
    members = np.zeros(l.size, dtype=bool)
    members[ideal] = True
    return not (perspectivity(l)[members] & ~members[None, :]).any()


def require_neutral_ideal(l: FiniteOrtholattice, ideal: Iterable[int]) -> None:
    if not is_neutral_ideal(l, ideal):
        raise NotNeutralIdealError("set is not an ideal closed under perspectivity")
