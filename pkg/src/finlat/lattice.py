"""
Explicit finite (ortho)lattices.

Elements are the integers ``0..n-1`` with names for display. The order is a
numpy boolean matrix ``leq[a, b] == (a <= b)``; joins and meets are integer
tables derived once, with ``-1`` where the bound does not exist.
"""

import logging
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from src.core.exceptions import NotALatticeError, NotBelowError

logger = logging.getLogger(__name__)

MISSING = -1


def _least_bounds(leq: np.ndarray) -> np.ndarray:
    """
    Table of least upper bounds of a finite order.

    Row by row: the upper bounds of (a, b) are ``leq[a] & leq[b]``; the
    candidate with fewest elements below it is the least one iff it lies
    below every upper bound.
    """
    n = leq.shape[0]
    table = np.full((n, n), MISSING, dtype=np.int64)
    if n == 0:
        return table
    down_count = leq.sum(axis=0)
    big = n + 1
    for a in range(n):
        upper = leq[a][None, :] & leq
        scores = np.where(upper, down_count[None, :], big)
        candidate = scores.argmin(axis=1)
        has_bound = upper.any(axis=1)
        # upper bounds not above the candidate
        stray = (upper & ~leq[candidate]).any(axis=1)
        ok = has_bound & ~stray
        table[a, ok] = candidate[ok]
    return table


class FiniteOrtholattice:
    """
    Finite lattice given by its order table, optionally with an orthocomplement.

    Attributes:
        names: Element names, index-aligned with the tables
        leq: Boolean order matrix
        join: Join table (``-1`` where missing)
        meet: Meet table (``-1`` where missing)
        ortho: Orthocomplement table or None
        bottom: Index of 0 or None
        top: Index of 1 or None
    """

    def __init__(self, names: Sequence[str], leq: np.ndarray,
                 ortho: Optional[Sequence[int]] = None,
                 join: Optional[np.ndarray] = None,
                 meet: Optional[np.ndarray] = None):
        """
        Initialize the lattice.

        Args:
            names: Distinct element names
            leq: Square boolean order matrix (reflexive and transitive)
            ortho: Optional table x -> x'
            join: Precomputed join table, derived when omitted
            meet: Precomputed meet table, derived when omitted

        Raises:
            NotALatticeError: If names repeat or the tables have the wrong shape
        """
        self.names: Tuple[str, ...] = tuple(names)
        n = len(self.names)
        self.index: Dict[str, int] = {name: i for i, name in enumerate(self.names)}
        if len(self.index) != n:
            raise NotALatticeError("element names must be distinct")
        leq = np.asarray(leq, dtype=bool)
        if leq.shape != (n, n):
            raise NotALatticeError(f"order table has shape {leq.shape}, expected ({n}, {n})")
        self.leq = leq
        self.leq.setflags(write=False)
        self.join = _least_bounds(leq) if join is None else np.asarray(join, dtype=np.int64)
        self.meet = _least_bounds(leq.T) if meet is None else np.asarray(meet, dtype=np.int64)
        self.join.setflags(write=False)
        self.meet.setflags(write=False)
        self.ortho: Optional[np.ndarray] = None
        if ortho is not None:
            self.ortho = np.asarray(ortho, dtype=np.int64)
            if self.ortho.shape != (n,):
                raise NotALatticeError("orthocomplement table has the wrong length")
            self.ortho.setflags(write=False)
        bottoms = np.flatnonzero(leq.all(axis=1))
        tops = np.flatnonzero(leq.all(axis=0))
        self.bottom: Optional[int] = int(bottoms[0]) if len(bottoms) == 1 else None
        self.top: Optional[int] = int(tops[0]) if len(tops) == 1 else None
        self._cache: Dict[str, Any] = {}

    # Access

    @property
    def size(self) -> int:
        return len(self.names)

    def __len__(self) -> int:
        return len(self.names)

    def __getitem__(self, name: str) -> int:
        """Index of a named element."""
        return self.index[name]

    def name(self, x: int) -> str:
        return self.names[x]

    def resolve(self, x: Any) -> int:
        """Accept an index or a name."""
        if isinstance(x, (int, np.integer)):
            return int(x)
        if x not in self.index:
            raise KeyError(f"unknown element {x!r}")
        return self.index[x]

    def le(self, a: int, b: int) -> bool:
        return bool(self.leq[a, b])

    def j(self, a: int, b: int) -> int:
        return int(self.join[a, b])

    def m(self, a: int, b: int) -> int:
        return int(self.meet[a, b])

    def o(self, a: int) -> int:
        if self.ortho is None:
            raise NotALatticeError("lattice carries no orthocomplement")
        return int(self.ortho[a])

    def join_all(self, elements: Iterable[int]) -> int:
        result = self.bottom
        for x in elements:
            result = self.j(result, x)
        return result

    def meet_all(self, elements: Iterable[int]) -> int:
        result = self.top
        for x in elements:
            result = self.m(result, x)
        return result

    @property
    def has_ortho(self) -> bool:
        return self.ortho is not None

    # Order structure

    @property
    def is_lattice(self) -> bool:
        """All binary joins and meets exist and the order is a partial order."""
        if 'is_lattice' not in self._cache:
            self._cache['is_lattice'] = bool(
                self.size > 0 and self.is_partial_order
                and (self.join != MISSING).all() and (self.meet != MISSING).all())
        return self._cache['is_lattice']

    @property
    def is_partial_order(self) -> bool:
        if 'is_partial_order' not in self._cache:
            leq = self.leq
            reflexive = bool(leq.diagonal().all())
            antisymmetric = not (leq & leq.T & ~np.eye(self.size, dtype=bool)).any()
            closure = (leq.astype(np.int64) @ leq.astype(np.int64)) > 0
            transitive = not (closure & ~leq).any()
            self._cache['is_partial_order'] = reflexive and antisymmetric and transitive
        return self._cache['is_partial_order']

    def require_lattice(self) -> None:
        if not self.is_lattice:
            raise NotALatticeError("order table does not define a lattice")

    def below(self, a: int) -> np.ndarray:
        """Indices x with x <= a."""
        return np.flatnonzero(self.leq[:, a])

    def above(self, a: int) -> np.ndarray:
        return np.flatnonzero(self.leq[a])

    def interval(self, v: int, u: int) -> np.ndarray:
        """Indices of [v, u]."""
        if not self.leq[v, u]:
            raise NotBelowError(f"{self.names[v]} is not below {self.names[u]}")
        return np.flatnonzero(self.leq[v] & self.leq[:, u])

    @property
    def strict(self) -> np.ndarray:
        return self.leq & ~np.eye(self.size, dtype=bool)

    @property
    def covers(self) -> np.ndarray:
        """Boolean matrix ``covers[a, b]``: b covers a."""
        if 'covers' not in self._cache:
            s = self.strict.astype(np.int64)
            self._cache['covers'] = self.strict & ~((s @ s) > 0)
        return self._cache['covers']

    def cover_pairs(self) -> List[Tuple[int, int]]:
        """Pairs (a, b) with b covering a, in index order."""
        return [(int(a), int(b)) for a, b in zip(*np.nonzero(self.covers))]

    def atoms(self) -> List[int]:
        if self.bottom is None:
            return []
        return [int(x) for x in np.flatnonzero(self.covers[self.bottom])]

    def coatoms(self) -> List[int]:
        if self.top is None:
            return []
        return [int(x) for x in np.flatnonzero(self.covers[:, self.top])]

    def atoms_below(self, a: int) -> List[int]:
        return [p for p in self.atoms() if self.leq[p, a]]

    def height(self) -> int:
        """Length of the longest chain from 0 to 1."""
        if 'height' not in self._cache:
            order = np.argsort(self.leq.sum(axis=0), kind='stable')
            depth = np.zeros(self.size, dtype=np.int64)
            cov = self.covers
            for b in order:
                lower = np.flatnonzero(cov[:, b])
                if len(lower):
                    depth[b] = depth[lower].max() + 1
            self._cache['height'] = int(depth.max()) if self.size else 0
        return self._cache['height']

    def complements(self, a: int) -> np.ndarray:
        """Indices c with a + c = 1 and a·c = 0."""
        return np.flatnonzero((self.join[a] == self.top) & (self.meet[a] == self.bottom))

    # Conversion

    def restrict(self, elements: Sequence[int],
                 ortho_map: Optional[Dict[int, int]] = None,
                 names: Optional[Sequence[str]] = None) -> 'FiniteOrtholattice':
        """
        Induced order on a subset, with tables reindexed.

        Args:
            elements: Indices to keep, in the desired order
            ortho_map: Orthocomplement on the subset (old index -> old index);
                when omitted the ambient one is used if it preserves the subset
            names: Names for the new elements
        """
        keep = np.asarray(list(elements), dtype=np.int64)
        position = {int(x): i for i, x in enumerate(keep)}
        sub_leq = self.leq[np.ix_(keep, keep)]
        ortho = None
        if ortho_map is not None:
            ortho = [position[ortho_map[int(x)]] for x in keep]
        elif self.ortho is not None and all(int(self.ortho[x]) in position for x in keep):
            ortho = [position[int(self.ortho[x])] for x in keep]
        return FiniteOrtholattice(
            names if names is not None else [self.names[x] for x in keep], sub_leq, ortho)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary representation."""
        return {
            "size": self.size,
            "elements": list(self.names),
            "bottom": None if self.bottom is None else self.names[self.bottom],
            "top": None if self.top is None else self.names[self.top],
            "covers": [[self.names[a], self.names[b]] for a, b in self.cover_pairs()],
            "ortho": None if self.ortho is None else {
                self.names[x]: self.names[int(self.ortho[x])] for x in range(self.size)},
        }

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, FiniteOrtholattice):
            return NotImplemented
        same_ortho = (self.ortho is None and other.ortho is None) or (
            self.ortho is not None and other.ortho is not None
            and np.array_equal(self.ortho, other.ortho))
        return self.names == other.names and np.array_equal(self.leq, other.leq) and same_ortho

    def __hash__(self) -> int:
        return hash((self.names, self.leq.tobytes()))

    def __repr__(self) -> str:
        kind = "ortholattice" if self.has_ortho else "lattice"
        return f"FiniteOrtholattice({kind}, n={self.size})"
