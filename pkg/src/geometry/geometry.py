"""
Finite point geometries.

A geometry is a set of points with a set of collinear triples, and optionally
a point orthogonality. The subspaces are the point sets closed under lines:
p, q in X and p, q, r collinear imply r in X.
"""

import logging
from itertools import combinations, permutations
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

import networkx as nx
import numpy as np

from src.core.constants import DEFAULT_CLOSURE_CAP, DEFAULT_SUBSPACE_LATTICE_BOUND
from src.core.exceptions import (
    CapExceededError,
    GeometryError,
    OrthogonalityAxiomError,
    TriangleAxiomError,
)
from src.finlat.lattice import FiniteOrtholattice
from src.finlat.validate import is_modular

logger = logging.getLogger(__name__)

PointSet = FrozenSet[str]


class PointGeometry:
    """
    Points, collinear triples and an optional orthogonality.

    Attributes:
        points: Point names
        triples: Collinear triples as frozensets of point indices
        perp: Symmetric boolean matrix or None
    """

    def __init__(self, points: Sequence[str], collinear: Iterable[Sequence[str]],
                 perp: Optional[Iterable[Sequence[str]]] = None, check: bool = True):
        """
        Initialize the geometry.

        Args:
            points: Distinct point names
            collinear: Triples of distinct point names
            perp: Orthogonal pairs (symmetry is implied), or None
            check: Verify the triangle and orthogonality axioms

        Raises:
            GeometryError: On unknown or repeated points
            TriangleAxiomError: If the triangle axiom fails
            OrthogonalityAxiomError: If perp is not an orthogonality
        """
        self.points: Tuple[str, ...] = tuple(points)
        self.index: Dict[str, int] = {p: i for i, p in enumerate(self.points)}
        if len(self.index) != len(self.points):
            raise GeometryError("point names must be distinct")
        self.triples: Set[FrozenSet[int]] = set()
        for triple in collinear:
            ids = frozenset(self._id(p) for p in triple)
            if len(ids) != 3:
                raise GeometryError(f"collinear triple {tuple(triple)} needs 3 distinct points")
            self.triples.add(ids)
        # third points on the line through a pair
        self._third: Dict[FrozenSet[int], Set[int]] = {}
        for t in self.triples:
            for a, b in combinations(sorted(t), 2):
                self._third.setdefault(frozenset((a, b)), set()).update(t - {a, b})
        self.perp: Optional[np.ndarray] = None
        if perp is not None:
            k = len(self.points)
            matrix = np.zeros((k, k), dtype=bool)
            for p, q in perp:
                matrix[self._id(p), self._id(q)] = True
                matrix[self._id(q), self._id(p)] = True
            self.perp = matrix
        if check:
            self.check_triangle_axiom()
            if self.perp is not None:
                self.check_orthogonality()

    def _id(self, p: str) -> int:
        if p not in self.index:
            raise GeometryError(f"unknown point {p!r}")
        return self.index[p]

    @property
    def size(self) -> int:
        return len(self.points)

    def names(self, ids: Iterable[int]) -> PointSet:
        return frozenset(self.points[i] for i in ids)

    def ids(self, names: Iterable[str]) -> FrozenSet[int]:
        return frozenset(self._id(p) for p in names)

    def collinear(self, p: int, q: int, r: int) -> bool:
        return frozenset((p, q, r)) in self.triples

    def third_points(self, p: int, q: int) -> Set[int]:
        """Points r with p, q, r collinear."""
        return self._third.get(frozenset((p, q)), set())

    def on_line(self, s: int, q: int, r: int) -> bool:
        """s <= q + r in the subspace lattice."""
        return s in (q, r) or self.collinear(s, q, r)

    def orthogonal(self, p: int, q: int) -> bool:
        return self.perp is not None and bool(self.perp[p, q])

    # Axioms

    def _triangle_apex(self, p: int, s: int, q: int, t: int, r: int) -> List[int]:
        """Points u with p, r, u and s, t, u collinear."""
        return sorted(self.third_points(p, r) & self.third_points(s, t))

    def check_triangle_axiom(self) -> None:
        """
        Raises:
            TriangleAxiomError: With the offending configuration
        """
        for t1 in self.triples:
            for q in t1:
                for t2 in self.triples:
                    if t2 == t1 or q not in t2 or len(t1 & t2) != 1:
                        continue
                    for p, s in permutations(t1 - {q}):
                        for t, r in permutations(t2 - {q}):
                            if self.collinear(p, q, r):
                                continue
                            apex = self._triangle_apex(p, s, q, t, r)
                            if len(apex) != 1:
                                names = [self.points[x] for x in (p, s, q, t, r)]
                                raise TriangleAxiomError(
                                    f"configuration {names} has {len(apex)} apex points")

    def check_orthogonality(self) -> None:
        """
        p orthogonal to q and r, and s on the line q + r, imply p orthogonal to s.

        Raises:
            OrthogonalityAxiomError: With the offending points
        """
        perp = self.perp
        for p in range(self.size):
            partners = np.flatnonzero(perp[p])
            for q, r in combinations(partners, 2):
                for s in self.third_points(int(q), int(r)):
                    if not perp[p, s]:
                        raise OrthogonalityAxiomError(
                            f"{self.points[p]} is orthogonal to {self.points[q]} and "
                            f"{self.points[r]} but not to {self.points[s]}")

    # Subspaces

    def span_ids(self, seed: Iterable[int]) -> FrozenSet[int]:
        """Least line-closed superset."""
        current = set(seed)
        frontier = list(current)
        while frontier:
            fresh = set()
            for p in frontier:
                for q in list(current):
                    if p != q:
                        fresh |= self.third_points(p, q) - current
            current |= fresh
            frontier = list(fresh)
        return frozenset(current)

    def perp_of(self, ids: Iterable[int]) -> FrozenSet[int]:
        """Points orthogonal to every given point."""
        mask = np.ones(self.size, dtype=bool)
        for p in ids:
            mask &= self.perp[p]
        return frozenset(int(x) for x in np.flatnonzero(mask))

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary representation."""
        return {
            "points": list(self.points),
            "collinear": sorted(sorted(self.points[i] for i in t) for t in self.triples),
            "perp": None if self.perp is None else [
                [self.points[a], self.points[b]] for a, b in np.argwhere(self.perp) if a <= b],
        }

    def __repr__(self) -> str:
        return f"PointGeometry({self.size} points, {len(self.triples)} collinear triples)"


def points_of(l: FiniteOrtholattice) -> PointGeometry:
    """
    Point geometry of a modular lattice.

    Points are the atoms; p, q, r are collinear iff p + q = p + r = q + r.
    With an orthocomplement, p and q are orthogonal iff p <= q'.
    """
    if not is_modular(l):
        logger.warning("point geometry of a non-modular lattice may violate the axioms")
    atoms = l.atoms()
    collinear = []
    for p, q, r in combinations(atoms, 3):
        pq = l.j(p, q)
        if pq == l.j(p, r) == l.j(q, r):
            collinear.append((l.names[p], l.names[q], l.names[r]))
    perp = None
    if l.has_ortho:
        perp = [(l.names[p], l.names[q]) for p in atoms for q in atoms if l.le(p, l.o(q))]
    return PointGeometry([l.names[p] for p in atoms], collinear, perp)


def geometry_span(g: PointGeometry, points: Iterable[str]) -> PointSet:
    """Join of points in the subspace lattice."""
    return g.names(g.span_ids(g.ids(points)))


def components(g: PointGeometry) -> List[PointSet]:
    """Connected components under lying on a common collinear triple, sorted by first point."""
    graph = nx.Graph()
    graph.add_nodes_from(range(g.size))
    for t in g.triples:
        graph.add_edges_from(combinations(sorted(t), 2))
    parts = [sorted(c) for c in nx.connected_components(graph)]
    parts.sort(key=lambda c: c[0])
    return [g.names(c) for c in parts]


def components_orthogonal(g: PointGeometry, parts: Sequence[PointSet]) -> bool:
    """Points of distinct components are pairwise orthogonal."""
    if g.perp is None:
        return False
    for a, b in combinations(parts, 2):
        ia, ib = sorted(g.ids(a)), sorted(g.ids(b))
        if not g.perp[np.ix_(ia, ib)].all():
            return False
    return True


def subgeometry_closure(g: PointGeometry, seed: Iterable[str],
                        cap: int = DEFAULT_CLOSURE_CAP) -> PointSet:
    """
    Least superset closed under the triangle-axiom operation.

    If p, s, q and q, t, r are collinear in the set and p, q, r are not, the
    apex u with p, r, u and s, t, u collinear is added.

    Raises:
        CapExceededError: After ``cap`` rule applications, carrying the
            partial set
    """
    current = set(g.ids(seed))
    applications = 0
    changed = True
    while changed:
        changed = False
        inside = [t for t in g.triples if t <= current]
        for t1, t2 in permutations(inside, 2):
            shared = t1 & t2
            if len(shared) != 1:
                continue
            q = next(iter(shared))
            for p, s in permutations(t1 - {q}):
                for t, r in permutations(t2 - {q}):
                    if g.collinear(p, q, r):
                        continue
                    applications += 1
                    if applications > cap:
                        raise CapExceededError(
                            f"subgeometry closure exceeded {cap} rule applications",
                            partial=g.names(current))
                    for u in g._triangle_apex(p, s, q, t, r):
                        if u not in current:
                            current.add(u)
                            changed = True
    return g.names(current)


def closed_subspaces(g: PointGeometry,
                     bound: int = DEFAULT_SUBSPACE_LATTICE_BOUND) -> List[FrozenSet[int]]:
    """
    All line-closed point sets, ordered by size.

    Raises:
        CapExceededError: If there are more than ``bound``
    """
    empty: FrozenSet[int] = frozenset()
    found = {empty}
    frontier = [empty]
    while frontier:
        fresh = []
        for x in frontier:
            for p in range(g.size):
                if p in x:
                    continue
                y = g.span_ids(x | {p})
                if y not in found:
                    found.add(y)
                    fresh.append(y)
                    if len(found) > bound:
                        raise CapExceededError(
                            f"subspace lattice has more than {bound} elements",
                            partial=len(found))
        frontier = fresh
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def subspace_name(g: PointGeometry, ids: Iterable[int]) -> str:
    ids = sorted(ids)
    if not ids:
        return "0"
    if len(ids) == g.size:
        return "1"
    return "{" + ",".join(g.points[i] for i in ids) + "}"


def subspace_lattice(g: PointGeometry,
                     bound: int = DEFAULT_SUBSPACE_LATTICE_BOUND) -> FiniteOrtholattice:
    """
    S(P) as a finite lattice, with X -> X^perp as complement when it is one.

    Raises:
        CapExceededError: If S(P) has more than ``bound`` elements
    """
    spaces = closed_subspaces(g, bound)
    position = {s: i for i, s in enumerate(spaces)}
    n = len(spaces)
    leq = np.zeros((n, n), dtype=bool)
    for i, a in enumerate(spaces):
        for j, b in enumerate(spaces):
            leq[i, j] = a <= b
    ortho = None
    if g.perp is not None:
        images = [g.perp_of(s) for s in spaces]
        if all(img in position for img in images):
            candidate = [position[img] for img in images]
            full = frozenset(range(g.size))
            if all(candidate[candidate[i]] == i
                   and not (spaces[i] & images[i])
                   and g.span_ids(spaces[i] | images[i]) == full
                   for i in range(n)):
                ortho = candidate
    return FiniteOrtholattice([subspace_name(g, s) for s in spaces], leq, ortho)
