"""
Von Neumann n-frames in subspace lattices.

Indices are 1-based throughout, as in a_1, ..., a_n and a_12. A frame may
carry coordinate blocks: ``blocks[i - 1]`` lists the coordinates spanning
a_i in a fixed order, and a_ij is spanned by the paired differences. Frames
with blocks can embed matrices as coordinate ring elements.
"""

import logging
from itertools import combinations, permutations
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from src.core.exceptions import DimensionMismatchError, FrameAxiomViolation, FrameError
from src.subspaces import FormSpace, Subspace, join_all, meet_all

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


class Frame:
    """
    A validated n-frame.

    Attributes:
        n: Order of the frame
        ambient: Form space of all elements
        valid: Frame axioms hold (always True for a constructed Frame)
        spanning: The a_i meet to 0 and join to 1
        orthogonal: a_j <= a_k^perp for j != k
        blocks: Coordinate blocks, or None for frames without coordinates
    """

    def __init__(self, a: Sequence[Subspace], pairs: Mapping[Pair, Subspace],
                 spanning: bool, orthogonal: bool,
                 blocks: Optional[Sequence[Sequence[int]]] = None):
        self.n = len(a)
        self._a = list(a)
        self._pairs = dict(pairs)
        self.ambient: FormSpace = a[0].ambient
        self.valid = True
        self.spanning = spanning
        self.orthogonal = orthogonal
        self.blocks = [list(b) for b in blocks] if blocks is not None else None

    def a(self, i: int) -> Subspace:
        """The element a_i."""
        self._check_index(i)
        return self._a[i - 1]

    def pair(self, i: int, j: int) -> Subspace:
        """The element a_ij (= a_ji)."""
        self._check_index(i)
        self._check_index(j)
        if i == j:
            raise FrameError(f"a_{i}{j} needs distinct indices")
        return self._pairs[(min(i, j), max(i, j))]

    def _check_index(self, i: int) -> None:
        if not 1 <= i <= self.n:
            raise FrameError(f"index {i} outside 1..{self.n}")

    @property
    def indices(self) -> range:
        return range(1, self.n + 1)

    @property
    def block_size(self) -> Optional[int]:
        return len(self.blocks[0]) if self.blocks else None

    def others(self, *used: int) -> List[int]:
        """Indices not in ``used``, ascending."""
        return [k for k in self.indices if k not in used]

    def join(self, *indices: int) -> Subspace:
        return join_all(self.ambient, [self.a(i) for i in indices])

    def elements(self) -> Dict[str, Subspace]:
        """All frame elements by name: ``a1``, ..., ``a12``, ..."""
        out = {f"a{i}": self.a(i) for i in self.indices}
        out.update({f"a{i}{j}": s for (i, j), s in sorted(self._pairs.items())})
        return out

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary representation."""
        return {
            "n": self.n,
            "ambient": self.ambient.dimension,
            "block_size": self.block_size,
            "valid": self.valid,
            "spanning": self.spanning,
            "orthogonal": self.orthogonal,
        }

    def __repr__(self) -> str:
        return (f"Frame(n={self.n}, ambient={self.ambient.dimension}, "
                f"spanning={self.spanning}, orthogonal={self.orthogonal})")


def _normalize_pairs(n: int, pairs: Mapping[Pair, Subspace]) -> Dict[Pair, Subspace]:
    out: Dict[Pair, Subspace] = {}
    for (i, j), s in pairs.items():
        if i == j or not (1 <= i <= n and 1 <= j <= n):
            raise FrameError(f"bad index pair ({i}, {j}) for a {n}-frame")
        key = (min(i, j), max(i, j))
        if key in out and out[key] != s:
            raise FrameAxiomViolation("a_jk = a_kj", key)
        out[key] = s
    missing = [p for p in combinations(range(1, n + 1), 2) if p not in out]
    if missing:
        raise FrameError(f"missing a_{missing[0][0]}{missing[0][1]}")
    return out


def check_frame(a: Sequence[Subspace], pairs: Mapping[Pair, Subspace],
                blocks: Optional[Sequence[Sequence[int]]] = None) -> Frame:
    """
    Verify the frame axioms exactly and compute the flags.

    For distinct j, k, l:

        a_j · sum_{i != j} a_i = prod_i a_i = a_j · a_jk
        a_j + a_jk = a_j + a_k
        a_jl = (a_j + a_l)(a_jk + a_kl)

    Args:
        a: Elements a_1, ..., a_n of one form space
        pairs: a_ij keyed by (i, j); one of (i, j), (j, i) suffices
        blocks: Optional coordinate blocks for matrix embeddings

    Returns:
        The validated frame

    Raises:
        FrameError: If n < 3 or elements are missing
        FrameAxiomViolation: Naming the failed identity and its indices
    """
    n = len(a)
    if n < 3:
        raise FrameError(f"frames need order at least 3, got {n}")
    ambient = a[0].ambient
    if any(x.ambient != ambient for x in a):
        raise FrameError("frame elements live in different form spaces")
    normalized = _normalize_pairs(n, pairs)

    def ajk(j: int, k: int) -> Subspace:
        return normalized[(min(j, k), max(j, k))]

    bottom = meet_all(ambient, a)
    for j in range(1, n + 1):
        rest = join_all(ambient, [a[i - 1] for i in range(1, n + 1) if i != j])
        if a[j - 1] & rest != bottom:
            raise FrameAxiomViolation("a_j·sum_{i!=j} a_i = prod_i a_i", (j,))
    for j, k in permutations(range(1, n + 1), 2):
        if a[j - 1] & ajk(j, k) != bottom:
            raise FrameAxiomViolation("a_j·a_jk = prod_i a_i", (j, k))
        if a[j - 1] + ajk(j, k) != a[j - 1] + a[k - 1]:
            raise FrameAxiomViolation("a_j + a_jk = a_j + a_k", (j, k))
    for j, k, l in permutations(range(1, n + 1), 3):
        if j > l:
            continue
        if ajk(j, l) != (a[j - 1] + a[l - 1]) & (ajk(j, k) + ajk(k, l)):
            raise FrameAxiomViolation("a_jl = (a_j + a_l)(a_jk + a_kl)", (j, k, l))

    spanning = bottom.is_zero and join_all(ambient, a).is_full
    orthogonal = all(a[j] <= a[k].perp() for j, k in combinations(range(n), 2))
    if blocks is not None:
        sizes = {len(b) for b in blocks}
        if len(blocks) != n or len(sizes) != 1:
            raise FrameError("coordinate blocks must be n lists of equal length")
    frame = Frame(a, normalized, spanning, orthogonal, blocks)
    logger.debug(f"validated {frame}")
    return frame


def _unit_vector(size: int, coordinate: int) -> List[int]:
    v = [0] * size
    v[coordinate] = 1
    return v


def coordinate_frame(ambient: FormSpace, blocks: Sequence[Sequence[int]]) -> Frame:
    """
    Frame spanned by coordinate blocks: a_i by the coordinates of block i, a_ij
    by the differences of paired coordinates.

    Args:
        ambient: Form space
        blocks: n >= 3 disjoint lists of 0-based coordinates of equal length

    Raises:
        DimensionMismatchError: If a coordinate is outside the space
        FrameAxiomViolation: If the blocks overlap
    """
    size = ambient.dimension
    if any(c < 0 or c >= size for b in blocks for c in b):
        raise DimensionMismatchError(f"coordinate outside Q^{size}")
    a = [ambient.coordinates(b) for b in blocks]
    pairs = {}
    for i, j in combinations(range(len(blocks)), 2):
        vectors = []
        for p, q in zip(blocks[i], blocks[j]):
            v = _unit_vector(size, p)
            v[q] = -1
            vectors.append(v)
        pairs[(i + 1, j + 1)] = ambient.span(vectors)
    return check_frame(a, pairs, blocks)


def canonical_frame(n: int, block_size: int = 1, form: Optional[FormSpace] = None) -> Frame:
    """
    Canonical frame of L(Q^{n·m}) read as L(R^n) with R = Q_m.

    E_i is spanned by coordinates (i-1)m .. im-1 (0-based) and E_ij by the
    paired differences.

    Args:
        n: Order of the frame (>= 3)
        block_size: m
        form: Form on Q^{n·m}; identity when omitted

    Raises:
        DimensionMismatchError: If the form has the wrong dimension
    """
    if block_size < 1:
        raise FrameError("block size must be positive")
    ambient = form or FormSpace.identity(n * block_size)
    if ambient.dimension != n * block_size:
        raise DimensionMismatchError(
            f"a {n}-frame with {block_size}x{block_size} blocks needs Q^{n * block_size}, "
            f"got Q^{ambient.dimension}")
    blocks = [list(range(i * block_size, (i + 1) * block_size)) for i in range(n)]
    return coordinate_frame(ambient, blocks)


def subframe(frame: Frame, indices: Sequence[int]) -> Frame:
    """Restrict to the given indices (renumbered 1..k in the given order)."""
    a = [frame.a(i) for i in indices]
    pairs = {(s + 1, t + 1): frame.pair(indices[s], indices[t])
             for s, t in combinations(range(len(indices)), 2)}
    blocks = [frame.blocks[i - 1] for i in indices] if frame.blocks else None
    return check_frame(a, pairs, blocks)
