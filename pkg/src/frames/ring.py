"""
Coordinate rings of frames.

R_ij consists of the subspaces r with r·a_j = a_i·a_j and r + a_j = a_i + a_j.
For a frame with coordinate blocks the matrix r over Q_m sits in R_ij as
(e_i - e_j r)R. Every ring operation below is a lattice polynomial in the
operands and the frame; ``embed_ring`` and ``coordinate`` translate to and
from matrices so results can be compared with ordinary arithmetic.

Polynomials, for r, s in R_ij and an auxiliary index k:

    transfer (i,j) -> (i,k):   (r + a_jk)(a_i + a_k)
    transfer (i,j) -> (k,j):   (r + a_ik)(a_k + a_j)
    r + s:   ((r + a_k)(a_j + a_ik) + s_kj)(a_i + a_j)
    -r:      ((((r + a_k)(a_j + a_ik) + a_i)(a_j + a_k)) + a_ik)(a_i + a_j)
    s·r:     (r_ij + s_jk)(a_i + a_k) for r in R_ij, s in R_jk
"""

import logging
from fractions import Fraction
from typing import Any, Dict, Optional, Tuple, Union

from src.core.exceptions import (
    BadIndexPatternError,
    FrameError,
    IndexMismatchError,
    NotInCoordinateDomainError,
    SingularMatrixError,
)
from src.exactla import RationalMatrix, inverse
from src.exactla.rational import to_rational
from src.frames.frame import Frame, Pair
from src.subspaces import Subspace

logger = logging.getLogger(__name__)

Scalar = Union[Fraction, int, str]


def in_domain(frame: Frame, i: int, j: int, carrier: Subspace) -> bool:
    """Membership in R_ij."""
    ai, aj = frame.a(i), frame.a(j)
    return carrier & aj == ai & aj and carrier + aj == ai + aj


class RingElem:
    """
    Element of a coordinate domain R_ij.

    Equality is carrier equality within the same frame and index pair.

    Attributes:
        frame: The frame
        i, j: Index pair
        carrier: The subspace
    """

    __slots__ = ('frame', 'i', 'j', 'carrier')

    def __init__(self, frame: Frame, i: int, j: int, carrier: Subspace, check: bool = True):
        if i == j:
            raise FrameError("coordinate domains need distinct indices")
        if check and not in_domain(frame, i, j, carrier):
            raise NotInCoordinateDomainError(f"subspace is not in R_{i}{j}")
        self.frame = frame
        self.i = i
        self.j = j
        self.carrier = carrier

    @property
    def indices(self) -> Pair:
        return self.i, self.j

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, RingElem):
            return NotImplemented
        return (self.frame is other.frame and self.indices == other.indices
                and self.carrier == other.carrier)

    def __hash__(self) -> int:
        return hash((self.indices, self.carrier))

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {"indices": list(self.indices), "carrier": self.carrier.to_dict()}
        if self.frame.blocks is not None:
            out["coordinate"] = coordinate(self).to_dict()
        return out

    def __repr__(self) -> str:
        return f"RingElem(R_{self.i}{self.j}, {self.carrier!r})"


def zero(frame: Frame, i: int, j: int) -> RingElem:
    return RingElem(frame, i, j, frame.a(i), check=False)


def unit(frame: Frame, i: int, j: int) -> RingElem:
    return RingElem(frame, i, j, frame.pair(i, j), check=False)


def _as_matrix(r: Union[RationalMatrix, Scalar], size: int) -> RationalMatrix:
    if isinstance(r, RationalMatrix):
        if r.shape != (size, size):
            raise FrameError(f"expected a {size}x{size} matrix, got {r.rows}x{r.cols}")
        return r
    return RationalMatrix.scalar(to_rational(r), size)


def embed_ring(r: Union[RationalMatrix, Scalar], frame: Frame, i: int, j: int) -> RingElem:
    """
    (e_i - e_j r)R as an element of R_ij.

    Args:
        r: m x m matrix, or a rational standing for r·I
        frame: Frame with coordinate blocks of size m
        i, j: Distinct indices

    Raises:
        FrameError: If the frame has no coordinate blocks or r has the wrong size
    """
    if frame.blocks is None:
        raise FrameError("embedding matrices needs a frame with coordinate blocks")
    m = frame.block_size
    r = _as_matrix(r, m)
    bi, bj = frame.blocks[i - 1], frame.blocks[j - 1]
    size = frame.ambient.dimension
    vectors = []
    for t in range(m):
        v = [Fraction(0)] * size
        v[bi[t]] = Fraction(1)
        for s in range(m):
            v[bj[s]] = -r[s, t]
        vectors.append(v)
    carrier = frame.ambient.span(vectors)
    if not in_domain(frame, i, j, carrier):
        raise AssertionError(f"embedded matrix left R_{i}{j}")
    return RingElem(frame, i, j, carrier, check=False)


def coordinate(r: RingElem) -> RationalMatrix:
    """
    Read the matrix back from an element of a frame with coordinate blocks.

    With V_i, V_j the block coordinates of a carrier basis, r = (-V_i^{-1} V_j)^T.
    """
    frame = r.frame
    if frame.blocks is None:
        raise FrameError("coordinates need a frame with coordinate blocks")
    bi, bj = frame.blocks[r.i - 1], frame.blocks[r.j - 1]
    rows = r.carrier.vectors()
    vi = RationalMatrix.from_rows([[v[c] for c in bi] for v in rows], cols=len(bi))
    vj = RationalMatrix.from_rows([[v[c] for c in bj] for v in rows], cols=len(bj))
    try:
        return (-(inverse(vi) @ vj)).transpose()
    except SingularMatrixError:
        raise NotInCoordinateDomainError(f"carrier has no coordinate in R_{r.i}{r.j}")


def _aux(frame: Frame, used: Tuple[int, ...], aux: Optional[int]) -> int:
    if aux is None:
        return frame.others(*used)[0]
    if aux in used:
        raise BadIndexPatternError(f"auxiliary index {aux} collides with {used}")
    frame._check_index(aux)
    return aux


def transfer(r: RingElem, target: Pair) -> RingElem:
    """
    Move r along one index: (i,j) -> (i,k) or (i,j) -> (k,j).

    Raises:
        BadIndexPatternError: If the target does not share exactly the first
            or the second index in place
    """
    f = r.frame
    i, j = r.indices
    p, q = target
    if target == r.indices:
        return r
    if p == i and q not in (i, j):
        carrier = (r.carrier + f.pair(j, q)) & (f.a(i) + f.a(q))
    elif q == j and p not in (i, j):
        carrier = (r.carrier + f.pair(i, p)) & (f.a(p) + f.a(j))
    else:
        raise BadIndexPatternError(f"cannot transfer R_{i}{j} to R_{p}{q} in one step")
    return RingElem(f, p, q, carrier, check=False)


def transport(r: RingElem, target: Pair, aux: Optional[int] = None) -> RingElem:
    """
    Move r to any index pair through single transfers.

    The swap (i,j) -> (j,i) goes through (i,k) and (j,k) with the auxiliary
    index k, by default the least index outside {i, j}.
    """
    i, j = r.indices
    p, q = target
    if p == q:
        raise BadIndexPatternError("target indices must differ")
    r.frame._check_index(p)
    r.frame._check_index(q)
    if target == r.indices:
        return r
    if p == i or q == j:
        return transfer(r, target)
    if (p, q) == (j, i):
        k = _aux(r.frame, (i, j), aux)
        return transfer(transfer(transfer(r, (i, k)), (j, k)), (j, i))
    if p == j:
        return transfer(transfer(r, (i, q)), (p, q))
    if q == i:
        return transfer(transfer(r, (p, j)), (p, q))
    return transfer(transfer(r, (i, q)), (p, q))


def _same_domain(s: RingElem, r: RingElem) -> None:
    if s.frame is not r.frame or s.indices != r.indices:
        raise IndexMismatchError(
            f"operands in R_{s.i}{s.j} and R_{r.i}{r.j} of the same frame expected")


def ring_add(s: RingElem, r: RingElem, aux: Optional[int] = None) -> RingElem:
    """s ⊕ r in R_ij."""
    _same_domain(s, r)
    f, i, j = r.frame, r.i, r.j
    k = _aux(f, (i, j), aux)
    graph = (r.carrier + f.a(k)) & (f.a(j) + f.pair(i, k))
    s_kj = transfer(s, (k, j))
    carrier = (graph + s_kj.carrier) & (f.a(i) + f.a(j))
    return RingElem(f, i, j, carrier, check=False)


def ring_neg(r: RingElem, aux: Optional[int] = None) -> RingElem:
    """⊖r in R_ij."""
    f, i, j = r.frame, r.i, r.j
    k = _aux(f, (i, j), aux)
    graph = (r.carrier + f.a(k)) & (f.a(j) + f.pair(i, k))
    flipped = (graph + f.a(i)) & (f.a(j) + f.a(k))
    carrier = (flipped + f.pair(i, k)) & (f.a(i) + f.a(j))
    return RingElem(f, i, j, carrier, check=False)


def ring_sub(s: RingElem, r: RingElem, aux: Optional[int] = None) -> RingElem:
    return ring_add(s, ring_neg(r, aux), aux)


def ring_mul(s: RingElem, r: RingElem, aux: Optional[int] = None) -> RingElem:
    """
    s ⊗ r, the product s·r.

    For r in R_ij and s in R_jk the result lies in R_ik. For r, s both in
    R_ij, r is moved to R_ik and s to R_kj first, and the result lies in R_ij.

    Raises:
        IndexMismatchError: If the operands are neither composable nor in
            the same domain
    """
    if s.frame is not r.frame:
        raise IndexMismatchError("operands belong to different frames")
    f = r.frame
    i, j = r.indices
    if s.i == j and s.j != i:
        k = s.j
        carrier = (r.carrier + s.carrier) & (f.a(i) + f.a(k))
        return RingElem(f, i, k, carrier, check=False)
    if s.indices == r.indices:
        k = _aux(f, (i, j), aux)
        r_ik = transfer(r, (i, k))
        s_kj = transfer(s, (k, j))
        carrier = (r_ik.carrier + s_kj.carrier) & (f.a(i) + f.a(j))
        return RingElem(f, i, j, carrier, check=False)
    raise IndexMismatchError(f"cannot multiply R_{s.i}{s.j} by R_{i}{j}")


def ring_inverse(r: RingElem, aux: Optional[int] = None) -> Optional[RingElem]:
    """
    Inverse of r, or None when r is not invertible.

    r is invertible iff its carrier also lies in R_ji; read there it is the
    inverse at (j, i), which is moved back to (i, j).
    """
    if not in_domain(r.frame, r.j, r.i, r.carrier):
        return None
    swapped = RingElem(r.frame, r.j, r.i, r.carrier, check=False)
    return transport(swapped, r.indices, aux)
