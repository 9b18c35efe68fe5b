"""
Ortholattice polynomials with frame constants.

For a spanning orthogonal frame:

    l(x, x', z_1..z_n) = (x' + x(x' + S))(x + x'S)(z_1 + z_2),  S = sum_{j != 2} z_j

puts every x into R_12 and fixes the elements of R_12 (the t-polynomial).
The involution polynomial reads r' (a_1 + a_2) and a_12' (a_1 + a_2) as
elements of R_21 and divides one by the other; over a form with diagonal
blocks alpha_i this yields alpha_1^{-1} r^T alpha_1.
"""

import logging
from typing import List, Optional, Sequence

from src.core.exceptions import FrameError, IndexMismatchError, NotInCoordinateDomainError
from src.exactla import RationalMatrix
from src.frames.frame import Frame
from src.frames.ring import RingElem, in_domain, ring_inverse, ring_mul, transport
from src.subspaces import Subspace, join_all

logger = logging.getLogger(__name__)


def l_term(x: Subspace, x_perp: Subspace, z: Sequence[Subspace]) -> Subspace:
    """Evaluate l(x, x', z_1, ..., z_n); z is 0-indexed so z[1] is z_2."""
    if len(z) < 2:
        raise FrameError("l needs at least two frame constants")
    s = join_all(x.ambient, [zj for index, zj in enumerate(z) if index != 1])
    first = x_perp + (x & (x_perp + s))
    second = x + (x_perp & s)
    return first & second & (z[0] + z[1])


def _require_orthogonal(frame: Frame) -> None:
    if not (frame.spanning and frame.orthogonal):
        raise FrameError("this polynomial needs a spanning orthogonal frame")


def t_polynomial(x: Subspace, frame: Frame) -> RingElem:
    """
    t(x) = l(x, x^perp, a_1, ..., a_n), an element of R_12.

    Raises:
        FrameError: If the frame is not spanning and orthogonal
        NotInCoordinateDomainError: If the value leaves R_12
    """
    _require_orthogonal(frame)
    value = l_term(x, x.perp(), [frame.a(i) for i in frame.indices])
    if not in_domain(frame, 1, 2, value):
        raise NotInCoordinateDomainError("t(x) is not in R_12")
    return RingElem(frame, 1, 2, value, check=False)


def form_blocks(frame: Frame) -> List[RationalMatrix]:
    """
    Diagonal Gram blocks alpha_i of a frame with coordinate blocks.

    Raises:
        FrameError: If the Gram matrix couples different blocks
    """
    if frame.blocks is None:
        raise FrameError("form blocks need a frame with coordinate blocks")
    gram = frame.ambient.gram
    blocks = frame.blocks
    for s, bs in enumerate(blocks):
        for t, bt in enumerate(blocks):
            if s != t and any(gram[p, q] for p in bs for q in bt):
                raise FrameError("Gram matrix is not block diagonal for this frame")
    return [RationalMatrix.from_rows([[gram[p, q] for q in b] for p in b]) for b in blocks]


def star_polynomial(r: RingElem, aux: Optional[int] = None) -> RingElem:
    """
    The involution r -> r* on R_12 as a lattice polynomial.

    x = r^perp (a_1 + a_2) and y = a_12^perp (a_1 + a_2) lie in R_21; the
    result is x ⊗ y^{-1} moved back to R_12.

    Raises:
        IndexMismatchError: If r is not in R_12
        FrameError: If the frame is not spanning and orthogonal
    """
    if r.indices != (1, 2):
        raise IndexMismatchError(f"the involution polynomial acts on R_12, not R_{r.i}{r.j}")
    frame = r.frame
    _require_orthogonal(frame)
    plane = frame.a(1) + frame.a(2)
    x = RingElem(frame, 2, 1, r.carrier.perp() & plane)
    y = RingElem(frame, 2, 1, frame.pair(1, 2).perp() & plane)
    y_inv = ring_inverse(y, aux)
    if y_inv is None:
        raise AssertionError("a_12^perp (a_1 + a_2) is not invertible")
    return transport(ring_mul(x, y_inv, aux), (1, 2), aux)
