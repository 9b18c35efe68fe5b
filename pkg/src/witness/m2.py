"""
A positive definite form on Q^{3n} that turns the canonical 3-frame of
L((Q_n)^3) into an orthogonal frame of the MOL L(Q^{3n}).

The Gram matrix is diag(I_n, A_k^{-1}, B_k^{-1}) with n = 2^{k-1}. In the
coordinate ring of that frame

    psi(A_k)_12 = ⊖_12 (E_12^perp ∩ (E_1 + E_2))
    psi(B_k)_13 = ⊖_13 (E_13^perp ∩ (E_1 + E_3))

since E_12^perp ∩ (E_1 + E_2) = {(u, A_k u)} is (-A_k)_12.
"""

import logging
from typing import Any, Dict

from src.core.exceptions import IdentityMismatchError
from src.core.report import Report
from src.exactla import RationalMatrix, block_diagonal, inverse
from src.frames import Frame, RingElem, canonical_frame, embed_ring, ring_neg
from src.subspaces import FormSpace
from src.witness.recursion import WitnessConfig, ab_matrices, positive_definite_report

logger = logging.getLogger(__name__)

CONVENTION_NEGATED = "negated"
CONVENTION_PLAIN = "plain"


class M2Instance:
    """
    The form space, its frame and the two designated ring elements.

    Attributes:
        config: Level and seeds
        A, B: A_k and B_k
        ambient: Q^{3n} with Gram diag(I_n, A_k^{-1}, B_k^{-1})
        frame: Image of the canonical 3-frame, validated orthogonal and spanning
        psi_a: psi(A_k)_12
        psi_b: psi(B_k)_13
        report: Checks run while building
    """

    def __init__(self, config: WitnessConfig, big_a: RationalMatrix, big_b: RationalMatrix,
                 ambient: FormSpace, frame: Frame, psi_a: RingElem, psi_b: RingElem,
                 report: Report):
        self.config = config
        self.A = big_a
        self.B = big_b
        self.ambient = ambient
        self.frame = frame
        self.psi_a = psi_a
        self.psi_b = psi_b
        self.report = report

    def to_dict(self) -> Dict[str, Any]:
        return {
            "config": self.config.to_dict(),
            "A": self.A.to_dict(),
            "B": self.B.to_dict(),
            "gram": self.ambient.gram.to_dict(),
            "psi_a": self.psi_a.to_dict(),
            "psi_b": self.psi_b.to_dict(),
        }

    def __repr__(self) -> str:
        return f"M2Instance(k={self.config.k}, ambient=Q^{self.ambient.dimension})"


def m2_form(big_a: RationalMatrix, big_b: RationalMatrix) -> FormSpace:
    """Q^{3n} with Gram diag(I_n, A^{-1}, B^{-1})."""
    n = big_a.rows
    return FormSpace(block_diagonal([RationalMatrix.identity(n), inverse(big_a), inverse(big_b)]))


def _psi_identity(frame: Frame, matrix: RationalMatrix, j: int, report: Report,
                  name: str) -> RingElem:
    """
    Verify psi(matrix)_1j = ⊖(E_1j^perp ∩ (E_1 + E_j)); retry without ⊖ on failure.

    Raises:
        IdentityMismatchError: If neither reading holds
    """
    expected = embed_ring(matrix, frame, 1, j)
    reflected = RingElem(frame, 1, j, frame.pair(1, j).perp() & frame.join(1, j))
    lhs = ring_neg(reflected)
    if lhs == expected:
        report.add(name, True, f"psi({name[-1]})_1{j} = ⊖(E_1{j}^perp (E_1 + E_{j}))")
        report.data.setdefault("convention", {})[name] = CONVENTION_NEGATED
        return lhs
    if reflected == expected:
        logger.warning(f"{name}: the identity holds without ⊖; recording the plain reading")
        report.add(name, True, f"psi({name[-1]})_1{j} = E_1{j}^perp (E_1 + E_{j}) (plain reading)")
        report.data.setdefault("convention", {})[name] = CONVENTION_PLAIN
        return reflected
    raise IdentityMismatchError(f"{name} fails in both readings", lhs=lhs.to_dict(),
                                rhs=expected.to_dict())


def build_m2(config: WitnessConfig, verify: bool = True) -> M2Instance:
    """
    Assemble the form, the frame and the designated elements.

    Args:
        config: Level and positive seeds
        verify: Also check positive definiteness both ways and the
            psi-identities

    Returns:
        M2Instance whose report lists every check

    Raises:
        IdentityMismatchError: If a psi-identity fails with and without ⊖
    """
    big_a, big_b = ab_matrices(config.k, config.a, config.b)
    n = config.size
    report = Report(f"witness m2 k={config.k}")
    if verify:
        report.extend(positive_definite_report(config.k, config.a, config.b))
    ambient = m2_form(big_a, big_b)
    frame = canonical_frame(3, n, ambient)
    report.add("frame", frame.valid, f"canonical 3-frame of Q^{3 * n} with {n}x{n} blocks")
    report.add("spanning", frame.spanning, "E_1 + E_2 + E_3 = 1")
    pairwise = all(frame.a(i) <= frame.a(j).perp() for i in frame.indices for j in frame.indices
                   if i != j)
    report.add("orthogonal", pairwise and frame.orthogonal, "E_i <= E_j^perp for i != j")
    if verify:
        psi_a = _psi_identity(frame, big_a, 2, report, "psi-A")
        psi_b = _psi_identity(frame, big_b, 3, report, "psi-B")
    else:
        psi_a = embed_ring(big_a, frame, 1, 2)
        psi_b = embed_ring(big_b, frame, 1, 3)
    logger.info(f"built M2 instance at k={config.k} in Q^{3 * n}")
    return M2Instance(config, big_a, big_b, ambient, frame, psi_a, psi_b, report.finish())
