"""
The doubling embedding L(Q^m) -> L(Q^{2m}), x -> x ⊕ x.
"""

import logging
from fractions import Fraction
from typing import Optional

from src.core.exceptions import DimensionMismatchError
from src.core.report import Report
from src.exactla import block_diagonal
from src.subspaces import FormSpace, Subspace

logger = logging.getLogger(__name__)


def doubled_space(space: FormSpace) -> FormSpace:
    """Q^{2m} with Gram diag(g, g)."""
    return FormSpace(block_diagonal([space.gram, space.gram]))


def doubling_embed(u: Subspace, target: Optional[FormSpace] = None) -> Subspace:
    """
    Map u to {(x, y) : x, y in u}.

    A 0-1 lattice embedding that preserves orthocomplements and doubles
    dimensions; e_1 Q in Q^2 goes to span{e_1, e_3}.

    Args:
        u: Subspace of Q^m
        target: Form space Q^{2m}; diag(g, g) for the Gram g of u's space
            when omitted

    Raises:
        DimensionMismatchError: If the target does not have dimension 2m
    """
    m = u.ambient.dimension
    space = target or doubled_space(u.ambient)
    if space.dimension != 2 * m:
        raise DimensionMismatchError(f"doubling Q^{m} needs Q^{2 * m}, got Q^{space.dimension}")
    zeros = [Fraction(0)] * m
    vectors = []
    for v in u.vectors():
        vectors.append(list(v) + zeros)
        vectors.append(zeros + list(v))
    logger.debug(f"doubling a {u.dim}-dimensional subspace of Q^{m}")
    return space.span(vectors)


def check_doubling(u: Subspace, v: Subspace) -> Report:
    """
    Homomorphism checks for one pair: joins, meets, orthocomplements and
    dimension doubling.
    """
    report = Report("witness double")
    du, dv = doubling_embed(u), doubling_embed(v)
    report.add("join", doubling_embed(u + v) == du + dv, "phi(u + v) = phi(u) + phi(v)")
    report.add("meet", doubling_embed(u & v) == du & dv, "phi(u v) = phi(u) phi(v)")
    report.add("ortho", doubling_embed(u.perp()) == du.perp(), "phi(u^perp) = phi(u)^perp")
    report.add("dimension", du.dim == 2 * u.dim, f"dim phi(u) = 2 dim u = {2 * u.dim}")
    report.data["image"] = du
    return report.finish()
