"""
Lattice-level operations on subspaces: relative orthocomplements,
perspectivity witnesses and sample checks of the polarity and modular laws.
"""

import logging
from typing import List, Optional, Sequence

from src.core.exceptions import NotAnAtomError, NotBelowError
from src.core.report import Report
from src.subspaces.space import FormSpace, Subspace, intersect, ortho_complement, span

logger = logging.getLogger(__name__)


def interval_ortho(u: Subspace, x: Subspace) -> Subspace:
    """
    Orthocomplement of x inside the interval [0, u].

    Args:
        u: Top of the interval
        x: Element of the interval

    Returns:
        ``u & x.perp()``

    Raises:
        NotBelowError: If x is not contained in u
    """
    if not x <= u:
        raise NotBelowError("interval_ortho needs x <= u")
    return intersect(u, ortho_complement(x))


def _extend_basis(base: Subspace, candidates: Sequence[Sequence]) -> List[Sequence]:
    """Greedily pick candidates that are independent modulo ``base``."""
    chosen: List[Sequence] = []
    current = base
    for v in candidates:
        grown = span(base.ambient, current.vectors() + [v])
        if grown.dim > current.dim:
            chosen.append(v)
            current = grown
    return chosen


def is_perspective(u: Subspace, v: Subspace) -> Optional[Subspace]:
    """
    Construct a common complement of u and v in [0, u + v].

    Bases of u and v are extended from u & v by the same number of vectors
    u_i, v_i; the witness is spanned by the sums u_i + v_i.

    Args:
        u: First subspace
        v: Second subspace of the same ambient space

    Returns:
        The witness c with u + c = v + c = u + v and u & c = v & c = 0, or
        None when dim u != dim v
    """
    u._check_ambient(v)
    if u.dim != v.dim:
        return None
    common = intersect(u, v)
    extra_u = _extend_basis(common, u.vectors())
    extra_v = _extend_basis(common, v.vectors())
    witness = span(u.ambient, [[a + b for a, b in zip(p, q)]
                               for p, q in zip(extra_u, extra_v)])
    top = u + v
    zero = u.ambient.zero()
    if not (u + witness == top and v + witness == top
            and (u & witness) == zero and (v & witness) == zero):
        raise AssertionError("perspectivity witness failed its complement equations")
    return witness


def check_polarity_sample(space: FormSpace, atoms: Sequence[Subspace]) -> Report:
    """
    Check p + p^perp = 1 and p & p^perp = 0 for sample atoms.

    Args:
        space: The form space
        atoms: One-dimensional subspaces

    Returns:
        Report with one check per atom

    Raises:
        NotAnAtomError: If a sample is not one-dimensional
    """
    report = Report("check_polarity_sample")
    full = space.full()
    for index, p in enumerate(atoms):
        if p.dim != 1:
            raise NotAnAtomError(f"sample {index} has dimension {p.dim}")
        q = ortho_complement(p)
        ok = (p + q) == full and (p & q).is_zero
        report.add(f"atom-{index}", ok, "p + p^perp = 1 and p & p^perp = 0",
                   {"atom": p} if not ok else None)
    return report.finish()


def modular_law_check(u: Subspace, v: Subspace, w: Subspace) -> bool:
    """
    Check u + (v & w) == (u + v) & w.

    Raises:
        NotBelowError: If u is not contained in w
    """
    if not u <= w:
        raise NotBelowError("modular law instance needs u <= w")
    return u + (v & w) == (u + v) & w
