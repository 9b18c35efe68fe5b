"""
Recovering an orthocomplement from an anisotropic orthogonality.

If every x has some x' with x' orthogonal to x and y <= x + (x + y)·x' for all
y, then x' is the largest element orthogonal to x and the lattice with
x -> x' is orthomodular.
"""

import logging

import numpy as np

from src.core.exceptions import LatticeError, NoComplementFoundError
from src.finlat.lattice import FiniteOrtholattice
from src.finlat.validate import is_orthomodular

logger = logging.getLogger(__name__)


def canonical_orthogonality(l: FiniteOrtholattice) -> np.ndarray:
    """x orthogonal to y iff x <= y'."""
    return l.leq[:, l.ortho]


def reconstruct_orthocomplement(l: FiniteOrtholattice, perp: np.ndarray) -> np.ndarray:
    """
    Find the orthocomplement determined by an orthogonality relation.

    Args:
        l: A bounded lattice
        perp: Symmetric boolean matrix ``perp[x, y]``

    Returns:
        The table x -> x'

    Raises:
        LatticeError: If perp is not anisotropic or the result is not
            orthomodular
        NoComplementFoundError: If some x has no admissible x'
    """
    perp = np.asarray(perp, dtype=bool)
    nonzero = np.arange(l.size) != l.bottom
    if (perp.diagonal() & nonzero).any():
        raise LatticeError("orthogonality is not anisotropic")
    join, meet, leq = l.join, l.meet, l.leq
    ys = np.arange(l.size)
    table = np.empty(l.size, dtype=np.int64)
    for x in range(l.size):
        found = None
        for z in np.flatnonzero(perp[:, x]):
            values = join[x, meet[join[x], z]]
            if leq[ys, values].all():
                found = int(z)
                break
        if found is None:
            raise NoComplementFoundError(l.names[x])
        table[x] = found
    result = FiniteOrtholattice(l.names, l.leq, table, join=l.join, meet=l.meet)
    if not is_orthomodular(result):
        raise LatticeError("reconstructed orthocomplement is not orthomodular")
    return table
