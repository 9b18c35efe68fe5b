"""
Exact Gaussian elimination and the routines built on it.

Pivoting picks the first nonzero entry in the column; with exact rationals
there is no conditioning to worry about.
"""

import logging
from fractions import Fraction
from typing import List, Tuple

from src.core.exceptions import (
    DimensionMismatchError,
    NotSymmetricError,
    SingularMatrixError,
)
from src.exactla.matrix import RationalMatrix

logger = logging.getLogger(__name__)


def _eliminate(a: List[List[Fraction]], cols: int) -> List[int]:
    """Bring ``a`` to reduced row echelon form in place; return pivot columns."""
    rows = len(a)
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pivot = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        head = a[r][c]
        if head != 1:
            a[r] = [x / head for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                factor = a[i][c]
                a[i] = [x - factor * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return pivots


def rref(m: RationalMatrix) -> Tuple[RationalMatrix, List[int]]:
    """
    Compute the reduced row echelon form.

    Args:
        m: Any matrix

    Returns:
        The unique reduced row echelon form (zero rows trailing) and its
        pivot columns
    """
    a = m.to_rows()
    pivots = _eliminate(a, m.cols)
    return RationalMatrix.from_rows(a, cols=m.cols), pivots


def rank(m: RationalMatrix) -> int:
    return len(rref(m)[1])


def kernel(m: RationalMatrix) -> RationalMatrix:
    """
    Basis of the right null space ``{x : m x = 0}``, one vector per row.

    Args:
        m: Any matrix

    Returns:
        Matrix whose rows span the null space (zero rows when trivial)
    """
    reduced, pivots = rref(m)
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for row_index, p in enumerate(pivots):
            v[p] = -reduced[row_index, f]
        basis.append(v)
    return RationalMatrix.from_rows(basis, cols=m.cols)


def inverse(m: RationalMatrix) -> RationalMatrix:
    """
    Exact inverse.

    Args:
        m: Square matrix

    Returns:
        ``m^-1`` with ``m @ m^-1 == I``

    Raises:
        DimensionMismatchError: If m is not square
        SingularMatrixError: If m has rank below its dimension
    """
    if not m.is_square:
        raise DimensionMismatchError(f"inverse of a {m.rows}x{m.cols} matrix")
    n = m.rows
    augmented = m.hstack(RationalMatrix.identity(n)).to_rows()
    pivots = _eliminate(augmented, n)
    if pivots != list(range(n)):
        raise SingularMatrixError(f"matrix has rank {len(pivots)} < {n}")
    return RationalMatrix.from_rows([row[n:] for row in augmented], cols=n)


def determinant(m: RationalMatrix) -> Fraction:
    """Exact determinant by elimination."""
    if not m.is_square:
        raise DimensionMismatchError(f"determinant of a {m.rows}x{m.cols} matrix")
    a = m.to_rows()
    n = m.rows
    det = Fraction(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if a[i][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            a[c], a[pivot] = a[pivot], a[c]
            det = -det
        head = a[c][c]
        det *= head
        for i in range(c + 1, n):
            if a[i][c] != 0:
                factor = a[i][c] / head
                a[i] = [x - factor * y for x, y in zip(a[i], a[c])]
    return det


def leading_principal_minors(g: RationalMatrix) -> List[Fraction]:
    """Determinants of the leading k x k submatrices, k = 1..n."""
    return [determinant(g.submatrix(0, k, 0, k)) for k in range(1, g.rows + 1)]


def is_positive_definite(g: RationalMatrix) -> bool:
    """
    Exact positive definiteness test.

    Args:
        g: Square symmetric matrix

    Returns:
        True iff all leading principal minors are positive

    Raises:
        NotSymmetricError: If g is not square and symmetric
    """
    if not g.is_symmetric():
        raise NotSymmetricError("positive definiteness needs a symmetric matrix")
    return all(minor > 0 for minor in leading_principal_minors(g))


def congruence_transform(p: RationalMatrix, g: RationalMatrix) -> RationalMatrix:
    """
    Congruence transform ``transpose(p) @ g @ p``.

    Args:
        p: Invertible change of basis
        g: Square matrix of matching size

    Returns:
        The transformed matrix

    Raises:
        DimensionMismatchError: On incompatible shapes
        SingularMatrixError: If p is singular
    """
    if not g.is_square or not p.is_square or p.rows != g.rows:
        raise DimensionMismatchError(
            f"cannot transform a {g.rows}x{g.cols} form by a {p.rows}x{p.cols} matrix")
    if rank(p) < p.rows:
        raise SingularMatrixError("congruence transform needs an invertible matrix")
    return p.transpose() @ g @ p
