"""
Principal right ideals of Q_m through hermitian idempotents.

The right ideal eR of the matrix ring corresponds to the column space of e.
With the identity involution the hermitian idempotents are the orthogonal
projections, and

    eR + fR = (e + g)R   where gR = (f - ef)R
    eR ∩ fR = (f - fg)R  where Rg = R(f - ef)
"""

from src.core.exceptions import DimensionMismatchError
from src.exactla import RationalMatrix, inverse
from src.subspaces import FormSpace, Subspace


def column_space(m: RationalMatrix) -> Subspace:
    """Span of the columns, in Q^rows with the standard form."""
    return FormSpace.identity(m.rows).span([m.col(j) for j in range(m.cols)])


def hermitian_projection(u: Subspace) -> RationalMatrix:
    """
    Orthogonal projection onto u for the standard form: U (U^T U)^{-1} U^T.

    Raises:
        DimensionMismatchError: If u does not live in a standard form space
    """
    n = u.ambient.dimension
    if u.ambient.gram != RationalMatrix.identity(n):
        raise DimensionMismatchError("hermitian projections use the standard form")
    if u.is_zero:
        return RationalMatrix.zeros(n, n)
    columns = u.basis.transpose()
    return columns @ inverse(u.basis @ columns) @ u.basis


def is_hermitian_idempotent(e: RationalMatrix) -> bool:
    return e.is_symmetric() and e @ e == e


def idempotent_join(e: RationalMatrix, f: RationalMatrix) -> RationalMatrix:
    """
    Hermitian idempotent generating eR + fR.

    Raises:
        DimensionMismatchError: If the matrices are not of the same square size
    """
    if e.shape != f.shape or not e.is_square:
        raise DimensionMismatchError("idempotents must be square of the same size")
    g = hermitian_projection(column_space(f - e @ f))
    return e + g


def idempotent_meet(e: RationalMatrix, f: RationalMatrix) -> RationalMatrix:
    """
    Element generating eR ∩ fR as a right ideal.

    g is the hermitian projection onto the row space of f - ef, so that
    Rg = R(f - ef); the result f - fg is in general not idempotent.
    """
    if e.shape != f.shape or not e.is_square:
        raise DimensionMismatchError("idempotents must be square of the same size")
    g = hermitian_projection(column_space((f - e @ f).transpose()))
    return f - f @ g
