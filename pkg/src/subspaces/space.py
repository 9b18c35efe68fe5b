"""
Form spaces and their subspaces.

A ``FormSpace`` is Q^n with a positive definite symmetric Gram matrix; a
``Subspace`` is stored by its reduced row echelon basis, so two subspaces are
equal exactly when their bases are equal.
"""

import logging
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Sequence

from src.core.exceptions import (
    AmbientMismatchError,
    DimensionMismatchError,
    FormError,
    NotSymmetricError,
)
from src.exactla import RationalMatrix, block_diagonal, is_positive_definite, kernel, rref
from src.exactla.rational import RationalLike, to_rational

logger = logging.getLogger(__name__)


class FormSpace:
    """
    Q^n carrying a positive definite symmetric bilinear form.

    Positive definiteness is the decidable condition we use for anisotropy;
    indefinite forms are rejected even when they happen to be anisotropic.
    """

    __slots__ = ('gram',)

    def __init__(self, gram: RationalMatrix):
        """
        Initialize the form space.

        Args:
            gram: Gram matrix of the form against the standard basis

        Raises:
            DimensionMismatchError: If gram is not square
            NotSymmetricError: If gram is not symmetric
            FormError: If gram is not positive definite
        """
        if not gram.is_square:
            raise DimensionMismatchError(f"Gram matrix is {gram.rows}x{gram.cols}")
        if not gram.is_symmetric():
            raise NotSymmetricError("Gram matrix must be symmetric")
        if gram.rows and not is_positive_definite(gram):
            raise FormError("Gram matrix is degenerate or not positive definite; "
                            "only positive definite forms are admitted")
        self.gram = gram

    @classmethod
    def identity(cls, n: int) -> 'FormSpace':
        return cls(RationalMatrix.identity(n))

    @classmethod
    def diagonal(cls, values: Sequence[RationalLike]) -> 'FormSpace':
        return cls(RationalMatrix.diag(values))

    @classmethod
    def block_diagonal(cls, blocks: Sequence[RationalMatrix]) -> 'FormSpace':
        return cls(block_diagonal(blocks))

    @property
    def dimension(self) -> int:
        return self.gram.rows

    def inner(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
        """Value of the form on two vectors."""
        g = self.gram
        n = self.dimension
        return sum((x[i] * g[i, j] * y[j] for i in range(n) for j in range(n)
                    if x[i] and y[j]), Fraction(0))

    def zero(self) -> 'Subspace':
        return Subspace(self, RationalMatrix.zeros(0, self.dimension))

    def full(self) -> 'Subspace':
        return Subspace(self, RationalMatrix.identity(self.dimension))

    def span(self, vectors: Iterable[Sequence[RationalLike]]) -> 'Subspace':
        return span(self, vectors)

    def coordinates(self, indices: Iterable[int]) -> 'Subspace':
        """Span of the standard basis vectors with the given 0-based indices."""
        n = self.dimension
        return span(self, [[1 if k == i else 0 for k in range(n)] for i in indices])

    def __eq__(self, other: Any) -> bool:
        if self is other:
            return True
        if not isinstance(other, FormSpace):
            return NotImplemented
        return self.gram == other.gram

    def __hash__(self) -> int:
        return hash(self.gram)

    def to_dict(self) -> Dict[str, Any]:
        return {"dimension": self.dimension, "gram": self.gram.to_dict()}

    def __repr__(self) -> str:
        return f"FormSpace(n={self.dimension})"


class Subspace:
    """
    Subspace of a form space, stored by its canonical basis.

    Supports ``u + v`` (sum), ``u & v`` (intersection), ``u.perp()``
    (orthogonal complement) and ``u <= v`` (inclusion).
    """

    __slots__ = ('ambient', 'basis')

    def __init__(self, ambient: FormSpace, basis: RationalMatrix):
        """
        Wrap a basis that is already in reduced row echelon form without zero rows.

        Use ``span`` for arbitrary generators.
        """
        if basis.cols != ambient.dimension:
            raise DimensionMismatchError(
                f"basis has {basis.cols} columns in a {ambient.dimension}-dimensional space")
        self.ambient = ambient
        self.basis = basis

    @property
    def dim(self) -> int:
        return self.basis.rows

    @property
    def is_zero(self) -> bool:
        return self.basis.rows == 0

    @property
    def is_full(self) -> bool:
        return self.basis.rows == self.ambient.dimension

    def vectors(self) -> List[Sequence[Fraction]]:
        return [row for row in self.basis]

    def contains(self, vector: Sequence[RationalLike]) -> bool:
        return span(self.ambient, self.vectors() + [vector]).dim == self.dim

    def _check_ambient(self, other: 'Subspace') -> None:
        if self.ambient != other.ambient:
            raise AmbientMismatchError("subspaces live in different form spaces")

    def __add__(self, other: 'Subspace') -> 'Subspace':
        return subspace_sum(self, other)

    def __and__(self, other: 'Subspace') -> 'Subspace':
        return intersect(self, other)

    def perp(self) -> 'Subspace':
        return ortho_complement(self)

    def __le__(self, other: 'Subspace') -> bool:
        self._check_ambient(other)
        if self.dim > other.dim:
            return False
        return subspace_sum(self, other).dim == other.dim

    def __ge__(self, other: 'Subspace') -> bool:
        return other <= self

    def __lt__(self, other: 'Subspace') -> bool:
        return self.dim < other.dim and self <= other

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.basis == other.basis and self.ambient == other.ambient

    def __hash__(self) -> int:
        return hash(self.basis)

    def to_dict(self) -> Dict[str, Any]:
        return {"ambient": self.ambient.dimension, "basis": self.basis.to_dict()}

    def __repr__(self) -> str:
        rows = ", ".join("(" + ",".join(str(e) for e in r) + ")" for r in self.basis)
        return f"Subspace(dim={self.dim}, n={self.ambient.dimension}: {rows})"


def span(ambient: FormSpace, vectors: Iterable[Sequence[RationalLike]]) -> Subspace:
    """
    Canonical subspace spanned by the given vectors.

    Args:
        ambient: The form space
        vectors: Vectors of length n

    Returns:
        The span with its reduced row echelon basis

    Raises:
        DimensionMismatchError: If a vector has the wrong length
    """
    n = ambient.dimension
    rows = []
    for v in vectors:
        v = [to_rational(x) for x in v]
        if len(v) != n:
            raise DimensionMismatchError(f"vector of length {len(v)} in Q^{n}")
        if any(v):
            rows.append(v)
    if not rows:
        return Subspace(ambient, RationalMatrix.zeros(0, n))
    reduced, pivots = rref(RationalMatrix.from_rows(rows, cols=n))
    return Subspace(ambient, reduced.submatrix(0, len(pivots), 0, n))


def subspace_sum(u: Subspace, v: Subspace) -> Subspace:
    """Join: span of the union of both bases."""
    u._check_ambient(v)
    if v.is_zero or u.is_full:
        return u
    if u.is_zero or v.is_full:
        return v
    return span(u.ambient, u.vectors() + v.vectors())


def intersect(u: Subspace, v: Subspace) -> Subspace:
    """
    Meet, computed from the kernel of the stacked bases.

    A vector a·U = b·V lies in both; the pairs (a, b) form the left kernel of
    the stacked matrix [U; -V].
    """
    u._check_ambient(v)
    if u.is_zero or v.is_full:
        return u
    if v.is_zero or u.is_full:
        return v
    stacked = u.basis.vstack(-v.basis)
    coefficients = kernel(stacked.transpose())
    if coefficients.rows == 0:
        return u.ambient.zero()
    left = coefficients.submatrix(0, coefficients.rows, 0, u.dim)
    return span(u.ambient, list(left @ u.basis))


def ortho_complement(u: Subspace) -> Subspace:
    """
    Orthogonal complement under the ambient form.

    Returns:
        ``{y : basis @ gram @ y = 0}``; dim u + dim u^perp = n
    """
    if u.is_zero:
        return u.ambient.full()
    null = kernel(u.basis @ u.ambient.gram)
    return span(u.ambient, list(null))


def join_all(ambient: FormSpace, spaces: Iterable[Subspace]) -> Subspace:
    vectors: List[Sequence[Fraction]] = []
    for s in spaces:
        vectors.extend(s.vectors())
    return span(ambient, vectors)


def meet_all(ambient: FormSpace, spaces: Iterable[Subspace]) -> Subspace:
    result = ambient.full()
    for s in spaces:
        result = intersect(result, s)
    return result
