"""
Exact rational linear algebra.

Dense matrices of ``fractions.Fraction`` entries with reduced row echelon
forms, kernels, inverses, determinants and positive definiteness by leading
principal minors.
"""

from .rational import Rational, format_rational, parse_rational, to_rational
from .matrix import RationalMatrix, block_diagonal, from_blocks
from .linalg import (
    congruence_transform,
    determinant,
    inverse,
    is_positive_definite,
    kernel,
    leading_principal_minors,
    rank,
    rref,
)
from .io import load_matrix, read_matrix, save_matrix, write_matrix

__all__ = [
    'Rational', 'format_rational', 'parse_rational', 'to_rational',
    'RationalMatrix', 'block_diagonal', 'from_blocks',
    'congruence_transform', 'determinant', 'inverse', 'is_positive_definite',
    'kernel', 'leading_principal_minors', 'rank', 'rref',
    'load_matrix', 'read_matrix', 'save_matrix', 'write_matrix',
]
