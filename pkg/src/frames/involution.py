"""
The matrix involution of a block diagonal hermitian form.

For Gram blocks alpha_1..alpha_n the involution on n x n block matrices is

    (x*)_ij = alpha_i^{-1} (x_ji)^T alpha_j

Over Q the base involution is the identity, so hermitian means symmetric.
"""

import logging
from typing import List, Sequence

from src.core.exceptions import DimensionMismatchError, SingularAlphaError, SingularMatrixError
from src.core.report import Report
from src.exactla import RationalMatrix, from_blocks, inverse

logger = logging.getLogger(__name__)


def _inverses(alpha: Sequence[RationalMatrix]) -> List[RationalMatrix]:
    if not alpha:
        raise DimensionMismatchError("at least one form block is needed")
    m = alpha[0].rows
    out = []
    for index, block in enumerate(alpha, 1):
        if block.shape != (m, m):
            raise DimensionMismatchError(f"alpha_{index} is {block.rows}x{block.cols}, "
                                         f"expected {m}x{m}")
        try:
            out.append(inverse(block))
        except SingularMatrixError:
            raise SingularAlphaError(f"alpha_{index} is singular")
    return out


def matrix_involution(alpha: Sequence[RationalMatrix], x: RationalMatrix) -> RationalMatrix:
    """
    Apply the involution determined by the form blocks.

    Args:
        alpha: Invertible symmetric m x m blocks alpha_1..alpha_n
        x: nm x nm matrix

    Returns:
        x* with (x*)_ij = alpha_i^{-1} x_ji^T alpha_j

    Raises:
        SingularAlphaError: If some alpha_i is singular
        DimensionMismatchError: If the sizes disagree
    """
    inverses = _inverses(alpha)
    n, m = len(alpha), alpha[0].rows
    if x.shape != (n * m, n * m):
        raise DimensionMismatchError(
            f"expected a {n * m}x{n * m} matrix, got {x.rows}x{x.cols}")
    grid = [[inverses[i] @ x.block(j, i, m).transpose() @ alpha[j] for j in range(n)]
            for i in range(n)]
    return from_blocks(grid)


def corner_involution(alpha: Sequence[RationalMatrix], r: RationalMatrix) -> RationalMatrix:
    """(1,1) block of x* for x with r in the (1,1) block: alpha_1^{-1} r^T alpha_1."""
    n, m = len(alpha), alpha[0].rows
    grid = [[r if (i, j) == (0, 0) else RationalMatrix.zeros(m, m) for j in range(n)]
            for i in range(n)]
    return matrix_involution(alpha, from_blocks(grid)).block(0, 0, m)


def star_regularity_check(alpha: Sequence[RationalMatrix], x: RationalMatrix) -> Report:
    """
    Check that x* x = 0 forces x = 0, and that ** is the identity on x.

    Returns:
        Report with checks ``involutive`` and ``regular``
    """
    report = Report("star regularity")
    star = matrix_involution(alpha, x)
    report.add("involutive", matrix_involution(alpha, star) == x, "x** = x")
    product = star @ x
    report.add("regular", not product.is_zero() or x.is_zero(),
               "x*x = 0 implies x = 0",
               None if not product.is_zero() or x.is_zero() else {"x": x})
    report.data["star"] = star
    return report.finish()
