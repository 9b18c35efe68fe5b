"""
The A_k / B_k recursion and its positive definiteness certificates.

    A_1 = (a), B_1 = (b)
    A_{k+1} = [[A_k + B_k, B_k], [B_k, 2 B_k]]
    B_{k+1} = [[B_k, B_k], [B_k, 2 B_k]]

A_k and B_k are 2^{k-1} x 2^{k-1}. With T = [[I, 0], [-I/2, I]],

    T^T (A_{k+1} + c B_{k+1}) T = diag(A_k + (1+c)/2 B_k, 2(1+c) B_k)

and with T_B = [[I, -I], [0, I]], T_B^T B_{k+1} T_B = diag(B_k, B_k). Unfolding
both gives P with P^T (A_k + c B_k) P diagonal.
"""

import logging
from fractions import Fraction
from typing import Any, Dict, Tuple, Union

from src.core.constants import DEFAULT_FAMILY_DEPTH
from src.core.exceptions import NonPositiveSeedError, WitnessError
from src.core.report import Report
from src.exactla import (
    RationalMatrix,
    block_diagonal,
    congruence_transform,
    determinant,
    from_blocks,
    is_positive_definite,
)
from src.exactla.rational import RationalLike, to_rational

logger = logging.getLogger(__name__)

Seed = Union[RationalLike, RationalMatrix]


class WitnessConfig:
    """
    Level and seeds of the recursion.

    Attributes:
        k: Level, at least 1
        a: Positive rational seed of A_1
        b: Positive rational seed of B_1
    """

    def __init__(self, k: int, a: RationalLike = 1, b: RationalLike = 1):
        if k < 1:
            raise WitnessError(f"level must be at least 1, got {k}")
        self.k = k
        self.a = to_rational(a)
        self.b = to_rational(b)
        if self.a <= 0 or self.b <= 0:
            raise NonPositiveSeedError(f"seeds must be positive, got a={self.a}, b={self.b}")

    @property
    def size(self) -> int:
        """n = 2^{k-1}, the size of A_k and B_k."""
        return 2 ** (self.k - 1)

    def to_dict(self) -> Dict[str, Any]:
        return {"k": self.k, "a": self.a, "b": self.b, "n": self.size}

    def __repr__(self) -> str:
        return f"WitnessConfig(k={self.k}, a={self.a}, b={self.b})"


def ab_step(a: RationalMatrix, b: RationalMatrix) -> Tuple[RationalMatrix, RationalMatrix]:
    """One recursion step on square blocks: ([[a+b, b], [b, 2b]], [[b, b], [b, 2b]])."""
    return (from_blocks([[a + b, b], [b, b * 2]]),
            from_blocks([[b, b], [b, b * 2]]))


def ab_matrices(k: int, a: RationalLike = 1, b: RationalLike = 1
                ) -> Tuple[RationalMatrix, RationalMatrix]:
    """
    Exact A_k and B_k.

    Raises:
        NonPositiveSeedError: If a or b is not positive
    """
    config = WitnessConfig(k, a, b)
    big_a = RationalMatrix.scalar(config.a, 1)
    big_b = RationalMatrix.scalar(config.b, 1)
    for _ in range(k - 1):
        big_a, big_b = ab_step(big_a, big_b)
    logger.debug(f"built A_{k}, B_{k} of size {config.size} from a={config.a}, b={config.b}")
    return big_a, big_b


def _halving(n: int) -> RationalMatrix:
    eye = RationalMatrix.identity(n)
    zero = RationalMatrix.zeros(n, n)
    return from_blocks([[eye, zero], [eye * Fraction(-1, 2), eye]])


def _shear(n: int) -> RationalMatrix:
    eye = RationalMatrix.identity(n)
    zero = RationalMatrix.zeros(n, n)
    return from_blocks([[eye, -eye], [zero, eye]])


def b_certificate(k: int, b: RationalLike = 1) -> Tuple[RationalMatrix, RationalMatrix]:
    """(P, D) with P^T B_k P = D = b·I."""
    b = to_rational(b)
    p = RationalMatrix.identity(1)
    d = RationalMatrix.scalar(b, 1)
    for level in range(1, k):
        n = 2 ** (level - 1)
        p = _shear(n) @ block_diagonal([p, p])
        d = block_diagonal([d, d])
    return p, d


def congruence_certificate(k: int, c: RationalLike = 0, a: RationalLike = 1,
                           b: RationalLike = 1) -> Tuple[RationalMatrix, RationalMatrix]:
    """
    (P, D) with P^T (A_k + c B_k) P = D diagonal.

    Args:
        k: Level
        c: Multiple of B_k (0 for A_k itself)
        a, b: Seeds

    Returns:
        Invertible P and diagonal D
    """
    c, a, b = to_rational(c), to_rational(a), to_rational(b)
    if k == 1:
        return RationalMatrix.identity(1), RationalMatrix.scalar(a + c * b, 1)
    n = 2 ** (k - 2)
    p_a, d_a = congruence_certificate(k - 1, (1 + c) / 2, a, b)
    p_b, d_b = b_certificate(k - 1, b)
    p = _halving(n) @ block_diagonal([p_a, p_b])
    d = block_diagonal([d_a, d_b * (2 * (1 + c))])
    return p, d


def certificate_holds(k: int, c: RationalLike = 0, a: RationalLike = 1,
                      b: RationalLike = 1) -> bool:
    """Verify P^T (A_k + c B_k) P = D exactly and that D is positive."""
    big_a, big_b = ab_matrices(k, a, b)
    p, d = congruence_certificate(k, c, a, b)
    target = big_a + big_b * to_rational(c)
    diagonal = all(d[i, j] == 0 for i in range(d.rows) for j in range(d.cols) if i != j)
    return (congruence_transform(p, target) == d and diagonal
            and all(d[i, i] > 0 for i in range(d.rows)))


def positive_definite_report(k: int, a: RationalLike = 1, b: RationalLike = 1) -> Report:
    """
    Positive definiteness of A_k and B_k by leading minors and by the
    congruence certificates; the two methods must agree.
    """
    report = Report(f"witness ab k={k}")
    big_a, big_b = ab_matrices(k, a, b)
    by_minors = {"A": is_positive_definite(big_a), "B": is_positive_definite(big_b)}
    p_b, d_b = b_certificate(k, b)
    by_transform = {"A": certificate_holds(k, 0, a, b),
                    "B": congruence_transform(p_b, big_b) == d_b and to_rational(b) > 0}
    for name in ("A", "B"):
        report.add(f"{name}-minors", by_minors[name], f"{name}_{k} leading principal minors > 0")
        report.add(f"{name}-congruence", by_transform[name],
                   f"{name}_{k} congruent to a positive diagonal matrix")
    report.add("methods-agree", by_minors == by_transform,
               "minor test and congruence certificates agree",
               None if by_minors == by_transform else {"minors": by_minors,
                                                       "congruence": by_transform})
    report.data.update({"A": big_a, "B": big_b})
    return report.finish()


def family_member(a: Seed, b: Seed, j: int) -> Seed:
    """a + (1 - 2^{-j}) b."""
    c = 1 - Fraction(1, 2 ** j)
    if isinstance(a, RationalMatrix):
        return a + b * c
    return to_rational(a) + c * to_rational(b)


def _invertible(value: Seed) -> bool:
    if isinstance(value, RationalMatrix):
        return determinant(value) != 0
    return value != 0


def _same_sign(a: Seed, b: Seed) -> bool:
    if isinstance(a, RationalMatrix):
        return (a.is_symmetric() and b.is_symmetric()
                and (is_positive_definite(a) and is_positive_definite(b)
                     or is_positive_definite(-a) and is_positive_definite(-b)))
    a, b = to_rational(a), to_rational(b)
    return (a > 0 and b > 0) or (a < 0 and b < 0)


def invertibility_family_check(a: Seed, b: Seed,
                               depth: int = DEFAULT_FAMILY_DEPTH) -> Report:
    """
    Check that a + (1 - 2^{-j}) b is invertible for j = 0..depth.

    a and b are rationals or square matrices of one size. When a and b are
    both positive (or both negative) definite every member of the family is
    invertible, reported as ``data['all_j']``.
    """
    if isinstance(a, RationalMatrix) != isinstance(b, RationalMatrix):
        raise WitnessError("a and b must both be rationals or both be matrices")
    report = Report("invertibility family")
    violation = None
    for j in range(depth + 1):
        if not _invertible(family_member(a, b, j)):
            violation = j
            break
    report.add("family", violation is None,
               f"a + (1 - 2^-j) b invertible for j <= {depth}",
               {"j": violation} if violation is not None else None)
    report.data["all_j"] = _same_sign(a, b)
    report.data["first_violation"] = violation
    return report.finish()
