"""
Ring operations evaluated both ways: as lattice polynomials on embedded
elements and as matrix arithmetic.
"""

import logging
from typing import List, Optional, Sequence

from src.core.exceptions import FrameError, SingularMatrixError
from src.core.report import Report
from src.exactla import RationalMatrix, inverse
from src.frames.frame import Frame
from src.frames.involution import corner_involution
from src.frames.polynomials import form_blocks, star_polynomial
from src.frames.ring import (
    RingElem,
    coordinate,
    embed_ring,
    ring_add,
    ring_inverse,
    ring_mul,
    ring_neg,
)

logger = logging.getLogger(__name__)

RING_OPS = ("add", "mul", "neg", "inv", "star")
ARITY = {"add": 2, "mul": 2, "neg": 1, "inv": 1, "star": 1}


def _lattice(op: str, elems: List[RingElem], aux: Optional[int]) -> Optional[RingElem]:
    if op == "add":
        return ring_add(elems[0], elems[1], aux)
    if op == "mul":
        return ring_mul(elems[0], elems[1], aux)
    if op == "neg":
        return ring_neg(elems[0], aux)
    if op == "inv":
        return ring_inverse(elems[0], aux)
    return star_polynomial(elems[0], aux)


def _matrix(op: str, frame: Frame, values: List[RationalMatrix]) -> Optional[RationalMatrix]:
    if op == "add":
        return values[0] + values[1]
    if op == "mul":
        return values[0] @ values[1]
    if op == "neg":
        return -values[0]
    if op == "inv":
        try:
            return inverse(values[0])
        except SingularMatrixError:
            return None
    return corner_involution(form_blocks(frame), values[0])


def apply_ring_op(op: str, frame: Frame, values: Sequence[RationalMatrix],
                  i: int = 1, j: int = 2, aux: Optional[int] = None) -> Report:
    """
    Evaluate a ring operation by its lattice polynomial and compare with
    matrix arithmetic.

    Args:
        op: One of add, mul, neg, inv, star
        frame: Frame with coordinate blocks
        values: Operand matrices (m x m)
        i, j: Coordinate domain; star always works in R_12
        aux: Auxiliary index, least available when omitted

    Returns:
        Report with checks ``in-domain`` and ``oracle``; ``data['result']``
        holds the coordinate of the lattice result (None for a non-invertible
        operand of ``inv``)

    Raises:
        FrameError: On an unknown operation or a wrong operand count
    """
    if op not in RING_OPS:
        raise FrameError(f"unknown ring operation {op!r}; expected one of {', '.join(RING_OPS)}")
    if len(values) != ARITY[op]:
        raise FrameError(f"{op} takes {ARITY[op]} operand(s), got {len(values)}")
    if op == "star":
        i, j = 1, 2
    report = Report(f"frame ring-op {op}")
    elems = [embed_ring(v, frame, i, j) for v in values]
    result = _lattice(op, elems, aux)
    expected = _matrix(op, frame, list(values))
    if result is None:
        report.add("oracle", expected is None, "lattice and matrix agree on non-invertibility",
                   {"matrix_inverse": expected} if expected is not None else None)
        report.data["result"] = None
        return report.finish()
    report.add("in-domain", result.indices == (i, j), f"result lies in R_{i}{j}")
    value = coordinate(result)
    agrees = expected is not None and value == expected
    report.add("oracle", agrees, "lattice polynomial matches matrix arithmetic",
               None if agrees else {"lattice": value, "matrix": expected})
    report.data["result"] = value
    report.data["carrier"] = result.carrier
    logger.debug(f"{op} on {len(values)} operand(s) in R_{i}{j}: {value!r}")
    return report.finish()


def oracle_sweep(frame: Frame, samples: Sequence[RationalMatrix],
                 ops: Sequence[str] = ("add", "mul", "neg", "inv"),
                 i: int = 1, j: int = 2) -> Report:
    """
    Run every operation on every sample (all ordered pairs for binary operations).

    Returns:
        Report with one check per operation; the first disagreement is the witness
    """
    report = Report("ring oracle sweep")
    for op in ops:
        if ARITY[op] == 2:
            operands = [[s, r] for s in samples for r in samples]
        else:
            operands = [[s] for s in samples]
        results = [apply_ring_op(op, frame, values, i, j) for values in operands]
        failed = [r for r in results if not r.passed]
        report.add(op, not failed, f"{len(results)} evaluations",
                   failed[0].failures()[0].witness if failed else None)
    return report.finish()
