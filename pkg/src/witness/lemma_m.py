"""
Replay of the 6-frame construction inside a 3-frame over Q_{2m}.

With a, b invertible in Q_m (and every a + (1 - 2^{-j}) b invertible), put

    A = [[a + b, b], [b, 2b]],   B = [[b, b], [b, 2b]]

in Q_{2m}. Starting from the 3-frame E, A_12 and B_13 the replay computes
the elements of the finer 6-frame E6 (first halves of the E blocks are
E6_1..E6_3, second halves E6_4..E6_6), the corner matrices diag(c, 0)_12
and the matrix units, comparing every lattice value with the expected
subspace.
"""

import logging
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from src.core.constants import DEFAULT_FAMILY_DEPTH
from src.core.exceptions import CapExceededError, FrameError, WitnessError
from src.core.report import Report
from src.exactla import RationalMatrix, determinant, from_blocks, inverse
from src.exactla.rational import to_rational
from src.frames import (
    Frame,
    RingElem,
    canonical_frame,
    check_frame,
    coordinate_frame,
    embed_ring,
    ring_add,
    ring_mul,
    ring_sub,
    transport,
)
from src.subspaces import FormSpace, Subspace
from src.witness.recursion import Seed, ab_step, family_member, invertibility_family_check

logger = logging.getLogger(__name__)

LEMMA_M_STEPS = (
    "hypothesis",
    "triangular-A",
    "triangular-B",
    "invertible",
    "a-block",
    "E6_2",
    "E6_4",
    "E6_1",
    "E6_3",
    "E6_5",
    "E6_6",
    "E6_12",
    "E6_13",
    "E6_23",
    "E6_45",
    "E6_46",
    "E6_56",
    "unit-block",
    "b-block",
    "inverse-block-a",
    "inverse-block-b",
    "off-block",
    "lower-unit",
    "upper-unit",
    "E6_15",
    "frame-closure",
    "sample-ring",
)

# (i, k) from (i, j) + (j, k) once E6_15 is known
_CLOSURE_ORDER = (
    (2, 1, 5), (3, 1, 5), (1, 5, 4), (1, 5, 6),
    (2, 5, 4), (2, 5, 6), (3, 5, 4), (3, 5, 6),
)


def _dump(value: Any) -> Any:
    if isinstance(value, RingElem):
        return {"indices": list(value.indices), "carrier": value.carrier.to_dict()}
    if hasattr(value, "to_dict"):
        return value.to_dict()
    return value


class StepTrace:
    """
    Records proof steps into a report, counting them against a cap.

    Attributes:
        report: Target report
        cap: Maximum number of steps, or None
        prefix: Prepended to every step name
        count: Steps recorded so far
        trace: Step names in order
    """

    def __init__(self, report: Report, cap: Optional[int] = None, prefix: str = ""):
        self.report = report
        self.cap = cap
        self.prefix = prefix
        self.count = 0
        self.trace: List[str] = []

    def record(self, name: str, passed: bool, detail: str = "",
               witness: Optional[Dict[str, Any]] = None) -> bool:
        self.count += 1
        if self.cap is not None and self.count > self.cap:
            self.report.data["trace"] = list(self.trace)
            raise CapExceededError(f"proof replay exceeded {self.cap} steps at {name}",
                                   partial=self.report.finish())
        full = f"{self.prefix}{name}"
        self.report.add(full, passed, detail, witness)
        self.trace.append(full)
        logger.debug(f"{full}: {'ok' if passed else 'FAILED'}")
        return passed

    def check(self, name: str, lhs: Any, rhs: Any, detail: str = "") -> bool:
        """Record whether the computed value equals the expected one."""
        passed = lhs == rhs
        witness = None if passed else {"lhs": _dump(lhs), "rhs": _dump(rhs)}
        return self.record(name, passed, detail, witness)


def _as_block(value: Seed, m: int) -> RationalMatrix:
    if isinstance(value, RationalMatrix):
        if value.shape != (m, m):
            raise WitnessError(f"expected a {m}x{m} seed, got {value.rows}x{value.cols}")
        return value
    return RationalMatrix.scalar(to_rational(value), m)


def corner(c: RationalMatrix) -> RationalMatrix:
    """diag(c, 0) in Q_{2m}."""
    zero = RationalMatrix.zeros(c.rows, c.rows)
    return from_blocks([[c, zero], [zero, zero]])


def lower_unit(m: int) -> RationalMatrix:
    """[[0, 0], [1, 0]] in Q_{2m}."""
    zero, eye = RationalMatrix.zeros(m, m), RationalMatrix.identity(m)
    return from_blocks([[zero, zero], [eye, zero]])


def upper_unit(m: int) -> RationalMatrix:
    """[[0, 1], [0, 0]] in Q_{2m}."""
    zero, eye = RationalMatrix.zeros(m, m), RationalMatrix.identity(m)
    return from_blocks([[zero, eye], [zero, zero]])


def six_frame_blocks(frame: Frame) -> List[List[int]]:
    """Coordinate blocks of E6: first halves of the E blocks, then second halves."""
    if frame.blocks is None or frame.n != 3 or frame.block_size % 2:
        raise FrameError("the 6-frame needs a 3-frame with blocks of even size")
    h = frame.block_size // 2
    return [b[:h] for b in frame.blocks] + [b[h:] for b in frame.blocks]


def _triangular_checks(trace: StepTrace, a: RationalMatrix, b: RationalMatrix,
                       big_a: RationalMatrix, big_b: RationalMatrix, depth: int) -> None:
    m = a.rows
    eye, zero = RationalMatrix.identity(m), RationalMatrix.zeros(m, m)
    left_a = from_blocks([[eye, eye * Fraction(-1, 2)], [zero, eye]])
    bad = []
    for j in range(depth + 1):
        c = 1 - Fraction(1, 2 ** j)
        lhs = left_a @ (big_a + big_b * c)
        s = 2 - Fraction(1, 2 ** j)
        rhs = from_blocks([[family_member(a, b, j + 1), zero], [b * s, b * (2 * s)]])
        if lhs != rhs:
            bad.append(j)
    trace.record("triangular-A", not bad,
                 f"[[1, -1/2], [0, 1]] (A + (1 - 2^-j) B) is block triangular, j <= {depth}",
                 {"j": bad[0]} if bad else None)
    left_b = from_blocks([[eye, zero], [-eye, eye]])
    trace.check("triangular-B", left_b @ big_b, from_blocks([[b, b], [zero, b]]),
                "[[1, 0], [-1, 1]] B = [[b, b], [0, b]]")
    singular = [j for j in range(depth + 1)
                if determinant(big_a + big_b * (1 - Fraction(1, 2 ** j))) == 0]
    b_ok = determinant(big_b) != 0
    trace.record("invertible", not singular and b_ok,
                 f"B and A + (1 - 2^-j) B invertible for j <= {depth}",
                 None if not singular and b_ok else {"j": singular[:1], "B": b_ok})


def replay_lemma_m(frame: Frame, a_12: RingElem, b_13: RingElem, a: RationalMatrix,
                   b: RationalMatrix, trace: StepTrace,
                   depth: int = DEFAULT_FAMILY_DEPTH) -> Optional[Dict[str, Any]]:
    """
    Run every step of the construction on a 3-frame with coordinate blocks.

    Args:
        frame: 3-frame with blocks of size 2m
        a_12: The generator A_12
        b_13: The generator B_13
        a, b: m x m seeds of A and B
        trace: Step recorder
        depth: Largest j of the invertibility family

    Returns:
        The computed elements, with ``frame6`` the E6 frame built from them,
        or None when the hypothesis or the frame assembly fails
    """
    m = a.rows
    family = invertibility_family_check(a, b, depth + 1)
    hypothesis = family.passed and determinant(a) != 0 and determinant(b) != 0
    trace.record("hypothesis", hypothesis, "a, b and a + (1 - 2^-j) b invertible",
                 None if hypothesis else {"first_violation": family.data["first_violation"]})
    if not hypothesis:
        return None
    big_a, big_b = ab_step(a, b)
    _triangular_checks(trace, a, b, big_a, big_b, depth)

    f = frame
    blocks6 = six_frame_blocks(f)
    expected6 = coordinate_frame(f.ambient, blocks6)

    def embed(matrix: RationalMatrix, i: int = 1, j: int = 2) -> RingElem:
        return embed_ring(matrix, f, i, j)

    b_12 = transport(b_13, (1, 2))
    a_blk = ring_sub(a_12, b_12)
    trace.check("a-block", a_blk, embed(corner(a)), "diag(a, 0) = A - B")

    e6: Dict[int, Subspace] = {}
    e6[2] = f.a(2) & (f.a(1) + a_blk.carrier)
    trace.check("E6_2", e6[2], expected6.a(2), "E6_2 = E_2 (E_1 + diag(a, 0)_12)")
    e6[4] = a_blk.carrier & f.a(1)
    trace.check("E6_4", e6[4], expected6.a(4), "E6_4 = diag(a, 0)_12 E_1")
    for i in (1, 3):
        e6[i] = f.a(i) & (e6[2] + f.pair(2, i))
        trace.check(f"E6_{i}", e6[i], expected6.a(i), f"E6_{i} = E_{i} (E6_2 + E_2{i})")
    for i in (5, 6):
        e6[i] = f.a(i - 3) & (e6[4] + f.pair(1, i - 3))
        trace.check(f"E6_{i}", e6[i], expected6.a(i), f"E6_{i} = E_{i - 3} (E6_4 + E_1{i - 3})")

    pairs6: Dict[Tuple[int, int], Subspace] = {}
    for i, j in ((1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6)):
        p, q = (i, j) if i <= 3 else (i - 3, j - 3)
        pairs6[(i, j)] = f.pair(p, q) & (e6[i] + e6[j])
        trace.check(f"E6_{i}{j}", pairs6[(i, j)], expected6.pair(i, j),
                    f"E6_{i}{j} = E_{p}{q} (E6_{i} + E6_{j})")

    unit_blk = RingElem(f, 1, 2, (pairs6[(1, 2)] + e6[4]) & f.join(1, 2), check=False)
    trace.check("unit-block", unit_blk, embed(corner(RationalMatrix.identity(m))),
                "diag(1, 0)_12 = (E6_12 + E6_4)(E_1 + E_2)")
    b_blk = ring_mul(unit_blk, ring_mul(b_12, unit_blk))
    trace.check("b-block", b_blk, embed(corner(b)), "diag(b, 0) = diag(1, 0) B diag(1, 0)")

    inverses: Dict[str, RingElem] = {}
    for name, blk, c in (("a", a_blk, a), ("b", b_blk, b)):
        swapped = transport(blk, (2, 1))
        carrier = (swapped.carrier + e6[4] + e6[5]) & (f.a(1) + e6[2])
        inverses[name] = RingElem(f, 1, 2, carrier, check=False)
        trace.check(f"inverse-block-{name}", inverses[name], embed(corner(inverse(c))),
                    f"diag({name}^-1, 0)_12 = (diag({name}, 0)_21 + E6_4 + E6_5)(E_1 + E6_2)")

    sum_blk = ring_add(a_blk, b_blk)
    off_blk = ring_sub(a_12, sum_blk)
    zero = RationalMatrix.zeros(m, m)
    trace.check("off-block", off_blk, embed(from_blocks([[zero, b], [b, b * 2]])),
                "[[0, b], [b, 2b]] = A - diag(a + b, 0)")
    lower = ring_mul(off_blk, inverses["b"])
    trace.check("lower-unit", lower, embed(lower_unit(m)),
                "[[0, 0], [1, 0]] = [[0, b], [b, 2b]] diag(b^-1, 0)")
    upper = ring_mul(inverses["b"], off_blk)
    trace.check("upper-unit", upper, embed(upper_unit(m)),
                "[[0, 1], [0, 0]] = diag(b^-1, 0) [[0, b], [b, 2b]]")

    pairs6[(1, 5)] = (lower.carrier + e6[4]) & (e6[1] + e6[5])
    trace.check("E6_15", pairs6[(1, 5)], expected6.pair(1, 5),
                "E6_15 = ([[0, 0], [1, 0]]_12 + E6_4)(E6_1 + E6_5)")

    def known(p: int, q: int) -> Subspace:
        return pairs6[(p, q)] if (p, q) in pairs6 else pairs6[(q, p)]

    for i, j, k in _CLOSURE_ORDER:
        key = (min(i, k), max(i, k))
        pairs6[key] = (known(i, j) + known(j, k)) & (e6[i] + e6[k])
        trace.check(f"E6_{key[0]}{key[1]}", pairs6[key], expected6.pair(*key),
                    f"E6_{i}{k} = (E6_{i}{j} + E6_{j}{k})(E6_{i} + E6_{k})")
    try:
        frame6 = check_frame([e6[i] for i in range(1, 7)], pairs6, blocks6)
    except FrameError as e:
        trace.record("frame-closure", False, "computed elements form a 6-frame",
                     {"error": str(e)})
        return None
    trace.record("frame-closure", True, "computed elements form the 6-frame E6")

    samples = {
        "ab": (ring_mul(a_blk, b_blk), a @ b),
        "a+b": (sum_blk, a + b),
        "a^-1 b": (ring_mul(inverses["a"], b_blk), inverse(a) @ b),
    }
    bad = [label for label, (elem, c) in samples.items() if elem != embed(corner(c))]
    trace.record("sample-ring", not bad, "diag(c, 0) for c in {ab, a + b, a^-1 b}",
                 {"failed": bad} if bad else None)

    return {
        "frame6": frame6,
        "a-block": a_blk,
        "b-block": b_blk,
        "unit-block": unit_blk,
        "inverse-a": inverses["a"],
        "inverse-b": inverses["b"],
        "lower-unit": lower,
        "upper-unit": upper,
        "samples": {label: elem for label, (elem, _) in samples.items()},
    }


def verify_lemma_m(m: int = 1, a: Seed = 1, b: Seed = 1,
                   depth: int = DEFAULT_FAMILY_DEPTH) -> Report:
    """
    Evaluate every identity of the construction in L(Q^{6m}).

    The ambient carries the standard form and the canonical 3-frame with
    2m x 2m blocks; the generators are A_12 and B_13.

    Args:
        m: Size of a and b
        a, b: Rationals (standing for multiples of I_m) or m x m matrices
        depth: Largest j checked in the invertibility family

    Returns:
        Report with one check per step; failures carry both sides
    """
    a, b = _as_block(a, m), _as_block(b, m)
    report = Report(f"witness lemma-m m={m}")
    trace = StepTrace(report)
    frame = canonical_frame(3, 2 * m, FormSpace.identity(6 * m))
    big_a, big_b = ab_step(a, b)
    replay_lemma_m(frame, embed_ring(big_a, frame, 1, 2), embed_ring(big_b, frame, 1, 3),
                   a, b, trace, depth)
    report.data["A"] = big_a
    report.data["B"] = big_b
    report.data["trace"] = trace.trace
    logger.info(f"lemma replay in Q^{6 * m}: {len(report.failures())} failing step(s)")
    return report.finish()


def covered_steps(report: Report, prefix: str = "") -> List[str]:
    """Entries of LEMMA_M_STEPS recorded in the report under ``prefix``."""
    names = {check.name for check in report}
    return [step for step in LEMMA_M_STEPS if f"{prefix}{step}" in names]
