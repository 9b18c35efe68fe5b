"""
Replay of the inductive generation chain for L(R(k+1)^3).

Level j works in a 3-frame with blocks of size 2^{j-1} and generators
(A_j)_12, (B_j)_13. For j >= 2 the 6-frame replay with a = A_{j-1},
b = B_{j-1} yields E6; its first three elements form a 3-frame phiE over
R(j-1) with generators

    phi a_12 = (E6_1 + E6_2)(diag(a, 0)_12 + E6_4)
    phi b_13 = (E6_1 + E6_3)(diag(b, 0)_13 + E6_4)

The chain recurses into phiE and lifts every element c reached there to
diag(c, 0)_12 = (phi c_12 + E6_4)(E_1 + E_2). Level 1 samples Q from the
unit by ring operations. Generation of the whole lattice is not decided;
the trace lists the elements actually reached.
"""

import logging
from fractions import Fraction
from typing import List, Tuple

from src.core.constants import DEFAULT_CHAIN_CAP
from src.core.exceptions import WitnessError
from src.core.report import Report
from src.exactla import RationalMatrix
from src.exactla.rational import format_rational
from src.frames import (
    Frame,
    RingElem,
    canonical_frame,
    embed_ring,
    ring_add,
    ring_inverse,
    ring_neg,
    subframe,
    transport,
    unit,
)
from src.witness.lemma_m import StepTrace, corner, lower_unit, replay_lemma_m, upper_unit
from src.witness.recursion import Seed, WitnessConfig, ab_matrices

logger = logging.getLogger(__name__)

MAX_M1_LEVEL = 3

Sample = Tuple[str, RationalMatrix, RingElem]


def _base_samples(frame: Frame, trace: StepTrace) -> List[Sample]:
    """1, 2, 1/2, -1 and 3 in R_12 of a frame over Q, reached from the unit."""
    one = unit(frame, 1, 2)
    two = ring_add(one, one)
    half = ring_inverse(two)
    minus = ring_neg(one)
    three = ring_add(two, one)
    reached = [("1", Fraction(1), one), ("2", Fraction(2), two), ("1/2", Fraction(1, 2), half),
               ("-1", Fraction(-1), minus), ("3", Fraction(3), three)]
    samples = []
    for label, value, elem in reached:
        expected = embed_ring(value, frame, 1, 2)
        if elem is None:
            trace.record(f"sample {label}", False, f"{label} is not reached",
                         {"expected": expected.carrier.to_dict()})
            continue
        trace.check(f"sample {label}", elem, expected, f"{label} from the unit by ring operations")
        samples.append((label, RationalMatrix.scalar(value, 1), elem))
    return samples


def _generate(frame: Frame, a_elem: RingElem, b_elem: RingElem, level: int,
              seeds: Tuple[Fraction, Fraction], trace: StepTrace) -> List[Sample]:
    outer = trace.prefix
    trace.prefix = f"level-{level}/"
    try:
        if level == 1:
            trace.check("generator-a", a_elem, embed_ring(seeds[0], frame, 1, 2), "(A_1)_12")
            trace.check("generator-b", b_elem, embed_ring(seeds[1], frame, 1, 3), "(B_1)_13")
            return _base_samples(frame, trace)

        a, b = ab_matrices(level - 1, *seeds)
        found = replay_lemma_m(frame, a_elem, b_elem, a, b, trace)
        if found is None:
            return []
        frame6 = found["frame6"]
        e6 = {i: frame6.a(i) for i in frame6.indices}
        phi = subframe(frame6, [1, 2, 3])

        phi_a = RingElem(phi, 1, 2, (e6[1] + e6[2]) & (found["a-block"].carrier + e6[4]),
                         check=False)
        trace.check("phi-a", phi_a, embed_ring(a, phi, 1, 2),
                    "phi a_12 = (E6_1 + E6_2)(diag(a, 0)_12 + E6_4)")
        b_13 = transport(found["b-block"], (1, 3))
        phi_b = RingElem(phi, 1, 3, (e6[1] + e6[3]) & (b_13.carrier + e6[4]), check=False)
        trace.check("phi-b", phi_b, embed_ring(b, phi, 1, 3),
                    "phi b_13 = (E6_1 + E6_3)(diag(b, 0)_13 + E6_4)")

        inner = _generate(phi, phi_a, phi_b, level - 1, seeds, trace)

        reached: List[Sample] = []
        plane = frame.join(1, 2)
        for label, c, elem in inner:
            lifted = RingElem(frame, 1, 2, (elem.carrier + e6[4]) & plane, check=False)
            name = f"diag({label}, 0)"
            if trace.check(f"lift {name}", lifted, embed_ring(corner(c), frame, 1, 2),
                           f"{name}_12 = (phi {label}_12 + E6_4)(E_1 + E_2)"):
                reached.append((name, corner(c), lifted))
        m = a.rows
        upper = found["upper-unit"]
        reached.append(("[[0, 1], [0, 0]]", upper_unit(m), upper))
        reached.append(("[[0, 0], [1, 0]]", lower_unit(m), found["lower-unit"]))
        if len(reached) > 2:
            label, c, elem = reached[0]
            composite = ring_add(elem, upper)
            target = c + upper_unit(m)
            if trace.check("composite", composite, embed_ring(target, frame, 1, 2),
                           f"{label} + [[0, 1], [0, 0]]"):
                reached.append((f"{label} + [[0, 1], [0, 0]]", target, composite))
        return reached
    finally:
        trace.prefix = outer


def verify_m1_chain(k: int, cap: int = DEFAULT_CHAIN_CAP, a: Seed = 1, b: Seed = 1) -> Report:
    """
    Replay the generation chain of L(R(k+1)^3) from its canonical 3-frame,
    (A_{k+1})_12 and (B_{k+1})_13.

    Args:
        k: Inductive level, 1 <= k <= 3; the ambient is Q^{3 * 2^k}
        cap: Maximum number of recorded steps
        a, b: Positive seeds

    Returns:
        Report with one check per step (named by level), the trace in
        ``data['trace']`` and the reached elements in ``data['reached']``

    Raises:
        CapExceededError: With the partial report, when the cap is hit
        WitnessError: If k is out of range
    """
    if not 1 <= k <= MAX_M1_LEVEL:
        raise WitnessError(f"the chain replay runs for 1 <= k <= {MAX_M1_LEVEL}, got {k}")
    config = WitnessConfig(k + 1, a, b)
    big_a, big_b = ab_matrices(k + 1, config.a, config.b)
    n = config.size
    frame = canonical_frame(3, n)
    report = Report(f"witness m1 k={k}")
    trace = StepTrace(report, cap)
    reached = _generate(frame, embed_ring(big_a, frame, 1, 2), embed_ring(big_b, frame, 1, 3),
                        k + 1, (config.a, config.b), trace)
    report.data["trace"] = trace.trace
    report.data["steps"] = trace.count
    report.data["reached"] = {label: c for label, c, _ in reached}
    report.data["seeds"] = [format_rational(config.a), format_rational(config.b)]
    logger.info(f"generation chain for k={k} in Q^{3 * n}: {trace.count} steps, "
                f"{len(reached)} top-level elements reached")
    return report.finish()
