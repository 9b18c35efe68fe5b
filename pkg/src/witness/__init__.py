"""
Witness constructions: the A_k / B_k recursion, the positive definite form
on Q^{3n}, replays of the frame generation arguments and the doubling
embedding.
"""

from .recursion import (
    WitnessConfig,
    ab_matrices,
    ab_step,
    b_certificate,
    certificate_holds,
    congruence_certificate,
    family_member,
    invertibility_family_check,
    positive_definite_report,
)
from .m2 import M2Instance, build_m2, m2_form
from .lemma_m import LEMMA_M_STEPS, StepTrace, covered_steps, replay_lemma_m, verify_lemma_m
from .m1 import MAX_M1_LEVEL, verify_m1_chain
from .doubling import check_doubling, doubled_space, doubling_embed

__all__ = [
    'WitnessConfig', 'ab_matrices', 'ab_step', 'b_certificate', 'certificate_holds',
    'congruence_certificate', 'family_member', 'invertibility_family_check',
    'positive_definite_report',
    'M2Instance', 'build_m2', 'm2_form',
    'LEMMA_M_STEPS', 'StepTrace', 'covered_steps', 'replay_lemma_m', 'verify_lemma_m',
    'MAX_M1_LEVEL', 'verify_m1_chain',
    'check_doubling', 'doubled_space', 'doubling_embed',
]
