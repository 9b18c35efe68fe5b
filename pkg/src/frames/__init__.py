"""
Frames in subspace lattices and their coordinate rings.
"""

from .frame import Frame, canonical_frame, check_frame, coordinate_frame, subframe
from .ring import (
    RingElem,
    coordinate,
    embed_ring,
    in_domain,
    ring_add,
    ring_inverse,
    ring_mul,
    ring_neg,
    ring_sub,
    transfer,
    transport,
    unit,
    zero,
)
from .polynomials import form_blocks, l_term, star_polynomial, t_polynomial
from .involution import corner_involution, matrix_involution, star_regularity_check
from .idempotents import (
    column_space,
    hermitian_projection,
    idempotent_join,
    idempotent_meet,
    is_hermitian_idempotent,
)
from .oracle import ARITY, RING_OPS, apply_ring_op, oracle_sweep

__all__ = [
    'Frame', 'canonical_frame', 'check_frame', 'coordinate_frame', 'subframe',
    'RingElem', 'coordinate', 'embed_ring', 'in_domain', 'ring_add', 'ring_inverse',
    'ring_mul', 'ring_neg', 'ring_sub', 'transfer', 'transport', 'unit', 'zero',
    'form_blocks', 'l_term', 'star_polynomial', 't_polynomial',
    'corner_involution', 'matrix_involution', 'star_regularity_check',
    'column_space', 'hermitian_projection', 'idempotent_join', 'idempotent_meet',
    'is_hermitian_idempotent',
    'ARITY', 'RING_OPS', 'apply_ring_op', 'oracle_sweep',
]
