"""
Subspace lattices L(Q^n) under positive definite forms.
"""

from .space import (
    FormSpace,
    Subspace,
    intersect,
    join_all,
    meet_all,
    ortho_complement,
    span,
    subspace_sum,
)
from .operations import (
    check_polarity_sample,
    interval_ortho,
    is_perspective,
    modular_law_check,
)
from .sampling import random_atom, random_subspace, random_subspace_of
from .io import load_form, load_subspace, read_form, read_subspace, write_form, write_subspace

__all__ = [
    'FormSpace', 'Subspace', 'intersect', 'join_all', 'meet_all', 'ortho_complement',
    'span', 'subspace_sum', 'check_polarity_sample', 'interval_ortho', 'is_perspective',
    'modular_law_check', 'random_atom', 'random_subspace', 'random_subspace_of',
    'load_form', 'load_subspace', 'read_form', 'read_subspace', 'write_form',
    'write_subspace',
]
