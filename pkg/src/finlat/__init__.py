"""
Explicit finite (ortho)lattices.
"""

from .lattice import FiniteOrtholattice
from .constructors import (
    boolean,
    chain,
    generate_subalgebra,
    interval_subalgebra,
    mo,
    o6,
    product,
    product_all,
    subalgebra,
)
from .validate import is_modular, is_mol, is_orthomodular, validate
from .perspectivity import is_neutral_ideal, neutral_ideal, perspective_witness, perspectivity
from .congruence import (
    IrreducibilityResult,
    QuotientSet,
    check_toll_closure,
    congruence_from_quotient,
    congruence_from_quotients,
    congruence_lattice,
    congruence_relation,
    is_subdirectly_irreducible,
    quotient_lattice,
    tolerance_closure,
)
from .decompose import Decomposition, Factor, decompose_finite_mol, find_isomorphism, is_isomorphism
from .approximation import check_ideal_approximation
from .reconstruct import canonical_orthogonality, reconstruct_orthocomplement
from .io import load_lattice, read_lattice, save_lattice, write_lattice
from .corpus import build_lattice, random_product_specs, write_corpus

__all__ = [
    'FiniteOrtholattice', 'boolean', 'chain', 'generate_subalgebra', 'interval_subalgebra',
    'mo', 'o6', 'product', 'product_all', 'subalgebra', 'is_modular', 'is_mol',
    'is_orthomodular', 'validate', 'is_neutral_ideal', 'neutral_ideal', 'perspective_witness',
    'perspectivity', 'IrreducibilityResult', 'QuotientSet', 'check_toll_closure',
    'congruence_from_quotient', 'congruence_from_quotients', 'congruence_lattice',
    'congruence_relation', 'is_subdirectly_irreducible', 'quotient_lattice',
    'tolerance_closure', 'Decomposition', 'Factor', 'decompose_finite_mol',
    'find_isomorphism', 'is_isomorphism', 'check_ideal_approximation',
    'canonical_orthogonality', 'reconstruct_orthocomplement', 'load_lattice',
    'read_lattice', 'save_lattice', 'write_lattice', 'build_lattice',
    'random_product_specs', 'write_corpus',
]
