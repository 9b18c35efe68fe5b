"""
Ortholattice terms: parsing, evaluation in finite and subspace models,
identity checks and the translation of identities into orthoimplications.
"""

from .syntax import (
    ONE,
    ZERO,
    Const,
    Identity,
    Join,
    Meet,
    Ortho,
    OrthoImplication,
    Term,
    Var,
    join,
    meet,
    parse,
    parse_term,
    render,
    var,
)
from .operations import (
    fresh_names,
    malcev_term,
    nnf,
    replace_constants,
    substitute,
    variables,
    variables_of,
)
from .evaluate import (
    IdentityResult,
    as_function,
    evaluate,
    evaluate_grid,
    identity_holds,
    identity_report,
    sampled_identity_report,
)
from .orthoimplication import (
    MODES,
    back_substitute,
    below_on_models,
    orthoimplication_holds,
    to_orthoimplication,
)
from .models import resolve_model

__all__ = [
    'ONE', 'ZERO', 'Const', 'Identity', 'Join', 'Meet', 'Ortho', 'OrthoImplication', 'Term',
    'Var', 'join', 'meet', 'parse', 'parse_term', 'render', 'var',
    'fresh_names', 'malcev_term', 'nnf', 'replace_constants', 'substitute', 'variables',
    'variables_of',
    'IdentityResult', 'as_function', 'evaluate', 'evaluate_grid', 'identity_holds',
    'identity_report', 'sampled_identity_report',
    'MODES', 'back_substitute', 'below_on_models', 'orthoimplication_holds',
    'to_orthoimplication',
    'resolve_model',
]
