"""
Point geometries, polarities and geometric representations of finite MOLs.
"""

from .geometry import (
    PointGeometry,
    PointSet,
    closed_subspaces,
    components,
    components_orthogonal,
    geometry_span,
    points_of,
    subgeometry_closure,
    subspace_lattice,
    subspace_name,
)
from .polarity import (
    atom_perp_matrix,
    check_polarity,
    check_polarity_closure,
    closed_elements,
    element_perp,
    hat_conditions,
    is_polarity,
)
from .representation import (
    RepresentationMap,
    canonical_representation,
    check_atom_collinearity,
    check_embedding,
    check_induced_orthogonality,
    check_neutral_filter_bounds,
    collinear_triple,
    induced_point_orthogonality,
    neutral_filter,
    quotient_representation,
)
from .io import load_geometry, read_geometry, save_geometry, write_geometry

__all__ = [
    'PointGeometry', 'PointSet', 'closed_subspaces', 'components',
    'components_orthogonal', 'geometry_span', 'points_of', 'subgeometry_closure',
    'subspace_lattice', 'subspace_name',
    'atom_perp_matrix', 'check_polarity', 'check_polarity_closure', 'closed_elements',
    'element_perp', 'hat_conditions', 'is_polarity',
    'RepresentationMap', 'canonical_representation', 'check_atom_collinearity',
    'check_embedding', 'check_induced_orthogonality', 'check_neutral_filter_bounds',
    'collinear_triple', 'induced_point_orthogonality', 'neutral_filter',
    'quotient_representation',
    'load_geometry', 'read_geometry', 'save_geometry', 'write_geometry',
]
