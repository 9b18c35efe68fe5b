"""
molkit - exact computation in modular ortholattices.

This package provides exact rational linear algebra, subspace lattices under
positive definite forms, finite ortholattice analysis, projective geometries
with orthogonality, von Neumann frames with their coordinate rings, and
machine checks of the explicit frame-generation constructions.
"""

__version__ = '0.3.0'
__author__ = 'molkit developers'
