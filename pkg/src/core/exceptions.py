"""
Custom exceptions for molkit.
"""

from typing import Any, Optional, Sequence


class MolkitError(Exception):
    """Base class for all molkit exceptions."""
    pass


class ConfigurationError(MolkitError):
    """Raised when there's a configuration issue."""
    pass


class ParseError(MolkitError):
    """Raised when a text file or argument cannot be parsed."""

    def __init__(self, message: str, line: Optional[int] = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class UnknownSpecError(MolkitError):
    """Raised when a corpus specification names nothing we can build."""
    pass


class NotBelowError(MolkitError):
    """Raised when an operation needs x <= u and it does not hold."""
    pass


class NotComparableError(MolkitError):
    """Raised when a quotient a/b is requested for a not >= b."""
    pass


# Exact linear algebra

class LinearAlgebraError(MolkitError):
    """Raised for exact linear algebra failures."""
    pass


class SingularMatrixError(LinearAlgebraError):
    """Raised when an inverse is requested for a singular matrix."""
    pass


class DimensionMismatchError(LinearAlgebraError):
    """Raised when operand shapes are incompatible."""
    pass


class NotSymmetricError(LinearAlgebraError):
    """Raised when a symmetric matrix is required."""
    pass


# Subspaces

class SubspaceError(MolkitError):
    """Raised for subspace lattice failures."""
    pass


class AmbientMismatchError(SubspaceError):
    """Raised when subspaces live in different form spaces."""
    pass


class NotAnAtomError(SubspaceError):
    """Raised when a one-dimensional subspace is required."""
    pass


class FormError(SubspaceError):
    """Raised when a Gram matrix is degenerate or not positive definite."""
    pass


# Finite lattices

class LatticeError(MolkitError):
    """Raised for finite lattice failures."""
    pass


class NotALatticeError(LatticeError):
    """Raised when an order table lacks joins, meets or bounds."""
    pass


class NotModularError(LatticeError):
    """Raised when an operation needs a modular lattice."""
    pass


class NotMOLError(LatticeError):
    """Raised when an operation needs a modular ortholattice."""
    pass


class NotNeutralIdealError(LatticeError):
    """Raised when an element set is not a neutral ideal."""
    pass


class NoComplementFoundError(LatticeError):
    """Raised when no orthocomplement satisfies the reconstruction conditions."""

    def __init__(self, element: str):
        super().__init__(f"no orthocomplement found for {element}")
        self.element = element


class DecompositionFailure(LatticeError):
    """Raised when a finite MOL does not split into Boolean and MO_n factors."""
    pass


class NotSubalgebraError(LatticeError):
    """Raised when an element set is not closed under +, * and '."""
    pass


# Geometry

class GeometryError(MolkitError):
    """Raised for point geometry failures."""
    pass


class TriangleAxiomError(GeometryError):
    """Raised when collinearity violates the triangle axiom."""
    pass


class OrthogonalityAxiomError(GeometryError):
    """Raised when a point orthogonality is not symmetric or not closed on lines."""
    pass


class CapExceededError(GeometryError):
    """Raised when a closure hits its iteration cap."""

    def __init__(self, message: str, partial: Any = None):
        super().__init__(message)
        self.partial = partial


class NotPolarityError(GeometryError):
    """Raised when a point orthogonality is not an anisotropic polarity."""
    pass


class RepresentationFailure(GeometryError):
    """Raised when a geometric representation cannot be verified."""

    def __init__(self, message: str, triple: Optional[Sequence[Any]] = None):
        super().__init__(message)
        self.triple = tuple(triple) if triple is not None else None


# Frames

class FrameError(MolkitError):
    """Raised for frame and coordinate ring failures."""
    pass


class FrameAxiomViolation(FrameError):
    """Raised when a candidate frame violates one of its identities."""

    def __init__(self, identity: str, indices: Sequence[int]):
        super().__init__(f"frame identity {identity} fails at indices {tuple(indices)}")
        self.identity = identity
        self.indices = tuple(indices)


class IndexMismatchError(FrameError):
    """Raised when ring elements sit in incompatible coordinate domains."""
    pass


class BadIndexPatternError(FrameError):
    """Raised when a transfer target shares no admissible index with the source."""
    pass


class NotInCoordinateDomainError(FrameError):
    """Raised when a subspace is not in the coordinate domain R_ij."""
    pass


class SingularAlphaError(FrameError):
    """Raised when a form block of the matrix involution is singular."""
    pass


# Witness constructions

class WitnessError(MolkitError):
    """Raised for witness construction failures."""
    pass


class NonPositiveSeedError(WitnessError):
    """Raised when the recursion seeds are not positive."""
    pass


class IdentityMismatchError(WitnessError):
    """Raised when both sides of a displayed identity differ."""

    def __init__(self, message: str, lhs: Any = None, rhs: Any = None):
        super().__init__(message)
        self.lhs = lhs
        self.rhs = rhs


# Terms

class TermError(MolkitError):
    """Raised for term language failures."""
    pass


class TermSyntaxError(TermError):
    """Raised when a term cannot be parsed."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnboundVariableError(TermError):
    """Raised when an assignment misses a variable of the term."""
    pass
