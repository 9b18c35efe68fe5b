"""
Argument helpers shared by the command modules.
"""

import logging
from pathlib import Path
from typing import List, Optional, Sequence

from src.core.exceptions import ParseError
from src.exactla import RationalMatrix, load_matrix, parse_rational
from src.finlat import FiniteOrtholattice, build_lattice, load_lattice
from src.subspaces import FormSpace, load_form

logger = logging.getLogger(__name__)


def lattice_arg(value: str) -> FiniteOrtholattice:
    """A lattice file, or a corpus spec such as ``mo:3``."""
    if Path(value).is_file():
        return load_lattice(value)
    return build_lattice(value)


def form_arg(value: Optional[str], dimension: Optional[int] = None) -> Optional[FormSpace]:
    """
    A Gram matrix file, or ``diag:1,2,3``; the identity form of the given
    dimension when omitted.
    """
    if value is None:
        return FormSpace.identity(dimension) if dimension else None
    if value.startswith("diag:"):
        return FormSpace.diagonal([parse_rational(v) for v in value[5:].split(",")])
    return load_form(value)


def rational_list(values: Sequence[str], size: int = 1) -> List[RationalMatrix]:
    """Operands written as matrix files, or as rationals read as scalar size x size blocks."""
    out = []
    for value in values:
        if Path(value).is_file():
            out.append(load_matrix(value))
        else:
            out.append(RationalMatrix.scalar(parse_rational(value), size))
    return out


def quotient_arg(value: str) -> List[str]:
    """``a/b`` as the pair of element names (a, b)."""
    upper, sep, lower = value.partition("/")
    if not sep or not upper or not lower:
        raise ParseError(f"expected a quotient 'a/b', got {value!r}")
    return [upper, lower]


def names_arg(value: Optional[str]) -> Optional[List[str]]:
    """Comma separated element names."""
    if value is None:
        return None
    return [name for name in value.split(",") if name]
