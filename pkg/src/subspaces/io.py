"""
Subspace and form text formats.

A subspace file is a line ``ambient n`` followed by the matrix format of a
spanning set; a form file is the matrix format of the Gram matrix.
"""

from pathlib import Path
from typing import Optional, Union

from src.core.exceptions import ParseError
from src.exactla.io import content_lines, parse_matrix_lines, read_matrix, write_matrix
from src.subspaces.space import FormSpace, Subspace, span


def read_form(text: str) -> FormSpace:
    return FormSpace(read_matrix(text))


def write_form(space: FormSpace) -> str:
    return write_matrix(space.gram)


def read_subspace(text: str, space: Optional[FormSpace] = None) -> Subspace:
    """
    Parse a subspace.

    Args:
        text: File content
        space: Ambient form space; the identity form of the declared
            dimension when omitted

    Returns:
        The canonical subspace spanned by the listed rows
    """
    lines = list(content_lines(text))
    if not lines:
        raise ParseError("empty subspace file")
    number, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] != 'ambient' or not parts[1].isdigit():
        raise ParseError(f"expected 'ambient n', got {header!r}", number)
    n = int(parts[1])
    if space is None:
        space = FormSpace.identity(n)
    elif space.dimension != n:
        raise ParseError(f"subspace declared in Q^{n}, form has dimension {space.dimension}",
                         number)
    matrix, used = parse_matrix_lines(lines[1:])
    if used + 1 != len(lines):
        raise ParseError("trailing content after subspace basis", lines[used + 1][0])
    if matrix.cols != n and matrix.rows:
        raise ParseError(f"basis rows have {matrix.cols} entries, expected {n}", number)
    return span(space, list(matrix))


def write_subspace(u: Subspace) -> str:
    return f"ambient {u.ambient.dimension}\n" + write_matrix(u.basis)


def load_subspace(path: Union[str, Path], space: Optional[FormSpace] = None) -> Subspace:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e}")
    return read_subspace(text, space)


def load_form(path: Union[str, Path]) -> FormSpace:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e}")
    return read_form(text)
