"""
Matrix text format.

First line ``rows cols``, then ``rows`` lines of ``cols`` whitespace-separated
rationals written ``p/q`` or ``p``. Blank lines and ``#`` comments are ignored.
"""

from pathlib import Path
from typing import Iterator, List, Tuple, Union

from src.core.exceptions import ParseError
from src.exactla.matrix import RationalMatrix
from src.exactla.rational import format_rational, parse_rational


def content_lines(text: str) -> Iterator[Tuple[int, str]]:
    """Yield (line number, stripped line) for non-blank, non-comment lines."""
    for number, line in enumerate(text.splitlines(), 1):
        stripped = line.split('#', 1)[0].strip()
        if stripped:
            yield number, stripped


def parse_matrix_lines(lines: List[Tuple[int, str]]) -> Tuple[RationalMatrix, int]:
    """
    Parse a matrix from pre-split content lines.

    Args:
        lines: Content lines as produced by ``content_lines``

    Returns:
        The matrix and the number of lines consumed
    """
    if not lines:
        raise ParseError("missing matrix header")
    number, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise ParseError(f"matrix header must be 'rows cols', got {header!r}", number)
    rows, cols = int(parts[0]), int(parts[1])
    if len(lines) < rows + 1:
        raise ParseError(f"expected {rows} matrix rows", number)
    values = []
    for number, line in lines[1:rows + 1]:
        fields = line.split()
        if len(fields) != cols:
            raise ParseError(f"expected {cols} entries, got {len(fields)}", number)
        try:
            values.extend(parse_rational(f) for f in fields)
        except ParseError as e:
            raise ParseError(str(e), number)
    return RationalMatrix(rows, cols, values), rows + 1


def read_matrix(text: str) -> RationalMatrix:
    """Parse the matrix text format."""
    lines = list(content_lines(text))
    matrix, used = parse_matrix_lines(lines)
    if used != len(lines):
        raise ParseError("trailing content after matrix", lines[used][0])
    return matrix


def write_matrix(m: RationalMatrix) -> str:
    """Render the matrix text format."""
    out = [f"{m.rows} {m.cols}"]
    out.extend(" ".join(format_rational(e) for e in row) for row in m)
    return "\n".join(out) + "\n"


def load_matrix(path: Union[str, Path]) -> RationalMatrix:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e}")
    return read_matrix(text)


def save_matrix(path: Union[str, Path], m: RationalMatrix) -> None:
    Path(path).write_text(write_matrix(m))
