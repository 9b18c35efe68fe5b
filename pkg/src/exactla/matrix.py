"""
Dense matrices over the rationals.

``RationalMatrix`` is immutable: every arithmetic operation returns a new
matrix. Entries are kept as tuples of ``Fraction`` rows.
"""

from fractions import Fraction
from typing import Any, Dict, Iterable, Iterator, List, Sequence, Tuple

from src.core.exceptions import DimensionMismatchError
from src.exactla.rational import RationalLike, format_rational, to_rational

Row = Tuple[Fraction, ...]


class RationalMatrix:
    """
    Immutable dense matrix of exact rationals.

    Attributes:
        rows: Number of rows
        cols: Number of columns
    """

    __slots__ = ('rows', 'cols', '_data', '_hash')

    def __init__(self, rows: int, cols: int, entries: Iterable[RationalLike]):
        """
        Initialize from a row-major entry list.

        Args:
            rows: Row count
            cols: Column count
            entries: ``rows * cols`` rationals in row-major order
        """
        values = [to_rational(e) for e in entries]
        if rows < 0 or cols < 0 or len(values) != rows * cols:
            raise DimensionMismatchError(
                f"{len(values)} entries do not fill a {rows}x{cols} matrix")
        self.rows = rows
        self.cols = cols
        self._data: Tuple[Row, ...] = tuple(
            tuple(values[i * cols:(i + 1) * cols]) for i in range(rows))
        self._hash = None

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[RationalLike]],
                  cols: int = None) -> 'RationalMatrix':
        """Build from a list of rows; ``cols`` is needed only when there are no rows."""
        if not rows:
            return cls(0, cols or 0, [])
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionMismatchError("ragged rows")
        if cols is not None and cols != width:
            raise DimensionMismatchError(f"rows have {width} columns, expected {cols}")
        return cls(len(rows), width, [e for r in rows for e in r])

    @classmethod
    def identity(cls, n: int) -> 'RationalMatrix':
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> 'RationalMatrix':
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def diag(cls, values: Sequence[RationalLike]) -> 'RationalMatrix':
        n = len(values)
        return cls(n, n, [values[i] if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def scalar(cls, value: RationalLike, n: int) -> 'RationalMatrix':
        return cls.diag([value] * n)

    # Access

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        return self._data[i][j]

    def row(self, i: int) -> Row:
        return self._data[i]

    def col(self, j: int) -> Row:
        return tuple(r[j] for r in self._data)

    def __iter__(self) -> Iterator[Row]:
        return iter(self._data)

    @property
    def entries(self) -> List[Fraction]:
        """Row-major entry list."""
        return [e for r in self._data for e in r]

    def to_rows(self) -> List[List[Fraction]]:
        """Mutable copy of the rows."""
        return [list(r) for r in self._data]

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        return self.is_square and all(
            self._data[i][j] == self._data[j][i]
            for i in range(self.rows) for j in range(i + 1, self.cols))

    def is_zero(self) -> bool:
        return all(e == 0 for r in self._data for e in r)

    def submatrix(self, r0: int, r1: int, c0: int, c1: int) -> 'RationalMatrix':
        """Rows r0..r1-1 and columns c0..c1-1."""
        return RationalMatrix.from_rows([r[c0:c1] for r in self._data[r0:r1]], cols=c1 - c0)

    def block(self, i: int, j: int, size: int) -> 'RationalMatrix':
        """Block (i, j) of a matrix cut into ``size`` x ``size`` blocks, 0-based."""
        return self.submatrix(i * size, (i + 1) * size, j * size, (j + 1) * size)

    # Arithmetic

    def transpose(self) -> 'RationalMatrix':
        return RationalMatrix.from_rows(
            [self.col(j) for j in range(self.cols)], cols=self.rows)

    @property
    def T(self) -> 'RationalMatrix':
        return self.transpose()

    def _check_same_shape(self, other: 'RationalMatrix') -> None:
        if self.shape != other.shape:
            raise DimensionMismatchError(f"shapes {self.shape} and {other.shape} differ")

    def __add__(self, other: 'RationalMatrix') -> 'RationalMatrix':
        self._check_same_shape(other)
        return RationalMatrix(self.rows, self.cols,
                              [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: 'RationalMatrix') -> 'RationalMatrix':
        self._check_same_shape(other)
        return RationalMatrix(self.rows, self.cols,
                              [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self) -> 'RationalMatrix':
        return RationalMatrix(self.rows, self.cols, [-a for a in self.entries])

    def scale(self, factor: RationalLike) -> 'RationalMatrix':
        factor = to_rational(factor)
        return RationalMatrix(self.rows, self.cols, [factor * a for a in self.entries])

    def __mul__(self, factor: RationalLike) -> 'RationalMatrix':
        if isinstance(factor, RationalMatrix):
            return self @ factor
        return self.scale(factor)

    __rmul__ = __mul__

    def __matmul__(self, other: 'RationalMatrix') -> 'RationalMatrix':
        if self.cols != other.rows:
            raise DimensionMismatchError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        columns = [other.col(j) for j in range(other.cols)]
        return RationalMatrix(self.rows, other.cols, [
            sum((a * b for a, b in zip(r, c)), Fraction(0))
            for r in self._data for c in columns])

    def hstack(self, other: 'RationalMatrix') -> 'RationalMatrix':
        if self.rows != other.rows:
            raise DimensionMismatchError("hstack needs equal row counts")
        return RationalMatrix.from_rows(
            [a + b for a, b in zip(self._data, other._data)], cols=self.cols + other.cols)

    def vstack(self, other: 'RationalMatrix') -> 'RationalMatrix':
        if self.cols != other.cols:
            raise DimensionMismatchError("vstack needs equal column counts")
        return RationalMatrix.from_rows(list(self._data) + list(other._data), cols=self.cols)

    # Comparison

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self._data))
        return self._hash

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary representation with exact entries."""
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[format_rational(e) for e in r] for r in self._data],
        }

    def __repr__(self) -> str:
        body = "; ".join(" ".join(format_rational(e) for e in r) for r in self._data)
        return f"RationalMatrix({self.rows}x{self.cols}: [{body}])"


def block_diagonal(blocks: Sequence[RationalMatrix]) -> RationalMatrix:
    """Place square or rectangular blocks along the diagonal."""
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    out = [[Fraction(0)] * cols for _ in range(rows)]
    r0 = c0 = 0
    for b in blocks:
        for i, row in enumerate(b):
            out[r0 + i][c0:c0 + b.cols] = row
        r0 += b.rows
        c0 += b.cols
    return RationalMatrix.from_rows(out, cols=cols)


def from_blocks(grid: Sequence[Sequence[RationalMatrix]]) -> RationalMatrix:
    """Assemble a matrix from a rectangular grid of blocks."""
    result = None
    for block_row in grid:
        line = block_row[0]
        for b in block_row[1:]:
            line = line.hstack(b)
        result = line if result is None else result.vstack(line)
    if result is None:
        return RationalMatrix.zeros(0, 0)
    return result
