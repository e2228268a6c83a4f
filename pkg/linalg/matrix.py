from fractions import Fraction
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from .exceptions import ShapeError


Scalar = Union[int, Fraction]


def to_scalar(value: object) -> Scalar:
    """
    Normalize a rational value to the canonical scalar representation.

    Integral values are kept as ``int`` and everything else as a reduced
    ``Fraction``, so equal rationals always compare and hash equal.

    Args:
        value (object): An int, a Fraction or a rational literal string.

    Returns:
        Scalar: The normalized scalar.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rational scalars")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, str):
        return parse_scalar(value)
    raise TypeError(f"not a rational scalar: {value!r}")


def parse_scalar(text: str) -> Scalar:
    """
    Parse a rational literal of the form ``"p/q"`` or ``"n"``.

    Args:
        text (str): The literal.

    Returns:
        Scalar: The parsed value in lowest terms.

    Raises:
        ValueError: If the literal is malformed or has a zero denominator.
    """
    stripped = text.strip()
    try:
        if "/" in stripped:
            numerator, denominator = stripped.split("/")
            value = Fraction(int(numerator), int(denominator))
        else:
            value = Fraction(int(stripped))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"malformed rational literal {text!r}") from exc
    return to_scalar(value)


def format_scalar(value: Scalar) -> str:
    """Render a scalar as ``"p/q"``, or ``"n"`` when it is integral."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _norm(value: Scalar) -> Scalar:
    if value.__class__ is Fraction and value.denominator == 1:
        return value.numerator
    return value


class Matrix:
    """
    An immutable matrix over the rationals.

    Matrices with zero rows or zero columns are legal; they stand for maps
    to or from the zero space.

    Attributes:
        rows (int): Number of rows.
        cols (int): Number of columns.
    """

    __slots__ = ("rows", "cols", "_entries", "_hash")

    def __init__(self, rows: int, cols: int, entries: Optional[Iterable[Iterable]] = None):
        """
        Initialize a new matrix.

        Args:
            rows (int): Number of rows.
            cols (int): Number of columns.
            entries (Optional[Iterable[Iterable]]): Row-major entries. Defaults
                to the zero matrix.

        Raises:
            ShapeError: If the entries do not form a rows x cols grid.
        """
        if rows < 0 or cols < 0:
            raise ShapeError(f"negative matrix shape {rows}x{cols}")
        if entries is None:
            grid = tuple((0,) * cols for _ in range(rows))
        else:
            grid = tuple(tuple(to_scalar(v) for v in row) for row in entries)
            if len(grid) != rows or any(len(row) != cols for row in grid):
                raise ShapeError(f"entries do not form a {rows}x{cols} grid")
        self.rows = rows
        self.cols = cols
        self._entries = grid
        self._hash = None

    @classmethod
    def _wrap(cls, rows: int, cols: int, grid: Tuple[Tuple[Scalar, ...], ...]) -> "Matrix":
        matrix = cls.__new__(cls)
        matrix.rows = rows
        matrix.cols = cols
        matrix._entries = grid
        matrix._hash = None
        return matrix

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        """Return the rows x cols zero matrix."""
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        """Return the n x n identity matrix."""
        return cls._wrap(
            n, n, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
        )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: Optional[int] = None) -> "Matrix":
        """
        Build a matrix from a list of rows.

        Args:
            rows (Sequence[Sequence]): Row-major entries.
            cols (Optional[int]): Column count, required when there are no rows.

        Returns:
            Matrix: The matrix.
        """
        if cols is None:
            if not rows:
                raise ShapeError("column count is ambiguous for an empty row list")
            cols = len(rows[0])
        return cls(len(rows), cols, rows)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "Matrix":
        """Build a matrix whose columns are the given vectors."""
        if any(len(col) != rows for col in columns):
            raise ShapeError(f"columns must all have length {rows}")
        return cls(rows, len(columns), [[col[i] for col in columns] for i in range(rows)])

    @classmethod
    def block_diagonal(cls, *blocks: "Matrix") -> "Matrix":
        """Return the block diagonal matrix with the given diagonal blocks."""
        rows = sum(b.rows for b in blocks)
        cols = sum(b.cols for b in blocks)
        grid: List[List[Scalar]] = [[0] * cols for _ in range(rows)]
        r0 = c0 = 0
        for block in blocks:
            for i, row in enumerate(block._entries):
                grid[r0 + i][c0 : c0 + block.cols] = row
            r0 += block.rows
            c0 += block.cols
        return cls._wrap(rows, cols, tuple(tuple(row) for row in grid))

    @classmethod
    def block(cls, grid: Sequence[Sequence["Matrix"]]) -> "Matrix":
        """
        Assemble a matrix from a grid of blocks.

        Every block in a grid row must have the same row count and every block
        in a grid column the same column count.
        """
        row_blocks = [cls.hstack_all(list(blocks)) for blocks in grid]
        return cls.vstack_all(row_blocks)

    @classmethod
    def hstack_all(cls, blocks: Sequence["Matrix"]) -> "Matrix":
        if not blocks:
            raise ShapeError("cannot stack an empty block list")
        rows = blocks[0].rows
        if any(b.rows != rows for b in blocks):
            raise ShapeError("hstack needs equal row counts")
        grid = tuple(
            tuple(v for b in blocks for v in b._entries[i]) for i in range(rows)
        )
        return cls._wrap(rows, sum(b.cols for b in blocks), grid)

    @classmethod
    def vstack_all(cls, blocks: Sequence["Matrix"]) -> "Matrix":
        if not blocks:
            raise ShapeError("cannot stack an empty block list")
        cols = blocks[0].cols
        if any(b.cols != cols for b in blocks):
            raise ShapeError("vstack needs equal column counts")
        grid = tuple(row for b in blocks for row in b._entries)
        return cls._wrap(sum(b.rows for b in blocks), cols, grid)

    def hstack(self, *others: "Matrix") -> "Matrix":
        return Matrix.hstack_all([self, *others])

    def vstack(self, *others: "Matrix") -> "Matrix":
        return Matrix.vstack_all([self, *others])

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    @property
    def entries(self) -> Tuple[Tuple[Scalar, ...], ...]:
        return self._entries

    def entry(self, i: int, j: int) -> Scalar:
        return self._entries[i][j]

    def row(self, i: int) -> Tuple[Scalar, ...]:
        return self._entries[i]

    def column(self, j: int) -> Tuple[Scalar, ...]:
        return tuple(row[j] for row in self._entries)

    def columns(self) -> List[Tuple[Scalar, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def nonzero_entries(self) -> Iterator[Tuple[int, int, Scalar]]:
        """Yield ``(i, j, value)`` for every nonzero entry in row-major order."""
        for i, row in enumerate(self._entries):
            for j, value in enumerate(row):
                if value:
                    yield i, j, value

    def is_zero(self) -> bool:
        return not any(any(row) for row in self._entries)

    def submatrix(self, row_indices: Sequence[int], col_indices: Sequence[int]) -> "Matrix":
        grid = tuple(
            tuple(self._entries[i][j] for j in col_indices) for i in row_indices
        )
        return Matrix._wrap(len(row_indices), len(col_indices), grid)

    def row_range(self, start: int, stop: int) -> "Matrix":
        return Matrix._wrap(stop - start, self.cols, self._entries[start:stop])

    def col_range(self, start: int, stop: int) -> "Matrix":
        grid = tuple(row[start:stop] for row in self._entries)
        return Matrix._wrap(self.rows, stop - start, grid)

    def with_entry(self, i: int, j: int, value: object) -> "Matrix":
        """Return a copy with one entry replaced."""
        grid = [list(row) for row in self._entries]
        grid[i][j] = to_scalar(value)
        return Matrix._wrap(self.rows, self.cols, tuple(tuple(row) for row in grid))

    def transpose(self) -> "Matrix":
        grid = tuple(
            tuple(self._entries[i][j] for i in range(self.rows)) for j in range(self.cols)
        )
        return Matrix._wrap(self.cols, self.rows, grid)

    def scale(self, factor: object) -> "Matrix":
        c = to_scalar(factor)
        grid = tuple(tuple(_norm(c * v) for v in row) for row in self._entries)
        return Matrix._wrap(self.rows, self.cols, grid)

    def __add__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.shape != other.shape:
            raise ShapeError(f"cannot add {self.shape} and {other.shape}")
        grid = tuple(
            tuple(_norm(a + b) for a, b in zip(r1, r2))
            for r1, r2 in zip(self._entries, other._entries)
        )
        return Matrix._wrap(self.rows, self.cols, grid)

    def __neg__(self) -> "Matrix":
        grid = tuple(tuple(-v for v in row) for row in self._entries)
        return Matrix._wrap(self.rows, self.cols, grid)

    def __sub__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        return self + (-other)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        width = other.cols
        right = other._entries
        out = []
        for row in self._entries:
            acc: List[Scalar] = [0] * width
            for k, a in enumerate(row):
                if a:
                    for j, b in enumerate(right[k]):
                        if b:
                            acc[j] += a * b
            out.append(tuple(_norm(v) for v in acc))
        return Matrix._wrap(self.rows, width, tuple(out))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return False
        return self.shape == other.shape and self._entries == other._entries

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self._entries))
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join(
            "[" + ", ".join(format_scalar(v) for v in row) + "]" for row in self._entries
        )
        return f"Matrix({self.rows}x{self.cols}, [{body}])"

    def to_strings(self) -> List[List[str]]:
        """Return the entries as rational literal strings, row-major."""
        return [[format_scalar(v) for v in row] for row in self._entries]

    @classmethod
    def from_strings(cls, rows: int, cols: int, data: Sequence[Sequence[str]]) -> "Matrix":
        """
        Parse a row-major array of rational literals, checking its shape.

        Raises:
            ShapeError: If the array does not have the declared shape.
        """
        if len(data) != rows or any(len(row) != cols for row in data):
            raise ShapeError(f"expected a {rows}x{cols} array")
        return cls(rows, cols, [[parse_scalar(str(v)) for v in row] for row in data])
