"""
Exact rational linear algebra for hyperlap
Dense Fraction matrices with row reduction, rank, kernels and span membership
"""

import logging
from fractions import Fraction
from numbers import Rational
from typing import Iterable, List, Sequence, Tuple, Union

import numpy as np

from utils.errors import ConsistencyError

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction]


def to_fraction(value) -> Fraction:
    """Exact conversion; floats are taken at their exact binary value"""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, np.integer):
        return Fraction(int(value))
    if isinstance(value, (float, np.floating)):
        return Fraction(float(value))
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"Cannot convert {value!r} to an exact rational")


class RationalMatrix:
    """Immutable dense row-major matrix of Fractions.

    Zero-sized shapes (for example 6x0) are legal values.
    """

    __slots__ = ("_rows", "_cols", "_data")

    def __init__(self, rows: int, cols: int, data: Iterable[Iterable] = None):
        if rows < 0 or cols < 0:
            raise ValueError(f"Negative matrix shape ({rows}, {cols})")
        self._rows = rows
        self._cols = cols
        if data is None:
            self._data = tuple(tuple(Fraction(0) for _ in range(cols)) for _ in range(rows))
            return
        built = tuple(tuple(to_fraction(x) for x in row) for row in data)
        if len(built) != rows or any(len(row) != cols for row in built):
            raise ValueError(f"Entries do not match shape ({rows}, {cols})")
        self._data = built

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int = None) -> "RationalMatrix":
        rows = list(rows)
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(len(rows), cols, rows)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "RationalMatrix":
        columns = list(columns)
        data = [[columns[j][i] for j in range(len(columns))] for i in range(rows)]
        return cls(rows, len(columns), data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls(n, n, ([1 if i == j else 0 for j in range(n)] for i in range(n)))

    @property
    def rows(self) -> int:
        return self._rows

    @property
    def cols(self) -> int:
        return self._cols

    @property
    def shape(self) -> Tuple[int, int]:
        return (self._rows, self._cols)

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        return self._data[i][j]

    def row(self, i: int) -> Tuple[Fraction, ...]:
        return self._data[i]

    def column(self, j: int) -> Tuple[Fraction, ...]:
        return tuple(row[j] for row in self._data)

    def columns(self) -> List[Tuple[Fraction, ...]]:
        return [self.column(j) for j in range(self._cols)]

    def to_lists(self) -> List[List[Fraction]]:
        return [list(row) for row in self._data]

    def to_numpy(self) -> np.ndarray:
        if self._rows == 0 or self._cols == 0:
            return np.zeros((self._rows, self._cols))
        return np.array([[float(x) for x in row] for row in self._data], dtype=float)

    def transpose(self) -> "RationalMatrix":
        if self._rows == 0:
            return RationalMatrix(self._cols, 0, ([] for _ in range(self._cols)))
        return RationalMatrix(self._cols, self._rows, zip(*self._data))

    @property
    def T(self) -> "RationalMatrix":
        return self.transpose()

    def select_rows(self, indices: Sequence[int]) -> "RationalMatrix":
        return RationalMatrix(len(indices), self._cols, (self._data[i] for i in indices))

    def select_columns(self, indices: Sequence[int]) -> "RationalMatrix":
        return RationalMatrix(
            self._rows, len(indices), ([row[j] for j in indices] for row in self._data)
        )

    def hstack(self, other: "RationalMatrix") -> "RationalMatrix":
        if other._rows != self._rows:
            raise ConsistencyError(
                f"Cannot stack {self.shape} beside {other.shape}", code="dimension_mismatch"
            )
        return RationalMatrix(
            self._rows,
            self._cols + other._cols,
            (a + b for a, b in zip(self._data, other._data)),
        )

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self._cols != other._rows:
            raise ConsistencyError(
                f"Cannot multiply {self.shape} by {other.shape}", code="dimension_mismatch"
            )
        other_cols = other.columns()
        out = []
        for row in self._data:
            nonzero = [(k, x) for k, x in enumerate(row) if x]
            out.append([sum((x * col[k] for k, x in nonzero), Fraction(0)) for col in other_cols])
        return RationalMatrix(self._rows, other._cols, out)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self._data for x in row)

    @property
    def rank(self) -> int:
        return rank(self)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        return hash((self.shape, self._data))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self._data)
        return f"RationalMatrix({self._rows}x{self._cols}: [{body}])"


def rref(m: RationalMatrix) -> Tuple[RationalMatrix, List[int]]:
    """Reduced row echelon form and the list of pivot columns"""
    work = m.to_lists()
    n_rows, n_cols = m.shape
    pivots: List[int] = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        pivot_row = next((i for i in range(r, n_rows) if work[i][c] != 0), None)
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        lead = work[r][c]
        if lead != 1:
            work[r] = [x / lead for x in work[r]]
        for i in range(n_rows):
            if i != r and work[i][c] != 0:
                factor = work[i][c]
                work[i] = [a - factor * b for a, b in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
    return RationalMatrix(n_rows, n_cols, work), pivots


def rank(m: RationalMatrix) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    return len(rref(m)[1])


def kernel_basis(m: RationalMatrix) -> RationalMatrix:
    """Canonical echelon null-space basis as the columns of a cols x nullity matrix.

    For each free column f in increasing order: x_f = 1, the other free
    variables are 0 and each pivot variable is -R[r][f].
    """
    reduced, pivots = rref(m)
    n = m.cols
    pivot_set = set(pivots)
    free = [j for j in range(n) if j not in pivot_set]
    columns = []
    for f in free:
        x = [Fraction(0)] * n
        x[f] = Fraction(1)
        for r, pc in enumerate(pivots):
            x[pc] = -reduced[r, f]
        columns.append(x)
    return RationalMatrix.from_columns(columns, n)


def nullity(m: RationalMatrix) -> int:
    return m.cols - rank(m)


def in_span(v: Sequence, basis: RationalMatrix) -> bool:
    """Exact test whether v lies in the column span of basis"""
    vector = [to_fraction(x) for x in v]
    if len(vector) != basis.rows:
        raise ConsistencyError(
            f"Vector of length {len(vector)} against basis with {basis.rows} rows",
            code="dimension_mismatch",
        )
    if all(x == 0 for x in vector):
        return True
    augmented = basis.hstack(RationalMatrix.from_columns([vector], basis.rows))
    return rank(augmented) == rank(basis)


def span_contains(outer: RationalMatrix, inner: RationalMatrix) -> bool:
    """True iff every column of inner lies in the span of outer"""
    if inner.cols == 0:
        return True
    return rank(outer.hstack(inner)) == rank(outer)


def span_equal(a: RationalMatrix, b: RationalMatrix) -> bool:
    return span_contains(a, b) and span_contains(b, a)


__all__ = [
    "Scalar",
    "to_fraction",
    "RationalMatrix",
    "rref",
    "rank",
    "kernel_basis",
    "nullity",
    "in_span",
    "span_contains",
    "span_equal",
]
