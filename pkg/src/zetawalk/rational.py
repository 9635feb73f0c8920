"""Exact matrices over big rationals.

Matrices are stored sparsely (one dict of nonzero entries per row) and are
immutable by convention: all operations return new matrices. Determinants
are computed by fraction-free Bareiss elimination on a denominator-cleared
integer copy, so intermediate growth stays polynomial.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Iterator, Sequence


class RatMatrix:
    """Dense-shaped, sparsely stored matrix with exact rational entries."""

    __slots__ = ("rows", "cols", "_rowdata")

    def __init__(self, rows: int, cols: int, entries: Iterable[tuple[int, int, Fraction]] = ()):
        if rows <= 0 or cols <= 0:
            raise ValueError(f"matrix dimensions must be positive, got {rows}x{cols}")
        self.rows = rows
        self.cols = cols
        self._rowdata: list[dict[int, Fraction]] = [{} for _ in range(rows)]
        for i, j, value in entries:
            if not (0 <= i < rows and 0 <= j < cols):
                raise IndexError(f"entry ({i}, {j}) outside {rows}x{cols} matrix")
            value = Fraction(value)
            if value:
                self._rowdata[i][j] = value
            else:
                self._rowdata[i].pop(j, None)

    @classmethod
    def from_rows(cls, data: Sequence[Sequence]) -> "RatMatrix":
        rows = len(data)
        cols = len(data[0])
        m = cls(rows, cols)
        for i, row in enumerate(data):
            if len(row) != cols:
                raise ValueError("ragged rows")
            rd = m._rowdata[i]
            for j, value in enumerate(row):
                value = Fraction(value)
                if value:
                    rd[j] = value
        return m

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        m = cls(n, n)
        one = Fraction(1)
        for i in range(n):
            m._rowdata[i][i] = one
        return m

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls(rows, cols)

    @classmethod
    def diagonal(cls, values: Sequence) -> "RatMatrix":
        n = len(values)
        m = cls(n, n)
        for i, value in enumerate(values):
            value = Fraction(value)
            if value:
                m._rowdata[i][i] = value
        return m

    # -- access ---------------------------------------------------------

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(key)
        return self._rowdata[i].get(j, Fraction(0))

    def nonzero_items(self) -> Iterator[tuple[int, int, Fraction]]:
        """Yield (i, j, value) sorted by (i, j)."""
        for i, rd in enumerate(self._rowdata):
            for j in sorted(rd):
                yield i, j, rd[j]

    def num_nonzero(self) -> int:
        return sum(len(rd) for rd in self._rowdata)

    def to_dense(self) -> list[list[Fraction]]:
        zero = Fraction(0)
        out = []
        for rd in self._rowdata:
            row = [zero] * self.cols
            for j, value in rd.items():
                row[j] = value
            out.append(row)
        return out

    def to_float(self):
        import numpy as np

        out = np.zeros((self.rows, self.cols))
        for i, rd in enumerate(self._rowdata):
            for j, value in rd.items():
                out[i, j] = float(value)
        return out

    # -- algebra --------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self._rowdata == other._rowdata
        )

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(tuple(sorted(rd.items())) for rd in self._rowdata)))

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        self._check_same_shape(other)
        out = RatMatrix(self.rows, self.cols)
        for i in range(self.rows):
            rd = dict(self._rowdata[i])
            for j, value in other._rowdata[i].items():
                s = rd.get(j, Fraction(0)) + value
                if s:
                    rd[j] = s
                else:
                    rd.pop(j, None)
            out._rowdata[i] = rd
        return out

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        return self + (other * Fraction(-1))

    def __neg__(self) -> "RatMatrix":
        return self * Fraction(-1)

    def __mul__(self, scalar) -> "RatMatrix":
        scalar = Fraction(scalar)
        out = RatMatrix(self.rows, self.cols)
        if scalar:
            for i, rd in enumerate(self._rowdata):
                out._rowdata[i] = {j: value * scalar for j, value in rd.items()}
        return out

    __rmul__ = __mul__

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch: {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        out = RatMatrix(self.rows, other.cols)
        for i, rd in enumerate(self._rowdata):
            acc: dict[int, Fraction] = {}
            for k, value in rd.items():
                for j, w in other._rowdata[k].items():
                    prod = value * w
                    s = acc.get(j)
                    acc[j] = prod if s is None else s + prod
            out._rowdata[i] = {j: value for j, value in acc.items() if value}
        return out

    def __pow__(self, exponent: int) -> "RatMatrix":
        if self.rows != self.cols:
            raise ValueError("matrix power requires a square matrix")
        if exponent < 0:
            raise ValueError("negative matrix powers are not supported")
        result = RatMatrix.identity(self.rows)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result @ base
            base = base @ base if e > 1 else base
            e >>= 1
        return result

    def transpose(self) -> "RatMatrix":
        out = RatMatrix(self.cols, self.rows)
        for i, rd in enumerate(self._rowdata):
            for j, value in rd.items():
                out._rowdata[j][i] = value
        return out

    def trace(self) -> Fraction:
        if self.rows != self.cols:
            raise ValueError("trace requires a square matrix")
        return sum((rd.get(i, Fraction(0)) for i, rd in enumerate(self._rowdata)), Fraction(0))

    def row_sums(self) -> list[Fraction]:
        return [sum(rd.values(), Fraction(0)) for rd in self._rowdata]

    def is_symmetric(self) -> bool:
        if self.rows != self.cols:
            return False
        for i, rd in enumerate(self._rowdata):
            for j, value in rd.items():
                if self._rowdata[j].get(i, Fraction(0)) != value:
                    return False
        return True

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __repr__(self) -> str:
        return f"RatMatrix({self.rows}x{self.cols}, {self.num_nonzero()} nonzero)"

    def _check_same_shape(self, other: "RatMatrix") -> None:
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError(
                f"shape mismatch: {self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )


def positive_support(matrix: RatMatrix) -> RatMatrix:
    """0/1 matrix marking the strictly positive entries of ``matrix``."""
    out = RatMatrix(matrix.rows, matrix.cols)
    one = Fraction(1)
    for i, rd in enumerate(matrix._rowdata):
        out._rowdata[i] = {j: one for j, value in rd.items() if value > 0}
    return out


def det_bareiss_int(a: list[list[int]]) -> int:
    """Exact determinant of an integer matrix; mutates ``a`` in place.

    Fraction-free one-step Bareiss: every intermediate entry is a minor of
    the input, so the interior division is exact and bit growth is bounded
    by the Hadamard bound.
    """
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            factor = row_i[k]
            if factor:
                for j in range(k + 1, n):
                    row_i[j] = (row_i[j] * pivot - factor * row_k[j]) // prev
                row_i[k] = 0
            elif pivot != prev:
                # zero multiplier rows still pick up the pivot/prev rescaling
                for j in range(k + 1, n):
                    row_i[j] = (row_i[j] * pivot) // prev
        prev = pivot
    return sign * a[n - 1][n - 1]


def det(matrix: RatMatrix) -> Fraction:
    """Exact determinant of a square rational matrix."""
    if matrix.rows != matrix.cols:
        raise ValueError("determinant requires a square matrix")
    dense = matrix.to_dense()
    scale = Fraction(1)
    int_rows: list[list[int]] = []
    for row in dense:
        lcm = 1
        for value in row:
            if value:
                lcm = lcm * value.denominator // math.gcd(lcm, value.denominator)
        scale *= lcm
        int_rows.append([int(value * lcm) for value in row])
    return Fraction(det_bareiss_int(int_rows), 1) / scale
