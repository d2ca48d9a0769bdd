"""Immutable integer matrices with exact arithmetic."""

from __future__ import annotations

from collections.abc import Iterable, Sequence


class MatrixZ:
    """A ``rows x cols`` matrix of Python integers.

    Stored as a tuple of row tuples; the column count is kept explicitly so
    that ``0 x n`` and ``n x 0`` matrices stay well defined.
    """

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: int, cols: int, data: Iterable[Sequence[int]] = ()) -> None:
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        body = tuple(tuple(r) for r in data) if data else tuple((0,) * cols for _ in range(rows))
        if len(body) != rows or any(len(r) != cols for r in body):
            raise ValueError(f"entries do not form a {rows}x{cols} matrix")
        for r in body:
            for x in r:
                if not isinstance(x, int) or isinstance(x, bool):
                    raise TypeError(f"matrix entries must be int, got {type(x).__name__}")
        self.rows, self.cols, self._data = rows, cols, body

    @classmethod
    def from_rows(cls, data: Sequence[Sequence[int]], cols: int | None = None) -> "MatrixZ":
        if cols is None:
            cols = len(data[0]) if data else 0
        return cls(len(data), cols, data)

    @classmethod
    def from_flat(cls, rows: int, cols: int, flat: Sequence[int]) -> "MatrixZ":
        return cls(rows, cols, [flat[i * cols : (i + 1) * cols] for i in range(rows)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "MatrixZ":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "MatrixZ":
        return cls(n, n, [[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def diag(cls, entries: Sequence[int], rows: int, cols: int) -> "MatrixZ":
        data = [[0] * cols for _ in range(rows)]
        for i, d in enumerate(entries):
            data[i][i] = d
        return cls(rows, cols, data)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self._data[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self._data[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self._data)

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self._data]

    def flat(self) -> list[int]:
        return [x for r in self._data for x in r]

    def transpose(self) -> "MatrixZ":
        return MatrixZ(self.cols, self.rows, list(zip(*self._data)) if self.rows else ())

    def take(self, rows: slice | Sequence[int] = slice(None), cols: slice | Sequence[int] = slice(None)) -> "MatrixZ":
        ri = range(self.rows)[rows] if isinstance(rows, slice) else list(rows)
        ci = range(self.cols)[cols] if isinstance(cols, slice) else list(cols)
        return MatrixZ(len(ri), len(ci), [[self._data[i][j] for j in ci] for i in ri])

    def hstack(self, other: "MatrixZ") -> "MatrixZ":
        if self.rows != other.rows:
            raise ValueError("hstack needs equal row counts")
        return MatrixZ(self.rows, self.cols + other.cols, [a + b for a, b in zip(self._data, other._data)])

    def __matmul__(self, other: "MatrixZ") -> "MatrixZ":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        rhs = other._data
        out = []
        for r in self._data:
            acc = [0] * other.cols
            for k, a in enumerate(r):
                if a:
                    for j, b in enumerate(rhs[k]):
                        if b:
                            acc[j] += a * b
            out.append(acc)
        return MatrixZ(self.rows, other.cols, out)

    def apply(self, vec: Sequence[int]) -> list[int]:
        if len(vec) != self.cols:
            raise ValueError("vector length does not match column count")
        return [sum(a * v for a, v in zip(r, vec) if a) for r in self._data]

    def __add__(self, other: "MatrixZ") -> "MatrixZ":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return MatrixZ(self.rows, self.cols, [[a + b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)])

    def __neg__(self) -> "MatrixZ":
        return MatrixZ(self.rows, self.cols, [[-a for a in r] for r in self._data])

    def __sub__(self, other: "MatrixZ") -> "MatrixZ":
        return self + (-other)

    def is_zero(self) -> bool:
        return not any(any(r) for r in self._data)

    def is_identity(self) -> bool:
        return self.rows == self.cols and self == MatrixZ.identity(self.rows)

    def is_diagonal(self) -> bool:
        return all(x == 0 for i, r in enumerate(self._data) for j, x in enumerate(r) if i != j)

    def diagonal(self) -> list[int]:
        return [self._data[i][i] for i in range(min(self.rows, self.cols))]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, MatrixZ) and self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._data))

    def __repr__(self) -> str:
        return f"MatrixZ({self.rows}x{self.cols}, {self.to_lists()})"


def bareiss_det(M: MatrixZ) -> int:
    """Determinant by fraction-free elimination; exact for any integer entries."""
    if M.rows != M.cols:
        raise ValueError("determinant of a non-square matrix")
    n = M.rows
    a = M.to_lists()
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1
