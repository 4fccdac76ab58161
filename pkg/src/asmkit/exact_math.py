"""Exact integer/rational helpers: binomials, rising factorials, dense matrices.

Integers are plain Python ``int`` and rationals are ``fractions.Fraction``;
both are unbounded and always reduced.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, lcm
from typing import Callable, Iterable, Sequence, Union

Number = Union[int, Fraction]

__all__ = [
    "Matrix",
    "binomial",
    "det_exact",
    "factorial",
    "format_rational",
    "parse_rational",
    "rising_factorial",
]


def binomial(a: int, b: int) -> int:
    """Generalized binomial coefficient a(a-1)...(a-b+1)/b!.

    Zero for ``b < 0``; any integer ``a`` (including negative) is allowed.
    """
    if b < 0:
        return 0
    if 0 <= a and b > a:
        return 0
    num = 1
    for t in range(b):
        num *= a - t
    return num // factorial(b)


def rising_factorial(a: int, n: int) -> int:
    """(a)_n = a(a+1)...(a+n-1), with n factors and (a)_0 = 1."""
    if n < 0:
        raise ValueError(f"rising factorial needs n >= 0, got {n}")
    out = 1
    for t in range(n):
        out *= a + t
    return out


def format_rational(x: Number) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


@dataclass(frozen=True)
class Matrix:
    """Dense immutable matrix of exact rationals, stored row-major."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )
        object.__setattr__(self, "entries", tuple(Fraction(e) for e in self.entries))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Number]]) -> "Matrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, tuple(e for r in rows for e in r))

    @classmethod
    def from_function(cls, rows: int, cols: int, f: Callable[[int, int], Number]) -> "Matrix":
        """Build a matrix from ``f(i, j)`` with 1-based ``i`` and ``j``."""
        return cls(
            rows,
            cols,
            tuple(f(i, j) for i in range(1, rows + 1) for j in range(1, cols + 1)),
        )

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls.from_function(n, n, lambda i, j: int(i == j))

    def __getitem__(self, ij: tuple) -> Fraction:
        # 1-based indexing to match the usual matrix subscripts
        i, j = ij
        if not (1 <= i <= self.rows and 1 <= j <= self.cols):
            raise IndexError(ij)
        return self.entries[(i - 1) * self.cols + (j - 1)]

    def row(self, i: int) -> tuple:
        return self.entries[(i - 1) * self.cols : i * self.cols]

    def to_rows(self) -> list:
        return [list(self.row(i)) for i in range(1, self.rows + 1)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Matrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Matrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        cols = [other.entries[j :: other.cols] for j in range(other.cols)] if other.cols else []
        out = []
        for i in range(self.rows):
            r = self.entries[i * self.cols : (i + 1) * self.cols]
            for c in cols:
                out.append(sum((a * b for a, b in zip(r, c)), Fraction(0)))
        return Matrix(self.rows, other.cols, tuple(out))

    def apply(self, vec: Iterable[Number]) -> list:
        """Matrix-vector product."""
        vec = [Fraction(v) for v in vec]
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        return [sum((a * v for a, v in zip(self.row(i), vec)), Fraction(0)) for i in range(1, self.rows + 1)]

    def minor(self, i: int, j: int) -> "Matrix":
        """Delete row ``i`` and column ``j`` (1-based)."""
        rows = [
            [e for c, e in enumerate(r, 1) if c != j]
            for rr, r in enumerate(self.to_rows(), 1)
            if rr != i
        ]
        if not rows:
            return Matrix(0, max(self.cols - 1, 0), ())
        return Matrix.from_rows(rows)

    def __str__(self) -> str:
        cells = [[format_rational(e) for e in r] for r in self.to_rows()]
        width = max((len(c) for r in cells for c in r), default=1)
        return "\n".join(" ".join(c.rjust(width) for c in r) for r in cells)


def det_exact(m: Matrix) -> Fraction:
    """Determinant by fraction-free (Bareiss) elimination with row pivoting."""
    if not m.is_square:
        raise ValueError(f"determinant of a non-square {m.rows}x{m.cols} matrix")
    n = m.rows
    if n == 0:
        return Fraction(1)
    # clear denominators so every elimination step is an exact integer division
    scale = lcm(*(e.denominator for e in m.entries))
    a = [[int(e * scale) for e in m.row(i)] for i in range(1, n + 1)]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return Fraction(sign * a[n - 1][n - 1], scale**n)

