"""Brute-force ground truth: monotone triangles, alternating sign matrices,
the bijection between them, and the generalized n x k sign matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

__all__ = [
    "MonotoneTriangle",
    "SignMatrix",
    "alpha_brute",
    "asm_to_triangle",
    "count_asms_brute",
    "count_side_matrices_brute",
    "enumerate_asms",
    "enumerate_side_matrices",
    "enumerate_triangles",
    "refined_counts_brute",
    "triangle_to_asm",
    "validate_asm",
]


@dataclass(frozen=True)
class SignMatrix:
    """Rectangular matrix over {-1, 0, 1}; ``entries`` is a tuple of row tuples."""

    entries: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.entries)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged sign matrix")
        if any(x not in (-1, 0, 1) for r in rows for x in r):
            raise ValueError("sign matrix entries must be -1, 0 or 1")
        object.__setattr__(self, "entries", rows)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.entries)

    def to_text(self) -> str:
        return "\n".join(" ".join(str(x) for x in r) for r in self.entries)

    @classmethod
    def parse(cls, text: str) -> "SignMatrix":
        return cls(tuple(tuple(int(t) for t in line.split()) for line in text.splitlines() if line.strip()))

    @classmethod
    def identity(cls, n: int) -> "SignMatrix":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))


@dataclass(frozen=True)
class MonotoneTriangle:
    """Triangular array; ``rows[0]`` is the top entry, ``rows[-1]`` the bottom row."""

    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        for i, r in enumerate(rows, 1):
            if len(r) != i:
                raise ValueError(f"row {i} has {len(r)} entries, expected {i}")
            if any(a >= b for a, b in zip(r, r[1:])):
                raise ValueError(f"row {i} is not strictly increasing: {r}")
        for i in range(1, len(rows)):
            upper, lower = rows[i - 1], rows[i]
            for j, x in enumerate(upper):
                if not lower[j] <= x <= lower[j + 1]:
                    raise ValueError(f"entry {x} in row {i} breaks interlacing with {lower}")
        object.__setattr__(self, "rows", rows)

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def bottom(self) -> tuple:
        return self.rows[-1] if self.rows else ()

    @property
    def top(self) -> int:
        return self.rows[0][0]

    def to_text(self) -> str:
        n = self.n
        width = max((len(str(x)) for r in self.rows for x in r), default=1)
        lines = []
        for i, r in enumerate(self.rows, 1):
            cells = [" " * width] * (2 * n - 1)
            for t, x in enumerate(r):
                cells[n - i + 2 * t] = str(x).rjust(width)
            lines.append(" ".join(cells).rstrip())
        return "\n".join(lines)

    @classmethod
    def parse(cls, text: str) -> "MonotoneTriangle":
        return cls(tuple(tuple(int(t) for t in line.split()) for line in text.splitlines() if line.strip()))


def _check_increasing(row: Sequence[int]) -> tuple:
    row = tuple(int(x) for x in row)
    if any(a >= b for a, b in zip(row, row[1:])):
        raise ValueError(f"bottom row must be strictly increasing, got {row}")
    return row


def _interlacing_rows(row: tuple) -> Iterator[tuple]:
    """All (l_1..l_{n-1}) with k_1 <= l_1 <= k_2 <= ... <= l_{n-1} <= k_n, l strictly increasing."""
    m = len(row) - 1
    cur: list = []

    def rec(i: int):
        if i == m:
            yield tuple(cur)
            return
        lo = row[i]
        if cur and cur[-1] >= lo:
            lo = cur[-1] + 1
        for x in range(lo, row[i + 1] + 1):
            cur.append(x)
            yield from rec(i + 1)
            cur.pop()

    yield from rec(0)


@lru_cache(maxsize=None)
def _alpha_normalized(row: tuple) -> int:
    if len(row) <= 1:
        return 1
    return sum(_alpha_cached(l) for l in _interlacing_rows(row))


def _alpha_cached(row: tuple) -> int:
    # counts are invariant under translating the whole row
    base = row[0] if row else 0
    return _alpha_normalized(tuple(x - base for x in row))


def alpha_brute(row: Sequence[int], memo: bool = True) -> int:
    """Number of monotone triangles with the given strictly increasing bottom row."""
    row = _check_increasing(row)
    if memo:
        return _alpha_cached(row)
    return _alpha_uncached(row)


def _alpha_uncached(row: tuple) -> int:
    if len(row) <= 1:
        return 1
    return sum(_alpha_uncached(l) for l in _interlacing_rows(row))


def enumerate_triangles(row: Sequence[int]) -> Iterator[MonotoneTriangle]:
    """Every monotone triangle with bottom row ``row``.

    Rows above the bottom are chosen bottom-up in lexicographic order.
    """
    row = _check_increasing(row)
    stack = [row]

    def rec(cur: tuple):
        if len(cur) <= 1:
            yield MonotoneTriangle(tuple(reversed(stack)))
            return
        for l in _interlacing_rows(cur):
            stack.append(l)
            yield from rec(l)
            stack.pop()

    if not row:
        return
    yield from rec(row)


def _alternates(seq: Sequence[int]) -> bool:
    # non-zero entries alternate in sign, the first being +1
    expect = 1
    for x in seq:
        if x:
            if x != expect:
                return False
            expect = -expect
    return True


def validate_asm(m: SignMatrix) -> bool:
    if m.rows != m.cols:
        return False
    lines = list(m.entries) + [m.column(j) for j in range(m.cols)]
    return all(sum(l) == 1 and _alternates(l) for l in lines)


def asm_to_triangle(m: SignMatrix) -> MonotoneTriangle:
    """Row i of the triangle lists the columns whose partial sums through row i equal 1."""
    if not validate_asm(m):
        raise ValueError("not an alternating sign matrix")
    n = m.rows
    partial = [0] * n
    rows = []
    for r in m.entries:
        partial = [a + b for a, b in zip(partial, r)]
        rows.append(tuple(j + 1 for j, s in enumerate(partial) if s == 1))
    return MonotoneTriangle(tuple(rows))


def triangle_to_asm(t: MonotoneTriangle) -> SignMatrix:
    n = t.n
    if t.bottom != tuple(range(1, n + 1)):
        raise ValueError(f"bottom row must be 1..{n}, got {t.bottom}")
    prev = [0] * n
    out = []
    for r in t.rows:
        cur = [0] * n
        for c in r:
            cur[c - 1] = 1
        out.append(tuple(a - b for a, b in zip(cur, prev)))
        prev = cur
    return SignMatrix(tuple(out))


def _rows_from_state(state: tuple) -> Iterator[tuple]:
    """Alternating rows with sum 1 that keep every column partial sum in {0, 1}.

    A +1 may only go where the column partial sum is 0 and a -1 only where it is 1.
    """
    k = len(state)
    cur = [0] * k

    def rec(j: int, running: int):
        if j == k:
            if running == 1:
                yield tuple(cur)
            return
        yield from rec(j + 1, running)
        if running == 0 and state[j] == 0:
            cur[j] = 1
            yield from rec(j + 1, 1)
            cur[j] = 0
        elif running == 1 and state[j] == 1:
            cur[j] = -1
            yield from rec(j + 1, 0)
            cur[j] = 0

    yield from rec(0, 0)


def enumerate_side_matrices(n: int, k: int) -> Iterator[SignMatrix]:
    """n x k sign matrices with alternating rows/columns, row sums 1, column sums 1
    except columns n..k-1 (1-based) which sum to 0.

    Columns are kept alternating starting with +1 by construction, so the
    "first non-zero entry is +1" condition on the sum-0 columns holds
    automatically (vacuously for an all-zero column).
    """
    if n < 1 or k < n:
        raise ValueError(f"need k >= n >= 1, got n={n}, k={k}")
    target = tuple(0 if n <= j < k else 1 for j in range(1, k + 1))
    rows: list = []

    def rec(state: tuple):
        if len(rows) == n:
            if state == target:
                yield SignMatrix(tuple(rows))
            return
        left = n - len(rows)
        for r in _rows_from_state(state):
            new = tuple(a + b for a, b in zip(state, r))
            # each remaining row raises the total column sum by exactly one
            if sum(target) - sum(new) != left - 1:
                continue
            rows.append(r)
            yield from rec(new)
            rows.pop()

    yield from rec((0,) * k)


def count_side_matrices_brute(n: int, k: int) -> int:
    if n < 1 or k < n:
        raise ValueError(f"need k >= n >= 1, got n={n}, k={k}")
    return sum(1 for _ in enumerate_side_matrices(n, k))


def enumerate_asms(n: int) -> Iterator[SignMatrix]:
    """All n x n alternating sign matrices in a fixed deterministic order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        yield SignMatrix(())
        return
    yield from enumerate_side_matrices(n, n)


def count_asms_brute(n: int) -> int:
    return sum(1 for _ in enumerate_asms(n))


def refined_counts_brute(n: int) -> list:
    """A_{n,i} for i = 1..n, via triangles with bottom row 1..n minus i."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return [alpha_brute([x for x in range(1, n + 1) if x != i]) for i in range(1, n + 1)]
