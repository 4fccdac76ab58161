"""Closed-form counts and the binomial matrices that appear in the proof of the
refined enumeration.

Matrix indices are 1-based throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from asmkit.exact_math import Matrix, binomial, det_exact, rising_factorial

__all__ = [
    "RefinedTable",
    "asm_total",
    "conjugation_matrices",
    "det_matrix",
    "dpp_determinant",
    "dpp_matrix",
    "eigen_matrix",
    "lemma_k_rhs",
    "refined_formula",
    "refined_table",
    "side_formula",
]


def _exact_int(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"{what} is not an integer: {x}")
    return x.numerator


def _factorial_ratio(n: int, upto: int) -> Fraction:
    # prod_{j=1}^{upto} (3j-2)! / (n+j-1)!
    num = den = 1
    for j in range(1, upto + 1):
        num *= factorial(3 * j - 2)
        den *= factorial(n + j - 1)
    return Fraction(num, den)


def asm_total(n: int) -> int:
    """Number of n x n alternating sign matrices."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return _exact_int(_factorial_ratio(n, n), f"asm_total({n})")


def _refined_weight(n: int, i: int) -> Fraction:
    return Fraction(rising_factorial(i, n - 1) * rising_factorial(1 + n - i, n - 1), factorial(n - 1))


def refined_formula(n: int, i: int) -> int:
    """Number of n x n ASMs whose first-row 1 is in column ``i``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 1 <= i <= n:
        raise ValueError(f"column {i} out of range 1..{n}")
    return _exact_int(_refined_weight(n, i) * _factorial_ratio(n, n - 1), f"refined_formula({n}, {i})")


@dataclass(frozen=True)
class RefinedTable:
    n: int
    values: tuple

    def at(self, i: int) -> int:
        """A_{n,i} with 1-based ``i``."""
        return self.values[i - 1]


def refined_table(n: int) -> RefinedTable:
    return RefinedTable(n, tuple(refined_formula(n, i) for i in range(1, n + 1)))


def lemma_k_rhs(n: int, k: int) -> int:
    """sum_i A_{n,i} binom(i+k-n-1, i-1): alpha(n; 1..n-1, k) in terms of refined counts."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return sum(refined_formula(n, i) * binomial(i + k - n - 1, i - 1) for i in range(1, n + 1))


def side_formula(n: int, k: int) -> int:
    """Closed form for the generalized n x k sign matrices (sum-0 columns n..k-1)."""
    if n < 1 or k < n:
        raise ValueError(f"need k >= n >= 1, got n={n}, k={k}")
    s = sum(_refined_weight(n, i) * binomial(i + k - n - 1, i - 1) for i in range(1, n + 1))
    return _exact_int(_factorial_ratio(n, n - 1) * s, f"side_formula({n}, {k})")


def eigen_matrix(n: int) -> Matrix:
    """((-1)^{j+1} binom(2n-i-1, n-i-j+1)), which fixes (A_{n,1}, ..., A_{n,n})."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return Matrix.from_function(n, n, lambda i, j: (-1) ** (j + 1) * binomial(2 * n - i - 1, n - i - j + 1))


def det_matrix(n: int) -> Matrix:
    """B_n = ((-1)^{j+1} binom(2n-i-2, n-i-j-1) + delta_ij), size n-1."""
    if n < 2:
        raise ValueError("n must be >= 2")
    return Matrix.from_function(
        n - 1, n - 1, lambda i, j: (-1) ** (j + 1) * binomial(2 * n - i - 2, n - i - j - 1) + (i == j)
    )


def dpp_matrix(n: int) -> Matrix:
    """(binom(i+j, j-1) + delta_ij) of size n-2."""
    if n < 2:
        raise ValueError("n must be >= 2")
    return Matrix.from_function(n - 2, n - 2, lambda i, j: binomial(i + j, j - 1) + (i == j))


def dpp_determinant(n: int) -> int:
    """Andrews' determinant; counts descending plane partitions with parts at most n-1."""
    return _exact_int(det_exact(dpp_matrix(n)), f"dpp_determinant({n})")


def conjugation_matrices(n: int) -> tuple:
    """(R, R_inv, B, B_star), all (n-1) x (n-1).

    R_inv B R = B_star + I is the conjugation that reduces det B to the
    Andrews determinant.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    m = n - 1
    r = Matrix.from_function(m, m, lambda i, j: binomial(n + j - i - 1, j - i))
    r_inv = Matrix.from_function(m, m, lambda i, j: (-1) ** (i + j) * binomial(n, j - i))
    b_star = Matrix.from_function(m, m, lambda i, j: 0 if i == m else binomial(i + j, j - 1))
    return r, r_inv, det_matrix(n), b_star
