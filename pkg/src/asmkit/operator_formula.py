"""The operator formula for the number of monotone triangles with bottom row
(k_1, ..., k_n):

    alpha(n; k) = prod_{p<q} (id + E_{k_p} Delta_{k_q})  prod_{i<j} (k_j - k_i)/(j - i)

expanded into an explicit polynomial. The operators are applied one at a
time to a single accumulating polynomial, never expanded as an operator sum.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from asmkit.poly import Poly, apply_pair_operator, vandermonde_poly

__all__ = [
    "ALPHA_POLY_LIMIT",
    "AlphaPolynomial",
    "SizeLimitError",
    "alpha_eval",
    "alpha_last_var_poly",
    "alpha_poly",
]

# n = 7 takes about a minute and ~10^5 terms; beyond that memory grows quickly
ALPHA_POLY_LIMIT = 7


class SizeLimitError(ValueError):
    """Requested size exceeds a configured desk-scale cap."""


@dataclass(frozen=True)
class AlphaPolynomial:
    n: int
    poly: Poly

    def __call__(self, *row: int) -> Fraction:
        return self.poly(*row)

    def to_text(self) -> str:
        return self.poly.to_text()


def alpha_poly(n: int, limit: int | None = None) -> AlphaPolynomial:
    """alpha(n; k_1..k_n) as an explicit polynomial in k_1..k_n."""
    if n < 1:
        raise ValueError("alpha_poly needs n >= 1")
    cap = ALPHA_POLY_LIMIT if limit is None else limit
    if n > cap:
        raise SizeLimitError(f"alpha_poly({n}) exceeds the size limit {cap}")
    return AlphaPolynomial(n, _alpha_poly(n))


@lru_cache(maxsize=None)
def _alpha_poly(n: int) -> Poly:
    # scale away the 1/prod(j-i) normalization so the pipeline runs on integers
    vdm = vandermonde_poly(n)
    norm = 1
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            norm *= j - i
    p = vdm * norm
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            p = apply_pair_operator(p, a, b)
    return p * Fraction(1, norm)


def alpha_eval(row: Sequence[int]) -> int:
    """Value of the operator formula at an arbitrary integer row."""
    row = [int(x) for x in row]
    if not row:
        return 1
    val = alpha_poly(len(row)).poly(*row)
    if val.denominator != 1:
        raise ArithmeticError(f"operator formula gave non-integer {val} at {row}")
    return val.numerator


def alpha_last_var_poly(n: int) -> Poly:
    """alpha(n; 1, 2, ..., n-1, k) as a univariate polynomial in k."""
    p = alpha_poly(n).poly
    return p.specialize({v: v for v in range(1, n)})
