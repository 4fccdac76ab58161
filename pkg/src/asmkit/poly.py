"""Sparse multivariate polynomials with exact rational coefficients.

A :class:`Poly` lives in a ring with a fixed number of variables
``k1, ..., kn`` (the display symbol is configurable, e.g. ``X1, ..., Xn``).
Terms are kept in a dict keyed by exponent tuples; graded-lex order is only
imposed when rendering.

Besides ring arithmetic the module provides the shift/difference operator
calculus used by the operator formula: ``E_v p(.., k_v, ..) = p(.., k_v + 1, ..)``
and ``Delta_v = E_v - id``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from itertools import combinations
from math import comb, prod
from typing import Iterable, Mapping, Sequence, Union

from asmkit.exact_math import format_rational

Number = Union[int, Fraction]

__all__ = [
    "Poly",
    "apply_elementary_symmetric_shift",
    "apply_pair_operator",
    "delta",
    "poly_add",
    "poly_eval",
    "poly_mul",
    "shift",
    "vandermonde_poly",
]


def _norm(c: Number) -> Number:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class Poly:
    """Immutable polynomial over Q in ``arity`` variables."""

    __slots__ = ("arity", "terms", "symbol")

    def __init__(self, arity: int, terms: Mapping[tuple, Number] | None = None, symbol: str = "k"):
        if arity < 0:
            raise ValueError("arity must be non-negative")
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != arity or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps} for arity {arity}")
            if c != 0:
                clean[exps] = _norm(c) if not isinstance(c, int) else c
        self.arity = arity
        self.terms = clean
        self.symbol = symbol

    @classmethod
    def _raw(cls, arity: int, terms: dict, symbol: str = "k") -> "Poly":
        # trusted constructor: terms already validated and pruned
        p = cls.__new__(cls)
        p.arity = arity
        p.terms = terms
        p.symbol = symbol
        return p

    # -- constructors ---------------------------------------------------
    @classmethod
    def constant(cls, arity: int, c: Number, symbol: str = "k") -> "Poly":
        return cls(arity, {(0,) * arity: c}, symbol)

    @classmethod
    def zero(cls, arity: int, symbol: str = "k") -> "Poly":
        return cls._raw(arity, {}, symbol)

    @classmethod
    def var(cls, arity: int, v: int, symbol: str = "k") -> "Poly":
        _check_var(arity, v)
        exps = [0] * arity
        exps[v - 1] = 1
        return cls._raw(arity, {tuple(exps): 1}, symbol)

    # -- basic queries ---------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self, v: int | None = None) -> int:
        """Total degree, or degree in variable ``v``; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        if v is None:
            return max(sum(e) for e in self.terms)
        _check_var(self.arity, v)
        return max(e[v - 1] for e in self.terms)

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return Fraction(self.terms.get(tuple(exps), 0))

    def sorted_terms(self) -> list:
        """Terms in graded-lex order (highest total degree first)."""
        return sorted(self.terms.items(), key=lambda t: (-sum(t[0]), tuple(-e for e in t[0])))

    # -- arithmetic -------------------------------------------------------
    def _check_same(self, other: "Poly"):
        if not isinstance(other, Poly):
            raise TypeError(f"expected Poly, got {type(other).__name__}")
        if other.arity != self.arity:
            raise ValueError(f"arity mismatch: {self.arity} vs {other.arity}")

    def __add__(self, other):
        if not isinstance(other, Poly):
            return self + Poly.constant(self.arity, other, self.symbol)
        self._check_same(other)
        return Poly._raw(self.arity, _accumulate(self.terms, other.terms, 1), self.symbol)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Poly):
            return self - Poly.constant(self.arity, other, self.symbol)
        self._check_same(other)
        return Poly._raw(self.arity, _accumulate(self.terms, other.terms, -1), self.symbol)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return Poly._raw(self.arity, {e: -c for e, c in self.terms.items()}, self.symbol)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            if other == 0:
                return Poly.zero(self.arity, self.symbol)
            return Poly._raw(
                self.arity, {e: _norm(c * other) for e, c in self.terms.items()}, self.symbol
            )
        self._check_same(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Poly._raw(self.arity, _prune(out), self.symbol)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = Poly.constant(self.arity, 1, self.symbol)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.arity == other.arity and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Poly.constant(self.arity, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.arity, frozenset(self.terms.items())))

    # -- evaluation and substitution ---------------------------------------
    def __call__(self, *point: Number) -> Fraction:
        return poly_eval(self, point)

    def specialize(self, values: Mapping[int, Number]) -> "Poly":
        """Fix the variables in ``values`` (1-based keys); the rest are renumbered in order."""
        for v in values:
            _check_var(self.arity, v)
        keep = [i for i in range(self.arity) if (i + 1) not in values]
        fixed = [(i, Fraction(values[i + 1])) for i in range(self.arity) if (i + 1) in values]
        out: dict = {}
        for e, c in self.terms.items():
            for i, x in fixed:
                c = c * x ** e[i]
            if c:
                ne = tuple(e[i] for i in keep)
                out[ne] = out.get(ne, 0) + c
        return Poly._raw(len(keep), _prune(out), self.symbol)

    def permute(self, target: Sequence[int]) -> "Poly":
        """Rename variable ``i`` to ``target[i-1]`` (a permutation of 1..arity)."""
        if sorted(target) != list(range(1, self.arity + 1)):
            raise ValueError(f"{list(target)} is not a permutation of 1..{self.arity}")
        out = {}
        for e, c in self.terms.items():
            ne = [0] * self.arity
            for i, t in enumerate(target):
                ne[t - 1] = e[i]
            out[tuple(ne)] = c
        return Poly._raw(self.arity, out, self.symbol)

    def negate_vars(self, vars: Iterable[int]) -> "Poly":
        """Substitute ``k_v -> -k_v`` for every ``v`` in ``vars``."""
        idx = [v - 1 for v in vars]
        for i in idx:
            _check_var(self.arity, i + 1)
        out = {}
        for e, c in self.terms.items():
            odd = sum(e[i] for i in idx) & 1
            out[e] = -c if odd else c
        return Poly._raw(self.arity, out, self.symbol)

    def with_symbol(self, symbol: str) -> "Poly":
        return Poly._raw(self.arity, dict(self.terms), symbol)

    # -- text form --------------------------------------------------------
    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps, c in self.sorted_terms():
            c = Fraction(c)
            mono = "*".join(
                f"{self.symbol}{i}" + (f"^{e}" if e > 1 else "")
                for i, e in enumerate(exps, 1)
                if e
            )
            mag = abs(c)
            if not mono:
                body = format_rational(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{format_rational(mag)}*{mono}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    __str__ = to_text

    def __repr__(self):
        return f"Poly({self.arity}, {self.to_text()!r})"

    @classmethod
    def parse(cls, text: str, arity: int, symbol: str = "k") -> "Poly":
        """Inverse of :meth:`to_text`."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty polynomial text")
        if s[0] not in "+-":
            s = "+" + s
        sym = re.escape(symbol)
        term_re = re.compile(
            rf"([+-])(?:(\d+(?:/\d+)?)(?:\*|(?=$|[+-])))?((?:{sym}\d+(?:\^\d+)?)(?:\*{sym}\d+(?:\^\d+)?)*)?"
        )
        factor_re = re.compile(rf"{sym}(\d+)(?:\^(\d+))?")
        pos = 0
        out: dict = {}
        while pos < len(s):
            m = term_re.match(s, pos)
            if not m or m.end() == pos + 1 or (m.group(2) is None and m.group(3) is None):
                raise ValueError(f"cannot parse polynomial near {s[pos:]!r}")
            sign = -1 if m.group(1) == "-" else 1
            c = Fraction(m.group(2)) if m.group(2) else Fraction(1)
            exps = [0] * arity
            if m.group(3):
                for fm in factor_re.finditer(m.group(3)):
                    v = int(fm.group(1))
                    _check_var(arity, v)
                    exps[v - 1] += int(fm.group(2) or 1)
            key = tuple(exps)
            out[key] = out.get(key, 0) + sign * c
            pos = m.end()
        return cls(arity, _prune(out), symbol)


def _check_var(arity: int, v: int):
    if not isinstance(v, int) or not 1 <= v <= arity:
        raise ValueError(f"variable index {v} out of range 1..{arity}")


def _prune(terms: dict) -> dict:
    return {e: _norm(c) for e, c in terms.items() if c != 0}


def _accumulate(a: dict, b: dict, sign: int) -> dict:
    out = dict(a)
    for e, c in b.items():
        out[e] = out.get(e, 0) + sign * c
    return _prune(out)


def poly_add(p: Poly, q: Poly) -> Poly:
    return p + q


def poly_mul(p: Poly, q: Poly) -> Poly:
    return p * q


def poly_eval(p: Poly, point: Sequence[Number]) -> Fraction:
    point = list(point)
    if len(point) != p.arity:
        raise ValueError(f"point has {len(point)} coordinates, polynomial has arity {p.arity}")
    deg = max((max(e) for e in p.terms if e), default=0)
    powers = [[x**d for d in range(deg + 1)] for x in point]
    total = Fraction(0)
    for e, c in p.terms.items():
        total += c * prod(powers[i][d] for i, d in enumerate(e))
    return total


def shift(p: Poly, v: int, c: int = 1) -> Poly:
    """``E_v^c``: replace ``k_v`` by ``k_v + c``."""
    _check_var(p.arity, v)
    if c == 0:
        return p
    i = v - 1
    out: dict = {}
    for e, coef in p.terms.items():
        d = e[i]
        if d == 0:
            out[e] = out.get(e, 0) + coef
            continue
        head, tail = e[:i], e[i + 1 :]
        for t in range(d + 1):
            ne = head + (t,) + tail
            out[ne] = out.get(ne, 0) + coef * comb(d, t) * c ** (d - t)
    return Poly._raw(p.arity, _prune(out), p.symbol)


def delta(p: Poly, v: int) -> Poly:
    """Forward difference ``Delta_v p = E_v p - p``."""
    _check_var(p.arity, v)
    i = v - 1
    out: dict = {}
    for e, coef in p.terms.items():
        d = e[i]
        if d == 0:
            continue
        head, tail = e[:i], e[i + 1 :]
        # (k+1)^d - k^d drops the leading monomial
        for t in range(d):
            ne = head + (t,) + tail
            out[ne] = out.get(ne, 0) + coef * comb(d, t)
    return Poly._raw(p.arity, _prune(out), p.symbol)


def apply_pair_operator(p: Poly, a: int, b: int) -> Poly:
    """Apply ``id + E_a Delta_b`` to ``p``."""
    if a == b:
        raise ValueError("pair operator needs two distinct variables")
    return p + shift(delta(p, b), a, 1)


def vandermonde_poly(n: int, symbol: str = "k") -> Poly:
    """prod_{i<j} (k_j - k_i)/(j - i), expanded."""
    if n < 1:
        raise ValueError("vandermonde_poly needs n >= 1")
    out = Poly.constant(n, 1, symbol)
    norm = 1
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            out = out * (Poly.var(n, j, symbol) - Poly.var(n, i, symbol))
            norm *= j - i
    return out * Fraction(1, norm)


def apply_elementary_symmetric_shift(p: Poly, vars: Sequence[int], r: int) -> Poly:
    """``e_r(E_{v1}, ..., E_{vm}) p``: sum over r-subsets of shifting each variable by one."""
    vars = list(vars)
    if len(set(vars)) != len(vars):
        raise ValueError("variables must be distinct")
    for v in vars:
        _check_var(p.arity, v)
    if r < 0 or r > len(vars):
        raise ValueError(f"order {r} out of range 0..{len(vars)}")
    out: dict = {}
    for subset in combinations(vars, r):
        q = p
        for v in subset:
            q = shift(q, v, 1)
        for e, c in q.terms.items():
            out[e] = out.get(e, 0) + c
    return Poly._raw(p.arity, _prune(out), p.symbol)
