from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from asmkit.poly import (
    Poly,
    apply_elementary_symmetric_shift,
    apply_pair_operator,
    delta,
    poly_add,
    poly_eval,
    poly_mul,
    shift,
    vandermonde_poly,
)


def k(n, v):
    return Poly.var(n, v)


def polys(arity, max_deg=3):
    exps = st.tuples(*[st.integers(0, max_deg)] * arity)
    coeffs = st.fractions(min_value=-9, max_value=9, max_denominator=6)
    return st.dictionaries(exps, coeffs, max_size=6).map(lambda d: Poly(arity, d))


def test_add_examples():
    assert (poly_add(k(1, 1), -k(1, 1))).is_zero()
    assert poly_add(k(2, 1) + 1, k(2, 2)) == Poly.parse("k1 + k2 + 1", 2)
    half = Poly.parse("1/2*k2^2", 2)
    assert half + half == Poly.parse("k2^2", 2)


def test_mul_examples():
    assert poly_mul(k(2, 1), k(2, 2) - k(2, 1)) == Poly.parse("k1*k2 - k1^2", 2)
    p = Poly.parse("3*k1*k2 - 1/2", 2)
    assert p * Poly.constant(2, 1) == p
    x = Poly.var(1, 1, "X")
    assert (x + 1) ** 2 * (x + 1) == Poly.parse("X1^3 + 3*X1^2 + 3*X1 + 1", 1, "X")


def test_arity_mismatch():
    with pytest.raises(ValueError):
        k(2, 1) + k(3, 1)
    with pytest.raises(ValueError):
        k(2, 1) * k(3, 1)


def test_eval_examples():
    p = k(2, 2) - k(2, 1) + 1
    assert poly_eval(p, (1, 2)) == 2
    assert poly_eval(p, (2, 2)) == 1
    assert poly_eval(Poly.constant(3, 7), (5, -1, 9)) == 7
    with pytest.raises(ValueError):
        poly_eval(p, (1,))


def test_shift_examples():
    assert shift(k(1, 1) ** 2, 1, 1) == Poly.parse("k1^2 + 2*k1 + 1", 1)
    p = Poly.parse("k1*k2^2 - 3", 2)
    assert shift(p, 2, 0) == p
    assert shift(k(1, 1), 1, -3) == Poly.parse("k1 - 3", 1)
    with pytest.raises(ValueError):
        shift(p, 3, 1)


def test_delta_examples():
    assert delta(k(2, 2) - k(2, 1), 2) == Poly.constant(2, 1)
    assert delta(Poly.constant(2, 5), 1).is_zero()
    assert delta(k(2, 2) ** 2, 2) == Poly.parse("2*k2 + 1", 2)
    with pytest.raises(ValueError):
        delta(k(2, 1), 0)


def test_pair_operator_examples():
    assert apply_pair_operator(k(2, 2) - k(2, 1), 1, 2) == Poly.parse("k2 - k1 + 1", 2)
    c = Poly.constant(3, Fraction(5, 2))
    assert apply_pair_operator(c, 1, 3) == c
    with pytest.raises(ValueError):
        apply_pair_operator(c, 2, 2)


def test_vandermonde_examples():
    assert vandermonde_poly(1) == Poly.constant(1, 1)
    assert vandermonde_poly(2) == Poly.parse("k2 - k1", 2)
    direct = (k(3, 2) - k(3, 1)) * (k(3, 3) - k(3, 1)) * (k(3, 3) - k(3, 2)) * Fraction(1, 2)
    assert vandermonde_poly(3) == direct
    with pytest.raises(ValueError):
        vandermonde_poly(0)


@pytest.mark.parametrize("n", range(1, 9))
def test_vandermonde_superdiagonal_point(n):
    assert poly_eval(vandermonde_poly(n), range(1, n + 1)) == 1


@pytest.mark.parametrize("n", range(1, 7))
def test_vandermonde_integral_on_grid(n):
    p = vandermonde_poly(n)
    pts = product(range(-2, 3), repeat=n) if n <= 4 else (
        tuple((i * 7 + j * 3) % 11 - 5 for j in range(n)) for i in range(60)
    )
    for pt in pts:
        assert poly_eval(p, pt).denominator == 1


def test_elementary_symmetric_shift_examples():
    p = Poly.parse("k1*k2", 2)
    assert apply_elementary_symmetric_shift(p, [1, 2], 0) == p
    assert apply_elementary_symmetric_shift(k(1, 1), [1], 1) == Poly.parse("k1 + 1", 1)
    expected = shift(p, 1, 1) + shift(p, 2, 1)
    assert apply_elementary_symmetric_shift(p, [1, 2], 1) == expected
    with pytest.raises(ValueError):
        apply_elementary_symmetric_shift(p, [1, 2], 3)
    with pytest.raises(ValueError):
        apply_elementary_symmetric_shift(p, [1, 1], 1)


@settings(max_examples=40, deadline=None)
@given(polys(4), st.permutations([1, 2, 3, 4]))
def test_pair_operators_commute(p, perm):
    a, b, c, d = perm
    lhs = apply_pair_operator(apply_pair_operator(p, a, b), c, d)
    rhs = apply_pair_operator(apply_pair_operator(p, c, d), a, b)
    assert lhs == rhs


@settings(max_examples=40, deadline=None)
@given(polys(3), st.integers(1, 3))
def test_shift_and_delta_commute(p, v):
    assert shift(delta(p, v), v, 1) == delta(shift(p, v, 1), v)
    assert shift(shift(p, v, 1), v, -1) == p


@settings(max_examples=60, deadline=None)
@given(polys(3), st.tuples(*[st.integers(-4, 4)] * 3), st.integers(1, 3), st.integers(-3, 3))
def test_shift_agrees_with_evaluation(p, pt, v, c):
    moved = list(pt)
    moved[v - 1] += c
    assert poly_eval(shift(p, v, c), pt) == poly_eval(p, moved)


@settings(max_examples=80)
@given(polys(3))
def test_text_round_trip(p):
    assert Poly.parse(p.to_text(), 3) == p


def test_canonical_text_order():
    p = Poly.parse("3*k3 - 2*k2^2 + 1/2*k1^2*k3", 3)
    assert p.to_text() == "1/2*k1^2*k3 - 2*k2^2 + 3*k3"
    assert Poly.zero(2).to_text() == "0"
    assert (-k(2, 1)).to_text() == "-k1"
    with pytest.raises(ValueError):
        Poly.parse("2*k4", 3)
    with pytest.raises(ValueError):
        Poly.parse("k1 +* 3", 3)


def test_specialize_permute_negate():
    p = Poly.parse("k1^2*k2 + k3", 3)
    assert p.specialize({1: 2}) == Poly.parse("4*k1 + k2", 2)
    assert p.permute([3, 1, 2]) == Poly.parse("k3^2*k1 + k2", 3)
    assert p.negate_vars([1, 3]) == Poly.parse("k1^2*k2 - k3", 3)
    with pytest.raises(ValueError):
        p.permute([1, 1, 2])


def test_degree():
    p = Poly.parse("k1^3*k2 + k2^2", 2)
    assert p.degree() == 4 and p.degree(1) == 3 and p.degree(2) == 2
    assert Poly.zero(2).degree() == -1
