"""Polynomial arithmetic, monomial orders, parser/printer round trips."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from reeskit import (DegRevLex, Elimination, Lex, ParseError, PolyError,
                     RingCtx, TGraded, parse_poly)

CTX3 = RingCtx("x,y,z")
CTX2 = RingCtx("x,y")


# -- rational coefficients ----------------------------------------------------


def test_rational_normal_form():
    assert Fraction(6, 4) == Fraction(3, 2)
    assert Fraction(6, 4).denominator == 2
    assert Fraction(0, 7) == Fraction(0, 1)
    assert Fraction(1, -2).denominator == 2
    assert Fraction(1, -2).numerator == -1


# -- parsing -------------------------------------------------------------------


def test_parse_basic_terms():
    p = parse_poly("x^2*y - 3/2*z", CTX3)
    assert p.terms == {(2, 1, 0): Fraction(1), (0, 0, 1): Fraction(-3, 2)}


def test_parse_zero():
    assert parse_poly("0", CTX3).is_zero
    assert parse_poly("x - x", CTX3).is_zero


def test_parse_negative_exponent_rejected():
    with pytest.raises(ParseError, match="negative exponent"):
        parse_poly("x^(-1)", CTX3)
    with pytest.raises(ParseError, match="negative exponent"):
        parse_poly("x^-1", CTX3)


def test_parse_non_integer_exponent_rejected():
    with pytest.raises(ParseError, match="non-integer exponent"):
        parse_poly("x^1/2", CTX3)


def test_parse_unknown_variable():
    with pytest.raises(ParseError, match="unknown variable 'w'"):
        parse_poly("x + w", CTX3)


def test_parse_syntax_error_carries_position():
    with pytest.raises(ParseError) as err:
        parse_poly("x + + y", CTX3)
    assert err.value.pos == 4


def test_parse_implicit_multiplication_and_signs():
    assert parse_poly("3x^2y", CTX3) == parse_poly("3*x^2*y", CTX3)
    assert parse_poly("-x + y", CTX3) == parse_poly("y - x", CTX3)
    assert parse_poly("2/3", CTX3) == CTX3.const(Fraction(2, 3))


def test_parse_leading_plus_rejected():
    with pytest.raises(ParseError):
        parse_poly("+x", CTX3)


# -- printing ------------------------------------------------------------------


def test_print_canonical_order_and_format():
    p = parse_poly("y + x^2 - 3/2", CTX2)
    assert str(p) == "x^2 + y - 3/2"
    assert str(CTX2.zero) == "0"
    assert str(parse_poly("-x", CTX2)) == "-x"
    assert str(parse_poly("x*y - y^2", CTX2)) == "x*y - y^2"


@st.composite
def small_polys(draw, ctx=CTX3):
    n = len(ctx.vars)
    terms = {}
    for _ in range(draw(st.integers(0, 5))):
        exps = tuple(draw(st.integers(0, 4)) for _ in range(n))
        coeff = Fraction(draw(st.integers(-9, 9)), draw(st.integers(1, 9)))
        if coeff:
            terms[exps] = coeff
    return ctx.poly(terms)


@given(small_polys())
@settings(max_examples=80, deadline=None)
def test_print_parse_round_trip(p):
    text = str(p)
    q = parse_poly(text, CTX3)
    assert q == p
    assert str(q) == text


# -- arithmetic ------------------------------------------------------------------


def test_mul_examples():
    x, y = CTX2.var("x"), CTX2.var("y")
    assert (x + y) * (x - y) == x ** 2 - y ** 2
    assert (x + y) * CTX2.zero == CTX2.zero
    assert (x + y) ** 2 == x ** 2 + 2 * x * y + y ** 2


def test_pow_examples():
    x = CTX2.var("x")
    assert CTX2.zero ** 0 == CTX2.one
    assert (x + 1) ** 2 == x ** 2 + 2 * x + 1
    assert x ** 5 == CTX2.poly({(5, 0): 1})
    with pytest.raises(PolyError):
        x ** -1


def test_mismatched_contexts_rejected():
    with pytest.raises(PolyError, match="mismatched ring contexts"):
        CTX2.var("x") * CTX3.var("x")


def test_degree_is_additive_over_products():
    f = parse_poly("x^2*y + z", CTX3)
    g = parse_poly("x - y^3", CTX3)
    assert (f * g).total_degree == f.total_degree + g.total_degree


@given(small_polys(), small_polys(), small_polys())
@settings(max_examples=60, deadline=None)
def test_ring_axioms(f, g, h):
    assert (f + g) + h == f + (g + h)
    assert f + g == g + f
    assert (f * g) * h == f * (g * h)
    assert f * g == g * f
    assert f * (g + h) == f * g + f * h


def test_canonical_uniqueness():
    p = parse_poly("x + y", CTX2)
    q = parse_poly("y + x", CTX2)
    assert p == q and p.terms == q.terms


# -- monomial orders ---------------------------------------------------------------

ALL_ORDERS = [Lex(), DegRevLex(), Elimination(1), TGraded(2)]


def _random_exps(rng, n=3, hi=6):
    return tuple(rng.randrange(hi) for _ in range(n))


@pytest.mark.parametrize("order", ALL_ORDERS, ids=lambda o: o.tag)
def test_order_axioms(order):
    rng = random.Random(20240 + len(order.tag))
    key = order.key
    for _ in range(1000):
        u, v = _random_exps(rng), _random_exps(rng)
        # antisymmetry / totality
        assert (key(u) < key(v)) + (key(v) < key(u)) + (u == v) == 1 or u == v
        # multiplicativity
        w = _random_exps(rng)
        if key(u) < key(v):
            uw = tuple(a + b for a, b in zip(u, w))
            vw = tuple(a + b for a, b in zip(v, w))
            assert key(uw) < key(vw)
    for _ in range(300):
        u, v, w = (_random_exps(rng) for _ in range(3))
        if key(u) < key(v) and key(v) < key(w):
            assert key(u) < key(w)
    # 1 is minimal (well-order over a fixed degree bound)
    one = (0, 0, 0)
    for _ in range(200):
        u = _random_exps(rng)
        assert not key(u) < key(one)


def test_degrevlex_classic_comparison():
    key = DegRevLex().key
    # x*y^2 > x^2*z in degrevlex with x > y > z
    assert key((1, 2, 0)) > key((2, 0, 1))


def test_elimination_block_dominates():
    key = Elimination(1).key
    rng = random.Random(7)
    for _ in range(200):
        u = (rng.randrange(1, 4),) + _random_exps(rng, 2)
        v = (0,) + _random_exps(rng, 2, hi=9)
        assert key(u) > key(v)


def test_tgraded_compares_trailing_block_first():
    key = TGraded(2).key
    # monomial with higher T-degree always wins, regardless of x-part
    assert key((9, 1, 0)) < key((0, 1, 1))
    assert key((0, 2, 0)) == key((0, 2, 0))


def test_order_equality_by_tag():
    assert Elimination(2) == Elimination(2)
    assert Elimination(2) != Elimination(1)
    assert TGraded(2) == TGraded(2, DegRevLex())
