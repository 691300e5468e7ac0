import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from tategb.order import TateOrder, Term
from tategb.poly import (
    ParseError,
    Polynomial,
    dehomogenize,
    dehomogenize_term,
    deg_sr,
    exact_divide,
    format_polynomial,
    gauss_valuation_poly,
    homogenize,
    leading_term,
    parse_polynomial,
    spoly,
    support_s,
)

from _gen import random_homogeneous, random_poly

X = ["x"]
XY = ["x", "y"]


def P(text, names=X):
    return parse_polynomial(text, names)


def test_leading_term_examples():
    f = P("x + 2*x^2")
    assert leading_term(f, TateOrder((0,), p=2)) == Term(1, (1,))
    assert leading_term(f, TateOrder((1,), p=2)) == Term(2, (2,))
    assert leading_term(P("5"), TateOrder((0,), p=7)) == Term(5, (0,))


def test_gauss_valuation_poly():
    assert gauss_valuation_poly(P("x + 2*x^2"), TateOrder((0,), p=2)) == 0
    assert gauss_valuation_poly(Polynomial.zero(1), TateOrder((0,))) == float("inf")
    assert gauss_valuation_poly(P("4 + 2*x"), TateOrder((1,), p=2)) == 0


def test_spoly():
    o = TateOrder((0,), p=2)
    f = P("x + 2*x^2")
    assert not spoly(f, f, o)
    s = spoly(f, P("x"), o)
    assert s == P("2*x^2")
    assert not spoly(P("x^2", XY), P("y^2", XY), TateOrder((0, 0)))
    # leading terms cancel
    g, h = P("x*y - 3*y", XY), P("x^2 + 2*y", XY)
    o2 = TateOrder((0, 0), p=3)
    s = spoly(g, h, o2)
    lcm = (2, 1)
    assert s.coefficient(lcm) == 0


def test_homogenize_examples():
    t = ["x", "y", "t"]
    assert homogenize(P("x^2 + y", XY)) == P("x^2 + y*t", t)
    assert not homogenize(Polynomial.zero(2))
    assert homogenize(P("3 + x")) == P("3*t + x", ["x", "t"])
    assert dehomogenize(P("x^2 + y*t", t)) == P("x^2 + y", XY)
    assert dehomogenize(P("x*t + x", ["x", "t"])) == P("2*x")


def test_support_and_deg_sr():
    f = P("x + 2*x^2")
    assert support_s(f, (1,), 2) == {(1,), (2,)}
    assert support_s(f, (0,), 2) == {(1,)}
    assert support_s(P("7"), (3,), 2) == {(0,)}
    assert deg_sr(f, (1,), (0,), 2) == 2
    assert deg_sr(P("7"), (1,), (0,), 2) == 0
    assert deg_sr(f, (1,), (1,), 2) == 0


def test_parse_and_format():
    f = P("-3/8*x*y^2", XY)
    assert f == Polynomial({(1, 2): Fraction(-3, 8)}, 2)
    assert P("x + 2*x^2") == Polynomial({(1,): 1, (2,): 2}, 1)
    assert P("2x**2 - x*x") == P("x^2")
    with pytest.raises(ParseError) as exc:
        P("x +")
    assert "column" in str(exc.value)
    with pytest.raises(ValueError):
        P("z")
    g = P("x^3 - 1/2*x*y + 7", XY)
    assert P(format_polynomial(g, XY), XY) == g


def test_exact_divide():
    a = P("x^3*y - x*y^3", XY)
    assert exact_divide(a, P("x + y", XY)) == P("x^2*y - x*y^2", XY)
    with pytest.raises(ArithmeticError):
        exact_divide(P("x^2 + 1", XY), P("x", XY))


def test_arithmetic_ring_axioms():
    rng = random.Random(3)
    for _ in range(50):
        a, b, c = (random_poly(rng, 3) for _ in range(3))
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)
        assert a - a == Polynomial.zero(3)
        assert a * b == b * a


def test_homogenize_round_trip_random():
    rng = random.Random(5)
    for _ in range(100):
        f = random_poly(rng, 3)
        h = homogenize(f)
        assert h.is_homogeneous() and dehomogenize(h) == f


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([0, Fraction(1, 2), Fraction(-1, 3), 2]))
def test_homogenization_commutes_with_leading_term(seed, r):
    rng = random.Random(seed)
    o = TateOrder((r, r), p=rng.choice([2, 3, 5]))
    oh = o.homogenize()
    f = random_poly(rng, 2, p=o.p)
    assert dehomogenize_term(homogenize(f).leading_term(oh)) == f.leading_term(o)
    h = random_homogeneous(rng, 3, rng.randint(0, 4), p=o.p)
    assert dehomogenize_term(h.leading_term(oh)) == dehomogenize(h).leading_term(o)
