from fractions import Fraction

import pytest

from tategb.coeffs import INF, NEG_INF
from tategb.order import (
    GREVLEX,
    LEX,
    MonomialOrder,
    TateOrder,
    Term,
    compare_terms,
    compare_terms_homog,
    gauss_valuation_term,
    parse_order,
    parse_radii,
    term_divides,
)


def T(c, *m):
    return Term(Fraction(c), tuple(m))


def test_gauss_valuation_examples():
    assert gauss_valuation_term(T(4, 2), TateOrder((0,), p=2)) == 2
    assert gauss_valuation_term(T(2, 3), TateOrder((1,), p=2)) == -2
    assert gauss_valuation_term(T(3, 1, 1), TateOrder((INF, 0), p=2)) == NEG_INF


def test_compare_terms_examples():
    o0 = TateOrder((0,), p=2)
    assert compare_terms(T(1, 1), T(2, 2), o0) == 1
    assert compare_terms(T(1, 1), T(1, 1), o0) == 0
    o1 = TateOrder((1,), p=2)
    # val_1(2X^2) = -1 = val_1(X); grevlex breaks the tie towards X^2
    assert compare_terms(T(2, 2), T(1, 1), o1) == 1
    assert compare_terms(T(2, 2), T(1, 1), TateOrder((Fraction(1, 2),), p=2)) == -1


def test_same_monomial_different_unit_is_equal():
    o = TateOrder((0,), p=3)
    assert compare_terms(T(2, 1), T(5, 1), o) == 0
    assert compare_terms(T(3, 1), T(5, 1), o) == -1


def test_compare_terms_homogenized():
    o = TateOrder((0,), p=2)
    # X*t against X^2 both have valuation 0 and degree 2: the X-parts decide
    assert compare_terms_homog(T(1, 1, 1), T(1, 2, 0), o) == -1
    assert compare_terms_homog(T(2, 2, 0), T(1, 1, 1), o) == -1
    assert compare_terms_homog(T(1, 1, 1), T(1, 1, 1), o) == 0


def test_term_divides():
    assert term_divides(T(3, 1, 0), T(5, 2, 1))
    assert not term_divides(T(1, 2), T(1, 1))
    assert term_divides(T(7, 0, 0), T(1, 3, 4))


def test_infinite_radius_dominates():
    o = TateOrder((INF, 0), p=2)
    assert compare_terms(T(1024, 1, 0), T(1, 0, 5), o) == 1
    assert compare_terms(T(1, 2, 0), T(1, 1, 3), o) == 1


def test_monomial_orders():
    assert LEX.compare((1, 0), (0, 5)) == 1
    assert GREVLEX.compare((1, 0), (0, 5)) == -1
    # grevlex on equal degree: smaller last exponent wins
    assert GREVLEX.compare((1, 1, 0), (1, 0, 1)) == 1
    b = parse_order("block(1;grevlex;lex)")
    assert b == MonomialOrder("block", 1, GREVLEX, LEX)
    assert b.compare((1, 0, 0), (0, 9, 9)) == 1
    assert str(b) == "block(1;grevlex;lex)"
    with pytest.raises(ValueError):
        parse_order("revlex")


def test_parse_radii():
    assert parse_radii("0", 3) == (0, 0, 0)
    assert parse_radii("inf,1/2", 2) == (INF, Fraction(1, 2))
    with pytest.raises(ValueError):
        parse_radii("0,zz", 2)
    with pytest.raises(ValueError):
        parse_radii("0,1", 3)
    with pytest.raises(ValueError):
        TateOrder((NEG_INF,))


def test_wrong_arity_rejected():
    with pytest.raises(ValueError):
        compare_terms(T(1, 1), T(1, 1, 1), TateOrder((0,)))


def test_order_is_total_on_random_terms():
    import random

    rng = random.Random(7)
    o = TateOrder((Fraction(1, 2), Fraction(-1, 3)), p=3)
    terms = [T(rng.choice([1, 3, 9, Fraction(1, 3), 2]), rng.randint(0, 3), rng.randint(0, 3)) for _ in range(40)]
    for a in terms:
        for b in terms:
            assert compare_terms(a, b, o) == -compare_terms(b, a, o)
    keys = sorted(terms, key=lambda t: o.key(*t))
    for a, b in zip(keys, keys[1:]):
        assert compare_terms(a, b, o) <= 0
