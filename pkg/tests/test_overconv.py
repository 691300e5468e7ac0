import random
from fractions import Fraction

import pytest

from tategb.buchberger import groebner, minimalize
from tategb.mora import ReductionLimit, certificate_problems, wnf
from tategb.order import TateOrder
from tategb.overconv import (
    OverconvParams,
    ReducedToZeroAtBudget,
    Remainder,
    ecart_sr0,
    ecart_sr1,
    groebner_overconv,
    wnf_overconv,
)
from tategb.poly import parse_polynomial

from _gen import random_poly

X, XY = ["x"], ["x", "y"]


def P(text, names=X):
    return parse_polynomial(text, names)


def test_ecart_examples():
    Pr = OverconvParams((1,), (0,), p=2)
    f = P("x + 2*x^2")
    assert ecart_sr0(f, Pr) == 0
    assert ecart_sr1(f, Pr) == 1
    assert ecart_sr0(P("5*x^3"), Pr) == 0 and ecart_sr1(P("5*x^3"), Pr) == 0
    same = OverconvParams((Fraction(1, 2),), (Fraction(1, 2),), p=2)
    assert ecart_sr0(f, same) == 0 and ecart_sr1(f, same) == 0


def test_params_validation():
    with pytest.raises(ValueError):
        OverconvParams((0,), (1,))
    with pytest.raises(ValueError):
        OverconvParams((1,), (0,), step_cap=0)
    with pytest.raises(ValueError):
        OverconvParams((float("inf"),), (0,))


def test_looping_example():
    Pr = OverconvParams((1,), (0,), p=2, budget=20)
    out = wnf_overconv(P("x"), [P("x - 2*x^2")], Pr)
    assert isinstance(out, (Remainder, ReducedToZeroAtBudget))
    if isinstance(out, Remainder):
        assert out.is_zero
    assert not wnf(P("x"), [P("x - 2*x^2")], TateOrder((0,), p=2))


def test_trivial_cases():
    Pr = OverconvParams((1, 1), (0, 0), p=3)
    f = P("x + y", XY)
    out = wnf_overconv(f, [], Pr)
    assert isinstance(out, Remainder) and out.polynomial == f
    out = wnf_overconv(P("x^2*y", XY), [P("x^2", XY)], Pr)
    assert out.is_zero and out.result.steps == 1


def test_budget_branch():
    # a tiny budget forces the valuation exit
    Pr = OverconvParams((1,), (0,), p=2, budget=-5)
    out = wnf_overconv(P("x"), [P("x - 2*x^2")], Pr)
    assert isinstance(out, ReducedToZeroAtBudget) and out.reason == "valuation budget exceeded"


def test_remainder_certificate():
    Pr = OverconvParams((1,), (0,), p=2)
    f, g = P("x"), P("x - 2*x^2")
    out = wnf_overconv(f, [g], Pr)
    assert isinstance(out, Remainder)
    assert certificate_problems(out.result, f, [g], Pr.order) == []


def test_groebner_overconv_examples():
    Pr = OverconvParams((1,), (0,), p=2)
    assert groebner_overconv([P("x^2")], Pr).elements == [P("x^2")]
    gb = minimalize(groebner_overconv([P("x + 2*x^2")], Pr))
    assert [t.monomial for t in gb.leading_terms()] == [(1,)]


def test_degenerate_case_agrees_with_mora():
    rng = random.Random(8)
    for _ in range(80):
        n = rng.randint(1, 2)
        p = rng.choice([2, 3])
        r = tuple(rng.choice([0, Fraction(1, 2)]) for _ in range(n))
        o = TateOrder(r, p=p)
        f = random_poly(rng, n, 3, p=p)
        G = [random_poly(rng, n, 3, p=p) for _ in range(2)]
        try:
            expected = wnf(f, G, o, max_steps=300)
        except ReductionLimit:
            continue
        out = wnf_overconv(f, G, OverconvParams(r, r, p=p))
        assert isinstance(out, Remainder) and out.polynomial == expected


def test_degenerate_groebner_matches():
    o = TateOrder((0, 0), p=2)
    F = [P("x^2 - 2*y", XY), P("x*y + 4", XY)]
    a = minimalize(groebner(F, o))
    b = minimalize(groebner_overconv(F, OverconvParams((0, 0), (0, 0), p=2)))
    assert sorted(t.monomial for t in a.leading_terms()) == sorted(t.monomial for t in b.leading_terms())
