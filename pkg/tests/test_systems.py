import json
from pathlib import Path

import pytest

from tategb.order import TateOrder
from tategb.poly import format_polynomial, parse_polynomial
from tategb.systems import cyclic, cyclic_varnames, katsura, katsura_varnames, system

GOLDEN = Path(__file__).parent / "data" / "systems_golden.json"


def test_katsura_shapes():
    F = katsura(2)
    assert len(F) == 3 and F[0].nvars == 3
    assert parse_polynomial("x0 + 2*x1 + 2*x2 - 1", katsura_varnames(2)) in F
    assert len(katsura(3)) == 4 and katsura(3)[0].nvars == 4
    assert len(katsura(6)) == 7 and katsura(6)[0].nvars == 7
    for f in katsura(4):
        assert all(c.denominator == 1 for _, c in f.items())


def test_cyclic_shapes():
    names = cyclic_varnames(3)
    assert cyclic(2) == [parse_polynomial(s, cyclic_varnames(2)) for s in ["x1 + x2", "x1*x2 - 1"]]
    assert cyclic(3) == [parse_polynomial(s, names) for s in ["x1+x2+x3", "x1*x2+x2*x3+x3*x1", "x1*x2*x3-1"]]
    assert len(cyclic(5)) == 5


def test_bad_sizes():
    with pytest.raises(ValueError):
        katsura(1)
    with pytest.raises(ValueError):
        system("katsura:x")
    with pytest.raises(ValueError):
        system("noether:3")


def test_golden_file():
    golden = json.loads(GOLDEN.read_text())
    for key, polys in golden.items():
        F, names = system(key)
        assert [format_polynomial(f, names) for f in F] == polys


def test_katsura6_has_three_linear_leading_monomials():
    F, names = system("katsura:6")
    o = TateOrder((0,) * 7, p=2)
    lms = {f.leading_term(o).monomial for f in F}
    linear = [m for m in lms if sum(m) == 1]
    assert len(linear) >= 3
