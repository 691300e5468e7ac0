"""Intersections, colons and saturations in Q_2{x, y}.

The one surprise compared with polynomial rings: 1 + 2x is a unit when the
log-radius is 0, so the ideals <x> and <x + 2x^2> coincide.  Their
intersection is spanned by x + 2x^2, whose leading term is x, instead of
the polynomial answer <x^2 + x^3/2>.  At log-radius 2 the term 2x dominates
1, the unit disappears and the leading term becomes 2x^2.
"""

from tategb import IdealPresentation, Polynomial, colon, intersect, parse_polynomial, saturate
from tategb.poly import format_polynomial


def ideal(polys, names, r=0):
    return IdealPresentation([parse_polynomial(s, names) for s in polys], 2, (r,) * len(names))


def show(label, I, names):
    G = I.groebner()
    gens = ", ".join(format_polynomial(g, names) for g in G.elements) or "0"
    lts = ", ".join(format_polynomial(Polynomial.monomial(t.monomial, t.coeff), names) for t in G.leading_terms())
    print(f"{label:<30} <{gens}>   leading terms {{{lts}}}")


X, XY = ["x"], ["x", "y"]
show("<x> ∩ <y>", intersect(ideal(["x"], XY), ideal(["y"], XY)), XY)
show("<x> ∩ <x + 2x^2>   (r = 0)", intersect(ideal(["x"], X), ideal(["x + 2*x^2"], X)), X)
show("<x> ∩ <x + 2x^2>   (r = 2)", intersect(ideal(["x"], X, 2), ideal(["x + 2*x^2"], X, 2)), X)
show("<x^2> : x", colon(ideal(["x^2"], X), parse_polynomial("x", X)), X)
show("<x^2 y, x y^3> : <x>", colon(ideal(["x^2*y", "x*y^3"], XY), ideal(["x"], XY)), XY)
show("<x^2 y> : x^inf", saturate(ideal(["x^2*y"], XY), parse_polynomial("x", XY), cross_check=True), XY)
