"""Why plain division loops in a Tate algebra, and how Mora's reduction stops.

Over Q_2 with log-radius 0 the leading term of X - 2X^2 is X: the quadratic
term has a larger coefficient valuation.  Dividing X by it with ordinary
head reduction replaces X by 2X^2, then 4X^3, and so on forever, although
the remainders do converge to 0 in the Tate algebra.
"""

from tategb import TateOrder, parse_polynomial, wnf_with_cofactors, format_polynomial
from tategb.poly import gauss_valuation_poly

names = ["x"]
o = TateOrder((0,), p=2)
f = parse_polynomial("x", names)
g = parse_polynomial("x - 2*x^2", names)

print("Naive head reduction of x by x - 2x^2:")
h = f
for step in range(6):
    lt = h.leading_term(o)
    glt = g.leading_term(o)
    shift = tuple(a - b for a, b in zip(lt.monomial, glt.monomial))
    h = h.sub_term_multiple(lt.coeff / glt.coeff, shift, g)
    print(f"  step {step + 1}: {format_polynomial(h, names):>10}   valuation {gauss_valuation_poly(h, o)}")
print("  ... the valuation keeps rising and the loop never ends.\n")

res = wnf_with_cofactors(f, [g], o)
print("Mora's weak normal form keeps earlier remainders as extra reducers:")
print(f"  remainder  {format_polynomial(res.remainder, names) or '0'}")
print(f"  steps      {res.steps}")
print(f"  unit       {format_polynomial(res.unit, names)}   (1 - 2x is invertible in the Tate algebra)")
print(f"  cofactor   {format_polynomial(res.cofactors[0], names)}")
print("  so (1 - 2x) * x = 1 * (x - 2x^2): x lies in the ideal.")
