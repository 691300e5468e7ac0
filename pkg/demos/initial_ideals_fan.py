"""How the initial ideal of <x + 2x^2> changes with the log-radius.

For small radii the linear term dominates and LT = x; once the radius passes
1 the quadratic term 2x^2 takes over.  Sampling the radius finds both cells,
and the union of the bases found is a Gröbner basis on a finer grid too.
"""

from fractions import Fraction

from tategb import IdealPresentation, candidate_universal_gb, check_universal, parse_polynomial
from tategb.fan import grid, sample_initial_ideals
from tategb.poly import format_monomial, format_polynomial

names = ["x"]
I = IdealPresentation([parse_polynomial("x + 2*x^2", names)], 2, (0,))
samples = [(Fraction(k, 2),) for k in range(-2, 6)]
for entry in sample_initial_ideals(I, samples).entries:
    lts = ", ".join(f"{format_monomial(m, names)} (val {v})" for m, v in entry.lt_set)
    radii = " ".join(str(r[0]) for r in entry.representatives)
    print(f"LT {{{lts}}} for r in {radii}")

G = candidate_universal_gb(I, samples)
print("candidate:", ", ".join(format_polynomial(g, names) for g in G))
fine = grid(["-1:5/2:1/8"])
print(f"still a Gröbner basis on {len(fine)} grid points:", bool(check_universal(G, fine, 2)))
