"""Reducing in K{X; r} while watching convergence on the larger disc of radius s.

With s > r the remainder's s-valuation never drops on steps that follow the
écart rule.  A reduction either stops with a remainder or its s-valuation
leaves the budget, which is reported as a reduction to zero.
"""

from fractions import Fraction

from tategb import OverconvParams, ReducedToZeroAtBudget, parse_polynomial, wnf_overconv
from tategb.poly import format_polynomial

names = ["x"]
f = parse_polynomial("x", names)
G = [parse_polynomial("x - 2*x^2", names)]
for s in (Fraction(0), Fraction(1, 2), Fraction(1)):
    P = OverconvParams((s,), (Fraction(0),), p=2, budget=20)
    out = wnf_overconv(f, G, P)
    if isinstance(out, ReducedToZeroAtBudget):
        print(f"s = {s}: zero at budget after {out.steps} steps (val_s reached {out.final_val_s})")
    else:
        rem = format_polynomial(out.polynomial, names) or "0"
        print(f"s = {s}: remainder {rem} after {out.result.steps} steps")
    for k, t in enumerate(out.trace[:4]):
        print(f"    step {k}: val_s {t.val_s}, deg_sr {t.deg_sr}, écarts ({t.ecart0}, {t.ecart1})")
    if len(out.trace) > 4:
        print(f"    ... {len(out.trace) - 4} more steps, val_s still rising")
