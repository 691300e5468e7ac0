"""Écarts and Mora's weak normal form in Tate algebras.

Plain head reduction does not terminate in K{X; r}: reducing ``X`` by
``X - 2X^2`` at r = 0 over Q_2 produces ``2X^2, 4X^3, ...`` forever.  Mora's
trick is to also reduce by earlier intermediate remainders, which amounts to
dividing a multiple ``mu*f`` of ``f`` where ``mu`` is a unit of K{X; r}.
Reducers are picked by minimal écart, and all computations stay polynomial.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Sequence, Tuple

from .order import TateOrder, Term
from .poly import Polynomial, gauss_valuation_poly, monomial_quotient


def ecart1(f: Polynomial, o: TateOrder) -> int:
    """deg(f) - deg(LM_r(f))."""
    key = ("ecart1", o)
    e = f._cache.get(key)
    if e is None:
        if not f:
            raise ValueError("écart of the zero polynomial")
        e = f._cache[key] = f.degree() - sum(f.leading_term(o).monomial)
    return e


def ecart2(h: Polynomial, g: Polynomial) -> int:
    """Number of monomials of ``g`` that do not occur in ``h``."""
    if h.nvars != g.nvars:
        raise ValueError("polynomials live in different rings")
    hs = h._terms
    return sum(1 for m in g._terms if m not in hs)


def _shifted_ecart2(h: Polynomial, g: Polynomial, shift) -> int:
    hs = h._terms
    if not any(shift):
        return sum(1 for m in g._terms if m not in hs)
    return sum(
        1 for m in g._terms if tuple(a + b for a, b in zip(m, shift)) not in hs
    )


def _divides(a, b) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


@dataclass
class WnfResult:
    """Weak normal form with its certificate ``unit*f = sum(cofactors[i]*G[i]) + remainder``.

    ``divisor_log`` holds one ``(step, divisor, term)`` entry per reduction,
    where ``divisor`` is ``("g", i)`` for the i-th input divisor or
    ``("h", m)`` for the m-th recorded intermediate remainder, and ``term``
    is the multiplier ``c*X^v`` used.  ``lt_trace`` lists the leading term
    of every intermediate remainder.
    """

    remainder: Polynomial
    unit: Polynomial | None
    cofactors: List[Polynomial] | None
    steps: int = 0
    divisor_log: List[Tuple[int, Tuple[str, int], Term]] = field(default_factory=list)
    lt_trace: List[Term] = field(default_factory=list)
    max_t_size: int = 0


class ReductionLimit(RuntimeError):
    """Raised when a safety step ceiling is hit (never expected for Mora)."""


class ReductionTimeout(ReductionLimit):
    """Raised when a wall-clock deadline passes during a reduction.

    ``trace`` holds whatever per-step record the reducer kept so far.
    """

    def __init__(self, message: str = "", trace=None):
        super().__init__(message)
        self.trace = list(trace or [])


def _check_divisors(f: Polynomial, G: Sequence[Polynomial]):
    for g in G:
        if not g:
            raise ValueError("zero polynomial among the divisors")
        if g.nvars != f.nvars:
            raise ValueError("divisor lives in a different ring")


def wnf_with_cofactors(
    f: Polynomial,
    G: Sequence[Polynomial],
    o: TateOrder,
    *,
    track: bool = True,
    max_steps: int | None = None,
    deadline: float | None = None,
) -> WnfResult:
    """Mora's weak normal form of ``f`` modulo ``G``, with cofactors.

    Among the divisors whose leading monomial divides LM(h), the one with the
    smallest Ecart_1, then smallest Ecart_2 against the shifted divisor, then
    smallest position in T is used.  The current remainder joins T when that
    divisor has a bigger Ecart_1 than h or a positive Ecart_2.

    With ``track=False`` the unit and the cofactors are not maintained
    (``unit`` and ``cofactors`` are then ``None``); the remainder is the same.
    ``deadline`` is an absolute :func:`time.perf_counter` value.
    """
    G = list(G)
    _check_divisors(f, G)
    n = f.nvars
    zero = Polynomial.zero(n)
    mu = Polynomial.constant(1, n) if track else None
    u = [zero] * len(G) if track else None
    recorded: List[Tuple[Polynomial, List[Polynomial]]] = []

    T: List[Polynomial] = list(G)
    origin: List[Tuple[str, int]] = [("g", i) for i in range(len(G))]
    lms = [g.leading_term(o).monomial for g in G]

    h = f
    result = WnfResult(h, mu, u)
    result.max_t_size = len(T)
    while h:
        lt = h.leading_term(o)
        result.lt_trace.append(lt)
        mh = lt.monomial
        best = None
        for idx, lm in enumerate(lms):
            if not _divides(lm, mh):
                continue
            g = T[idx]
            shift = monomial_quotient(mh, lm)
            k = (ecart1(g, o), _shifted_ecart2(h, g, shift), idx)
            if best is None or k < best[0]:
                best = (k, idx, shift)
        if best is None:
            break
        if max_steps is not None and result.steps >= max_steps:
            raise ReductionLimit(f"no weak normal form after {max_steps} steps")
        if deadline is not None and time.perf_counter() > deadline:
            raise ReductionTimeout(f"deadline passed after {result.steps} steps")
        (e1g, e2, _), idx, shift = best
        g = T[idx]
        if e1g > ecart1(h, o) or e2 > 0:
            T.append(h)
            origin.append(("h", len(recorded)))
            lms.append(mh)
            recorded.append((mu, u))
            result.max_t_size = max(result.max_t_size, len(T))
        c = lt.coeff / g.leading_term(o).coeff
        kind, m = origin[idx]
        result.divisor_log.append((result.steps, (kind, m), Term(c, shift)))
        h = h.sub_term_multiple(c, shift, g)
        if track:
            if kind == "g":
                u = list(u)
                u[m] = u[m] + Polynomial._raw({shift: c}, n)
            else:
                mu_m, u_m = recorded[m]
                mu = mu.sub_term_multiple(c, shift, mu_m)
                u = [ui.sub_term_multiple(c, shift, uim) for ui, uim in zip(u, u_m)]
        result.steps += 1

    result.remainder = h
    result.unit = mu
    result.cofactors = u
    return result


def wnf(f: Polynomial, G: Sequence[Polynomial], o: TateOrder, **kw) -> Polynomial:
    """Remainder of :func:`wnf_with_cofactors` without cofactor bookkeeping."""
    return wnf_with_cofactors(f, G, o, track=False, **kw).remainder


def certificate_problems(
    res: WnfResult, f: Polynomial, G: Sequence[Polynomial], o: TateOrder
) -> List[str]:
    """Independently re-check a WNF certificate; return the violated properties."""
    problems = []
    if res.unit is None or res.cofactors is None:
        return ["no certificate was tracked"]
    G = list(G)
    rhs = res.remainder
    for ui, gi in zip(res.cofactors, G):
        rhs = rhs + ui * gi
    if res.unit * f != rhs:
        problems.append("unit*f != sum(u_i*g_i) + h")
    defect = res.unit - 1
    if defect and not gauss_valuation_poly(defect, o) > 0:
        problems.append("val_r(unit - 1) <= 0")
    if f:
        key_f = o.key(*f.leading_term(o))
        ties = 0
        for ui, gi in zip(res.cofactors, G):
            prod = ui * gi
            if not prod:
                continue
            k = o.key(*prod.leading_term(o))
            if k > key_f:
                problems.append("LT(u_i*g_i) > LT(f)")
            elif k == key_f:
                ties += 1
        if ties > 1:
            problems.append("LT(u_i*g_i) = LT(f) for more than one i")
    if res.remainder:
        mh = res.remainder.leading_term(o).monomial
        if any(_divides(g.leading_term(o).monomial, mh) for g in G):
            problems.append("LT(remainder) is divisible by some LT(g_i)")
    return problems
