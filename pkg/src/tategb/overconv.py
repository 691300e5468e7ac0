"""Overconvergent reduction: dividing series of K{X; s} inside K{X; r}, s >= r.

The écarts here measure how far the r-leading term of ``f`` is from the
s-dominant part of ``f``.  Choosing reducers with small écarts keeps
``val_s`` of the running remainder from ever decreasing, so a reduction
either stops or its remainder tends to zero in K{X; s}.  The second case is
caught by a valuation budget and a step cap.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Sequence, Tuple, Union

from .buchberger import GroebnerBasis, buchberger_loop
from .coeffs import INF
from .mora import ReductionLimit, ReductionTimeout, WnfResult, _divides, _shifted_ecart2, ecart1
from .order import GREVLEX, MonomialOrder, TateOrder, Term, normalize_radii
from .poly import Polynomial, deg_sr, monomial_quotient, valuation_s

DEFAULT_BUDGET_MARGIN = 50
DEFAULT_STEP_CAP = 10**6


@dataclass(frozen=True)
class OverconvParams:
    s: Tuple[Fraction, ...]
    r: Tuple[Fraction, ...]
    p: int = 2
    tiebreak: MonomialOrder = GREVLEX
    budget: Fraction | None = None
    step_cap: int = DEFAULT_STEP_CAP

    def __post_init__(self):
        s, r = normalize_radii(self.s), normalize_radii(self.r)
        if len(s) != len(r):
            raise ValueError("s and r have different lengths")
        if INF in s or INF in r:
            raise ValueError("overconvergent reduction needs finite log-radii")
        if any(a < b for a, b in zip(s, r)):
            raise ValueError("s must dominate r componentwise")
        if self.step_cap <= 0:
            raise ValueError("step cap must be positive")
        if self.budget is not None:
            if self.budget in (INF, -INF):
                raise ValueError("budget must be finite")
            object.__setattr__(self, "budget", Fraction(self.budget))
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "r", r)

    @property
    def order(self) -> TateOrder:
        return TateOrder(self.r, self.tiebreak, self.p)

    @property
    def degenerate(self) -> bool:
        return self.s == self.r


def _ecarts(f: Polynomial, P: OverconvParams) -> Tuple[Fraction, Fraction]:
    key = ("ecart_sr", P.s, P.r, P.p, P.tiebreak)
    e = f._cache.get(key)
    if e is None:
        if not f:
            raise ValueError("écart of the zero polynomial")
        lt = f.leading_term(P.order)
        lt_poly = Polynomial._raw({lt.monomial: lt.coeff}, f.nvars)
        e0 = valuation_s(lt_poly, P.s, P.p) - valuation_s(f, P.s, P.p)
        e1 = deg_sr(f, P.s, P.r, P.p) - deg_sr(lt_poly, P.s, P.r, P.p)
        e = f._cache[key] = (e0, e1)
    return e


def ecart_sr0(f: Polynomial, P: OverconvParams) -> Fraction:
    """val_s(LT_r(f)) - val_s(f)."""
    return _ecarts(f, P)[0]


def ecart_sr1(f: Polynomial, P: OverconvParams) -> Fraction:
    """deg_{s,r}(f) - deg_{s,r}(LT_r(f))."""
    return _ecarts(f, P)[1]


@dataclass
class TraceStep:
    """State of the remainder before one reduction step.

    ``hypotheses`` says whether the chosen reducer had both écarts at most
    those of the remainder, the situation in which val_s cannot drop.
    """

    val_s: Fraction
    deg_sr: Fraction
    ecart0: Fraction
    ecart1: Fraction
    hypotheses: bool


@dataclass
class Remainder:
    polynomial: Polynomial
    result: WnfResult
    trace: List[TraceStep] = field(default_factory=list)

    @property
    def is_zero(self) -> bool:
        return not self.polynomial


@dataclass
class ReducedToZeroAtBudget:
    """The remainder was still nonzero but its s-valuation left the budget.

    ``partial`` holds the certificate at the stopping step, an identity
    ``unit*f = sum(cofactors[i]*G[i]) + last`` with a nonzero ``last``.
    """

    steps: int
    final_val_s: Fraction
    budget: Fraction
    reason: str
    last: Polynomial
    partial: WnfResult
    trace: List[TraceStep] = field(default_factory=list)

    is_zero = True


OverconvOutcome = Union[Remainder, ReducedToZeroAtBudget]


def _non_decreasing(vals: Sequence[Fraction]) -> bool:
    return all(a <= b for a, b in zip(vals, vals[1:]))


def wnf_overconv(
    f: Polynomial,
    G: Sequence[Polynomial],
    P: OverconvParams,
    *,
    track: bool = True,
    deadline: float | None = None,
) -> OverconvOutcome:
    """Overconvergent weak normal form of ``f`` modulo ``G``.

    Reducers are ranked by (Ecart_{s,r,0}, Ecart_{s,r,1}, position in T).
    When s = r both écarts vanish, and the selection and the T-update
    rule of :func:`tategb.mora.wnf_with_cofactors` are used instead, so the
    two functions agree exactly in that case.
    """
    G = list(G)
    o = P.order
    n = f.nvars
    if len(P.s) != n:
        raise ValueError(f"log-radii have length {len(P.s)}, ring has {n} variables")
    for g in G:
        if not g:
            raise ValueError("zero polynomial among the divisors")
        if g.nvars != n:
            raise ValueError("divisor lives in a different ring")
    degenerate = P.degenerate
    budget = P.budget
    if budget is None and f:
        budget = valuation_s(f, P.s, P.p) + DEFAULT_BUDGET_MARGIN

    zero = Polynomial.zero(n)
    mu = Polynomial.constant(1, n) if track else None
    u = [zero] * len(G) if track else None
    recorded = []
    T = list(G)
    origin = [("g", i) for i in range(len(G))]
    lms = [g.leading_term(o).monomial for g in G]
    trace: List[TraceStep] = []
    res = WnfResult(f, mu, u)
    res.max_t_size = len(T)

    h = f
    while h:
        vh = valuation_s(h, P.s, P.p)
        if vh > budget:
            res.remainder, res.unit, res.cofactors = h, mu, u
            return ReducedToZeroAtBudget(
                res.steps, vh, budget, "valuation budget exceeded", h, res, trace
            )
        lt = h.leading_term(o)
        res.lt_trace.append(lt)
        mh = lt.monomial
        best = None
        for idx, lm in enumerate(lms):
            if not _divides(lm, mh):
                continue
            g = T[idx]
            shift = monomial_quotient(mh, lm)
            if degenerate:
                k = (ecart1(g, o), _shifted_ecart2(h, g, shift), idx)
            else:
                k = (*_ecarts(g, P), idx)
            if best is None or k < best[0]:
                best = (k, idx, shift)
        if best is None:
            break
        if res.steps >= P.step_cap:
            tail = [t.val_s for t in trace[len(trace) // 2:]] + [vh]
            res.remainder, res.unit, res.cofactors = h, mu, u
            if _non_decreasing(tail):
                return ReducedToZeroAtBudget(
                    res.steps, vh, budget, "step cap reached", h, res, trace
                )
            raise ReductionLimit(
                f"step cap {P.step_cap} reached without valuation growth"
            )
        if deadline is not None and time.perf_counter() > deadline:
            raise ReductionTimeout(f"deadline passed after {res.steps} steps", trace)
        k, idx, shift = best
        g = T[idx]
        g0, g1 = _ecarts(g, P)
        h0, h1 = _ecarts(h, P)
        trace.append(
            TraceStep(vh, deg_sr(h, P.s, P.r, P.p), h0, h1, g0 <= h0 and g1 <= h1)
        )
        if degenerate:
            grow = k[0] > ecart1(h, o) or k[1] > 0
        else:
            grow = g0 > h0 or g1 > h1
        if grow:
            T.append(h)
            origin.append(("h", len(recorded)))
            lms.append(mh)
            recorded.append((mu, u))
            res.max_t_size = max(res.max_t_size, len(T))
        c = lt.coeff / g.leading_term(o).coeff
        kind, m = origin[idx]
        res.divisor_log.append((res.steps, (kind, m), Term(c, shift)))
        h = h.sub_term_multiple(c, shift, g)
        if track:
            if kind == "g":
                u = list(u)
                u[m] = u[m] + Polynomial._raw({shift: c}, n)
            else:
                mu_m, u_m = recorded[m]
                mu = mu.sub_term_multiple(c, shift, mu_m)
                u = [ui.sub_term_multiple(c, shift, uim) for ui, uim in zip(u, u_m)]
        res.steps += 1

    res.remainder, res.unit, res.cofactors = h, mu, u
    return Remainder(h, res, trace)


def groebner_overconv(F: Sequence[Polynomial], P: OverconvParams) -> GroebnerBasis:
    """Buchberger completion driven by :func:`wnf_overconv`.

    S-polynomials whose reduction leaves the valuation budget count as zero
    reductions; they are listed in ``stats["budget_events"]``.
    """
    events = []

    def reduce(f, G):
        out = wnf_overconv(f, G, P, track=False)
        if isinstance(out, ReducedToZeroAtBudget):
            events.append(
                {"steps": out.steps, "val_s": str(out.final_val_s), "reason": out.reason}
            )
            res = out.partial
            res.remainder = Polynomial.zero(f.nvars)
            return res
        return out.result

    gb = buchberger_loop(F, P.order, reduce)
    gb.stats["budget_events"] = events
    return gb
