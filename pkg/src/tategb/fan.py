"""Initial ideals across log-radii, sampled.

For a polynomial ideal only finitely many initial ideals LT_r(I) occur as r
ranges over Q^n.  Nothing here computes that finite set exactly.  These helpers
sample r, group samples by the leading-term data they produce, and check
whether a candidate set stays a Gröbner basis on every sample.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, NamedTuple, Sequence, Tuple

from .buchberger import GroebnerBasis, groebner, is_groebner, minimalize
from .coeffs import int_valuation
from .ideals import IdealPresentation
from .order import GREVLEX, MonomialOrder, TateOrder, normalize_radii
from .poly import Polynomial, dehomogenize, homogenize

# (monomial, valuation of the coefficient): the class of a term up to units
CanonicalTerm = Tuple[Tuple[int, ...], int]
LTSet = Tuple[CanonicalTerm, ...]


def canonical_lt_set(gb: GroebnerBasis) -> LTSet:
    G = gb if gb.minimal else minimalize(gb, check=False)
    p = G.order.p
    return tuple(sorted((t.monomial, int_valuation(t.coeff, p)) for t in G.leading_terms()))


def _at(I: IdealPresentation, r) -> IdealPresentation:
    return IdealPresentation(list(I.generators), I.p, tuple(r), I.tiebreak)


def initial_terms(I: IdealPresentation, r) -> LTSet:
    """Minimal generators of LT_r(I) as (monomial, coefficient valuation) pairs."""
    J = _at(I, normalize_radii(r))
    if not J.order.finite:
        raise ValueError("initial terms need finite log-radii")
    return canonical_lt_set(J.groebner())


@dataclass
class FanEntry:
    lt_set: LTSet
    representatives: List[Tuple[Fraction, ...]]
    basis: GroebnerBasis


@dataclass
class FanReport:
    entries: List[FanEntry] = field(default_factory=list)

    def __len__(self):
        return len(self.entries)


def sample_initial_ideals(I: IdealPresentation, samples: Sequence) -> FanReport:
    """Group the sampled log-radii by the initial ideal they produce."""
    samples = [normalize_radii(r) for r in samples]
    if not samples:
        raise ValueError("no samples given")
    groups = {}
    for r in samples:
        J = _at(I, r)
        if not J.order.finite:
            raise ValueError("samples must be finite log-radii")
        gb = J.groebner()
        key = canonical_lt_set(gb)
        if key in groups:
            groups[key].representatives.append(r)
        else:
            groups[key] = FanEntry(key, [r], gb)
    return FanReport([groups[k] for k in sorted(groups)])


class UniversalCheck(NamedTuple):
    ok: bool
    radii: Tuple[Fraction, ...] | None = None
    pair: Tuple[int, int] | None = None
    remainder: Polynomial | None = None

    def __bool__(self):
        return self.ok


def check_universal(
    G: Sequence[Polynomial], samples: Sequence, p: int, tiebreak: MonomialOrder = GREVLEX
) -> UniversalCheck:
    """Is ``G`` a Gröbner basis at every sampled r?  Reports the first failure."""
    G = list(G)
    for r in samples:
        r = normalize_radii(r)
        res = is_groebner(G, TateOrder(r, tiebreak, p))
        if not res:
            return UniversalCheck(False, r, res.pair, res.remainder)
    return UniversalCheck(True)


def candidate_universal_gb(I: IdealPresentation, samples: Sequence) -> List[Polynomial]:
    """Union of the minimal bases found at each sample, without duplicates.

    Any Gröbner basis at r stays one after adding elements of the ideal, so
    the union passes :func:`check_universal` on ``samples``.
    """
    out: List[Polynomial] = []
    seen = set()
    for entry in sample_initial_ideals(I, samples).entries:
        for g in entry.basis.elements:
            if g not in seen:
                seen.add(g)
                out.append(g)
    return out


def parse_grid_axis(text: str) -> List[Fraction]:
    """``"lo:hi:step"`` with rational bounds, both ends included."""
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError(f"grid axis must be lo:hi:step, got {text!r}")
    lo, hi, step = (Fraction(x) for x in parts)
    if step <= 0 or hi < lo:
        raise ValueError(f"empty or malformed grid axis {text!r}")
    vals, v = [], lo
    while v <= hi:
        vals.append(v)
        v += step
    return vals


def grid(axes: Sequence[str], nvars: int | None = None) -> List[Tuple[Fraction, ...]]:
    """Cartesian grid of log-radii; a single axis is reused for every variable."""
    lists = [parse_grid_axis(a) for a in axes]
    if nvars is not None and len(lists) == 1:
        lists = lists * nvars
    if nvars is not None and len(lists) != nvars:
        raise ValueError(f"expected {nvars} grid axes, got {len(lists)}")
    return [tuple(pt) for pt in itertools.product(*lists)]


def groebner_homogenized(F: Sequence[Polynomial], o: TateOrder) -> GroebnerBasis:
    """Gröbner basis at r obtained through the homogenized algebra.

    The generators are homogenized, a basis is computed for the (r, 0)
    order, and the result is dehomogenized and minimalized.
    """
    if o.homogenized:
        raise ValueError("pass the order of the non-homogenized algebra")
    H = [homogenize(f) for f in F]
    gb = groebner(H, o.homogenize())
    G = [dehomogenize(h) for h in gb.elements]
    G = [g for g in G if g]
    return minimalize(GroebnerBasis(G, o, stats=gb.stats), check=False)
