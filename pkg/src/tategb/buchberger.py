"""Buchberger's algorithm over K{X; r} with Mora reductions."""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, List, NamedTuple, Sequence, Tuple

from .coeffs import int_valuation
from .mora import ReductionTimeout, WnfResult, wnf_with_cofactors
from .order import TateOrder, Term
from .poly import Polynomial, spoly

Reducer = Callable[[Polynomial, Sequence[Polynomial]], WnfResult]


@dataclass
class GroebnerBasis:
    elements: List[Polynomial]
    order: TateOrder
    minimal: bool = False
    stats: dict = field(default_factory=dict)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def leading_terms(self) -> List[Term]:
        return [g.leading_term(self.order) for g in self.elements]

    def minimal_view(self) -> "GroebnerBasis":
        return self if self.minimal else minimalize(self, check=False)


class GroebnerCheck(NamedTuple):
    """Outcome of :func:`is_groebner`; truthy iff the criterion holds."""

    ok: bool
    pair: Tuple[int, int] | None = None
    remainder: Polynomial | None = None

    def __bool__(self):
        return self.ok


def _validate(F: Sequence[Polynomial]) -> List[Polynomial]:
    F = list(F)
    if not F:
        raise ValueError("need at least one generator")
    if any(not f for f in F):
        raise ValueError("zero polynomial among the generators")
    if len({f.nvars for f in F}) != 1:
        raise ValueError("generators live in different rings")
    return F


def buchberger_loop(F: Sequence[Polynomial], o: TateOrder, reduce: Reducer) -> GroebnerBasis:
    """Generic Buchberger completion with FIFO pair selection.

    ``reduce(f, G)`` must return a :class:`WnfResult`; a nonzero remainder
    joins the basis and spawns pairs with every current element.
    """
    G = _validate(F)
    pairs = deque((i, j) for j in range(len(G)) for i in range(j))
    stats = {"pairs": 0, "zero_reductions": 0, "reduction_steps": 0, "max_t_size": 0}
    t0 = time.perf_counter()
    while pairs:
        i, j = pairs.popleft()
        stats["pairs"] += 1
        s = spoly(G[i], G[j], o)
        if not s:
            stats["zero_reductions"] += 1
            continue
        res = reduce(s, G)
        stats["reduction_steps"] += res.steps
        stats["max_t_size"] = max(stats["max_t_size"], res.max_t_size)
        h = res.remainder
        if not h:
            stats["zero_reductions"] += 1
            continue
        k = len(G)
        G.append(h)
        pairs.extend((m, k) for m in range(k))
    stats["basis_size"] = len(G)
    stats["seconds"] = time.perf_counter() - t0
    return GroebnerBasis(G, o, minimal=False, stats=stats)


def groebner(
    F: Sequence[Polynomial], o: TateOrder, *, timeout: float | None = None
) -> GroebnerBasis:
    """Gröbner basis of the ideal spanned by ``F`` in K{X; r}, made of polynomials.

    With ``timeout`` (seconds) a :class:`ReductionTimeout` is raised once the
    wall-clock budget is spent.
    """
    deadline = None if timeout is None else time.perf_counter() + timeout

    def reduce(f, G):
        if deadline is not None and time.perf_counter() > deadline:
            raise ReductionTimeout("deadline passed between reductions")
        return wnf_with_cofactors(f, G, o, track=False, deadline=deadline)

    return buchberger_loop(F, o, reduce)


def is_groebner(
    G: Sequence[Polynomial], o: TateOrder, *, timeout: float | None = None
) -> GroebnerCheck:
    """Buchberger criterion: every S-polynomial has weak normal form zero."""
    G = list(G)
    deadline = None if timeout is None else time.perf_counter() + timeout
    for j in range(len(G)):
        for i in range(j):
            s = spoly(G[i], G[j], o)
            if not s:
                continue
            h = wnf_with_cofactors(s, G, o, track=False, deadline=deadline).remainder
            if h:
                return GroebnerCheck(False, (i, j), h)
    return GroebnerCheck(True)


def normalize_leading(g: Polynomial, o: TateOrder) -> Polynomial:
    """Scale ``g`` so that its leading coefficient is ``p**val(LC)``."""
    c = g.leading_term(o).coeff
    v = int_valuation(c, o.p)
    target = Fraction(o.p) ** v
    return g if c == target else g * (target / c)


def minimalize(G, o: TateOrder | None = None, *, check: bool = True) -> GroebnerBasis:
    """Drop elements whose leading monomial is a multiple of another one.

    Among elements with the same leading monomial the earliest one is kept.
    """
    if isinstance(G, GroebnerBasis):
        o = G.order if o is None else o
        elements = G.elements
    else:
        elements = list(G)
    if o is None:
        raise ValueError("an order is required")
    if check and not is_groebner(elements, o):
        raise ValueError("input is not a Gröbner basis")
    lms = [g.leading_term(o).monomial for g in elements]
    keep = []
    for i, mi in enumerate(lms):
        redundant = False
        for j, mj in enumerate(lms):
            if i == j or not all(a <= b for a, b in zip(mj, mi)):
                continue
            if mj != mi or j < i:
                redundant = True
                break
        if not redundant:
            keep.append(normalize_leading(elements[i], o))
    stats = dict(G.stats) if isinstance(G, GroebnerBasis) else {}
    return GroebnerBasis(keep, o, minimal=True, stats=stats)
