"""Sums, products, elimination, intersections, colons and saturations.

Every operation works on ideals of K{X; r} spanned by polynomials and returns
such an ideal again.  Elimination is the workhorse: a fresh variable gets
log-radius +inf (or a large finite value), the monomial order puts it in a
leading block, and the basis elements free of it span the elimination ideal.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import List, Sequence, Tuple, Union

from .buchberger import GroebnerBasis, groebner, minimalize
from .coeffs import INF, ExtValue
from .mora import wnf
from .order import GREVLEX, MonomialOrder, TateOrder, normalize_radii
from .poly import Polynomial, embed, exact_divide, restrict

Mode = Union[str, Fraction, int]


class EliminationError(RuntimeError):
    """A finite elimination radius turned out to be too small."""


@dataclass
class IdealPresentation:
    """An ideal of K{X; r} given by polynomial generators.

    An empty generator list stands for the zero ideal.
    """

    generators: List[Polynomial]
    p: int
    radii: Tuple[ExtValue, ...]
    tiebreak: MonomialOrder = GREVLEX
    _gb: GroebnerBasis | None = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        self.radii = normalize_radii(self.radii)
        gens = [g for g in self.generators]
        for g in gens:
            if not g:
                raise ValueError("zero polynomial among the generators")
            if g.nvars != len(self.radii):
                raise ValueError(
                    f"generator has {g.nvars} variables, expected {len(self.radii)}"
                )
        self.generators = gens

    @property
    def nvars(self) -> int:
        return len(self.radii)

    @property
    def order(self) -> TateOrder:
        return TateOrder(self.radii, self.tiebreak, self.p)

    def groebner(self) -> GroebnerBasis:
        """Minimalized Gröbner basis, computed once."""
        if self._gb is None:
            if self.generators:
                self._gb = minimalize(groebner(self.generators, self.order), check=False)
            else:
                self._gb = GroebnerBasis([], self.order, minimal=True)
        return self._gb

    def contains(self, f: Polynomial) -> bool:
        if not f:
            return True
        G = self.groebner().elements
        return bool(G) and not wnf(f, G, self.order)

    def leading_monomials(self) -> List[Tuple[int, ...]]:
        return sorted(t.monomial for t in self.groebner().leading_terms())

    def with_generators(self, gens: Sequence[Polynomial]) -> "IdealPresentation":
        return IdealPresentation(list(gens), self.p, self.radii, self.tiebreak)


def _check_context(I: IdealPresentation, J: IdealPresentation):
    if (I.p, I.radii, I.tiebreak) != (J.p, J.radii, J.tiebreak):
        raise ValueError("ideals live in different algebras")


def ideal_sum(I: IdealPresentation, J: IdealPresentation) -> IdealPresentation:
    _check_context(I, J)
    return I.with_generators(I.generators + J.generators)


def ideal_product(I: IdealPresentation, J: IdealPresentation) -> IdealPresentation:
    _check_context(I, J)
    return I.with_generators([f * g for f in I.generators for g in J.generators])


def ideals_equal(I: IdealPresentation, J: IdealPresentation) -> bool:
    _check_context(I, J)
    return all(J.contains(f) for f in I.generators) and all(
        I.contains(g) for g in J.generators
    )


def _front(n: int, var: int) -> List[int]:
    """Positions sending variable ``var`` to slot 0 and keeping the others in order."""
    pos, k = [], 1
    for i in range(n):
        if i == var:
            pos.append(0)
        else:
            pos.append(k)
            k += 1
    return pos


def elimination_order(I: IdealPresentation, var: int, mode: Mode = "infinite") -> TateOrder:
    """Order on the ring where ``var`` has been moved to the front."""
    if mode == "infinite":
        r0 = INF
    else:
        r0 = Fraction(mode)
    rest = [r for i, r in enumerate(I.radii) if i != var]
    block = MonomialOrder("block", 1, GREVLEX, I.tiebreak)
    return TateOrder((r0, *rest), block, I.p)


def eliminate(I: IdealPresentation, var: int, mode: Mode = "infinite") -> IdealPresentation:
    """Generators of I ∩ K{X without ``var``}, forming a Gröbner basis there.

    ``mode`` is ``"infinite"`` or a rational log-radius r0 for ``var``.  In
    the finite case the result is validated: every discarded basis element
    must have a leading term involving ``var``, otherwise r0 was too small
    and :class:`EliminationError` is raised.
    """
    n = I.nvars
    if not 0 <= var < n:
        raise ValueError(f"no variable with index {var}")
    if mode != "infinite" and isinstance(mode, str):
        raise ValueError(f"unknown elimination mode {mode!r}")
    o = elimination_order(I, var, mode)
    keep = [i for i in range(n) if i != var]
    out = IdealPresentation(
        [], I.p, tuple(I.radii[i] for i in keep), I.tiebreak
    )
    if not I.generators:
        return out
    pos = _front(n, var)
    gb = groebner([embed(f, pos, n) for f in I.generators], o)
    retained = []
    for g in gb.elements:
        if g.involves(0):
            if not g.leading_term(o).monomial[0]:
                raise EliminationError(
                    f"log-radius {mode} is too small: a basis element has a "
                    "leading term free of the eliminated variable"
                )
        else:
            retained.append(restrict(g, range(1, n)))
    out.generators = retained
    if retained:
        sub = GroebnerBasis(retained, out.order, stats=gb.stats)
        out._gb = minimalize(sub, check=False)
    else:
        out._gb = GroebnerBasis([], out.order, minimal=True, stats=gb.stats)
    return out


def _with_fresh_variable(I: IdealPresentation) -> Tuple[List[int], int]:
    n = I.nvars
    return [i + 1 for i in range(n)], n + 1


def intersect(I: IdealPresentation, J: IdealPresentation, mode: Mode = "infinite") -> IdealPresentation:
    """I ∩ J as the elimination of t from tI + (1 - t)J."""
    _check_context(I, J)
    if not I.generators or not J.generators:
        return I.with_generators([])
    pos, m = _with_fresh_variable(I)
    t = Polynomial.variable(0, m)
    one_minus_t = Polynomial.constant(1, m) - t
    gens = [t * embed(f, pos, m) for f in I.generators]
    gens += [one_minus_t * embed(g, pos, m) for g in J.generators]
    big = IdealPresentation(gens, I.p, (Fraction(0), *I.radii), I.tiebreak)
    return eliminate(big, 0, mode)


def colon(I: IdealPresentation, f, mode: Mode = "infinite") -> IdealPresentation:
    """I : f, or I : J when ``f`` is an :class:`IdealPresentation`.

    For a polynomial, the generators of I ∩ <f> are divided by ``f``; they
    all lie in the polynomial ideal spanned by ``f``, so the division is
    exact.  For an ideal, the colons by its generators are intersected.
    """
    if isinstance(f, IdealPresentation):
        _check_context(I, f)
        if not f.generators:
            return I.with_generators([Polynomial.constant(1, I.nvars)])
        acc = colon(I, f.generators[0], mode)
        for g in f.generators[1:]:
            acc = intersect(acc, colon(I, g, mode), mode)
        return acc
    if not f:
        raise ValueError("colon by the zero polynomial")
    K = intersect(I, I.with_generators([f]), mode)
    quotients = []
    for g in K.generators:
        try:
            quotients.append(exact_divide(g, f))
        except ArithmeticError:
            raise AssertionError(
                "intersection generator not divisible by f; this is a bug"
            ) from None
    return I.with_generators(quotients)


def saturate(
    I: IdealPresentation, f: Polynomial, mode: Mode = "infinite", *, cross_check: bool = False
) -> IdealPresentation:
    """I : f^inf, by eliminating t from I + <1 - t f>.

    With ``cross_check=True`` the result is compared with the stable value of
    the chain I : f, (I : f) : f, ...; a mismatch raises AssertionError.
    """
    if not f:
        raise ValueError("saturation by the zero polynomial")
    pos, m = _with_fresh_variable(I)
    t = Polynomial.variable(0, m)
    gens = [embed(g, pos, m) for g in I.generators]
    gens.append(Polynomial.constant(1, m) - t * embed(f, pos, m))
    big = IdealPresentation(gens, I.p, (Fraction(0), *I.radii), I.tiebreak)
    S = eliminate(big, 0, mode)
    if cross_check:
        chain = iterated_colon(I, f, mode)
        if not ideals_equal(S, chain):
            raise AssertionError("saturation disagrees with the iterated colon")
    return S


def iterated_colon(
    I: IdealPresentation, f: Polynomial, mode: Mode = "infinite", max_rounds: int = 64
) -> IdealPresentation:
    """Iterate J -> J : f until the ideal stops growing."""
    cur = I
    for _ in range(max_rounds):
        nxt = colon(cur, f, mode)
        if all(cur.contains(g) for g in nxt.generators):
            return cur
        cur = nxt
    raise RuntimeError(f"colon chain did not stabilize in {max_rounds} rounds")
