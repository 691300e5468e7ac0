"""Monomial orders, log-radii and the Tate term order.

A term ``c*X^a`` is ranked by its Gauss valuation ``val(c) - r.a`` (lower
valuation means bigger term), ties being broken by a classical monomial
order.  Every order here is realized as a sort key: a term is bigger than
another iff its key is bigger.  Keys are plain tuples so that the hot loops
only ever compare tuples.

Infinite log-radii (used for elimination) give a Gauss valuation of -inf to
every term involving such a variable.  Those terms are ranked first by their
degree in the infinite-radius variables, then by the Gauss valuation of the
remaining part, then by the monomial order.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import NamedTuple, Sequence, Tuple

from .coeffs import (
    INF,
    NEG_INF,
    ExtValue,
    check_prime,
    format_ext,
    int_valuation,
    parse_ext,
)

Monomial = Tuple[int, ...]


class Term(NamedTuple):
    coeff: Fraction
    monomial: Monomial


# -- classical monomial orders -------------------------------------------------


@dataclass(frozen=True)
class MonomialOrder:
    """``lex``, ``grevlex`` or ``block(k; first; second)``.

    For a block order the first ``k`` variables are compared with ``first``
    and only on a tie the remaining ones with ``second``.
    """

    kind: str = "grevlex"
    size: int = 0
    first: "MonomialOrder | None" = None
    second: "MonomialOrder | None" = None

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex", "block"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "block":
            if self.size < 0 or self.first is None or self.second is None:
                raise ValueError("block order needs a size and two inner orders")

    def key(self, exps: Sequence[int]):
        if self.kind == "grevlex":
            return (sum(exps), tuple(-e for e in reversed(exps)))
        if self.kind == "lex":
            return tuple(exps)
        k = self.size
        return (self.first.key(exps[:k]), self.second.key(exps[k:]))

    def compare(self, a: Sequence[int], b: Sequence[int]) -> int:
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def __str__(self):
        if self.kind == "block":
            return f"block({self.size};{self.first};{self.second})"
        return self.kind


LEX = MonomialOrder("lex")
GREVLEX = MonomialOrder("grevlex")


def parse_order(text: str) -> MonomialOrder:
    """Parse ``lex``, ``grevlex`` or ``block(k;inner1;inner2)``."""
    s = text.replace(" ", "")
    if s in ("lex", "grevlex"):
        return MonomialOrder(s)
    if s.startswith("block(") and s.endswith(")"):
        body = s[len("block("):-1]
        parts, depth, cur = [], 0, ""
        for ch in body:
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            if ch == ";" and depth == 0:
                parts.append(cur)
                cur = ""
            else:
                cur += ch
        parts.append(cur)
        if len(parts) == 3 and parts[0].isdigit():
            return MonomialOrder(
                "block", int(parts[0]), parse_order(parts[1]), parse_order(parts[2])
            )
    raise ValueError(f"cannot parse monomial order {text!r}")


# -- log-radii -----------------------------------------------------------------


def parse_radii(text: str, nvars: int | None = None) -> Tuple[ExtValue, ...]:
    """Parse ``"inf,0,1/2"``.  A single value is broadcast to ``nvars``."""
    items = [t for t in text.split(",")]
    try:
        radii = tuple(parse_ext(t) for t in items)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad log-radii {text!r}: {exc}") from None
    if nvars is not None:
        if len(radii) == 1:
            radii = radii * nvars
        elif len(radii) != nvars:
            raise ValueError(f"expected {nvars} log-radii, got {len(radii)}")
    return normalize_radii(radii)


def normalize_radii(radii) -> Tuple[ExtValue, ...]:
    out = []
    for r in radii:
        if r == NEG_INF:
            raise ValueError("log-radii cannot be -inf")
        out.append(INF if r == INF else Fraction(r))
    return tuple(out)


def format_radii(radii) -> str:
    return ",".join(format_ext(r) for r in radii)


# -- the Tate order ------------------------------------------------------------


@dataclass(frozen=True)
class TateOrder:
    """Term order ``<_r`` on K{X; r} with K = Q_p.

    With ``homogenized=True`` the order acts on K{X, t; r, 0}: terms carry
    one extra trailing exponent (the homogenization variable) and are ranked
    by Gauss valuation, then total degree, then the monomial order on the
    X-part.
    """

    radii: Tuple[ExtValue, ...]
    tiebreak: MonomialOrder = GREVLEX
    p: int = 2
    homogenized: bool = False
    _inf: Tuple[int, ...] = field(init=False, repr=False, compare=False)
    _fin: Tuple[Tuple[int, Fraction], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "radii", normalize_radii(self.radii))
        check_prime(self.p)
        inf = tuple(k for k, r in enumerate(self.radii) if r == INF)
        if inf and self.homogenized:
            raise ValueError("homogenized orders need finite log-radii")
        fin = tuple((k, r) for k, r in enumerate(self.radii) if r != INF and r != 0)
        object.__setattr__(self, "_inf", inf)
        object.__setattr__(self, "_fin", fin)

    @property
    def nvars(self) -> int:
        return len(self.radii) + (1 if self.homogenized else 0)

    @property
    def finite(self) -> bool:
        return not self._inf

    def homogenize(self) -> "TateOrder":
        return replace(self, homogenized=True)

    def with_radii(self, radii) -> "TateOrder":
        return replace(self, radii=tuple(radii))

    def describe(self) -> str:
        h = ",0(t)" if self.homogenized else ""
        return f"p={self.p} r=({format_radii(self.radii)}{h}) {self.tiebreak}"

    def _check(self, exps):
        if len(exps) != self.nvars:
            raise ValueError(
                f"monomial has {len(exps)} variables, order expects {self.nvars}"
            )

    def finite_valuation(self, coeff: Fraction, exps: Sequence[int]):
        """Gauss valuation ignoring the infinite-radius variables."""
        v = int_valuation(coeff, self.p)
        for k, r in self._fin:
            e = exps[k]
            if e:
                v -= r * e
        return v

    def inf_degree(self, exps: Sequence[int]) -> int:
        return sum(exps[k] for k in self._inf)

    def valuation(self, coeff: Fraction, exps: Sequence[int]) -> ExtValue:
        """Gauss valuation of the term ``coeff * X^exps``."""
        self._check(exps)
        if coeff == 0:
            return INF
        if self.inf_degree(exps):
            return NEG_INF
        return Fraction(self.finite_valuation(coeff, exps))

    def key(self, coeff: Fraction, exps: Sequence[int]):
        """Sort key of a nonzero term; bigger key means bigger term."""
        if self.homogenized:
            return (
                -self.finite_valuation(coeff, exps),
                sum(exps),
                self.tiebreak.key(exps[:-1]),
            )
        if self._inf:
            return (
                self.inf_degree(exps),
                -self.finite_valuation(coeff, exps),
                self.tiebreak.key(exps),
            )
        return (-self.finite_valuation(coeff, exps), self.tiebreak.key(exps))


def _as_term(t) -> Term:
    if isinstance(t, Term):
        return t
    coeff, mono = t
    return Term(Fraction(coeff), tuple(mono))


def gauss_valuation_term(t, o: TateOrder) -> ExtValue:
    t = _as_term(t)
    return o.valuation(t.coeff, t.monomial)


def compare_terms(a, b, o: TateOrder) -> int:
    """Return -1, 0 or 1 as ``a`` is smaller than, equal to or bigger than ``b``.

    Equality is equality in TT(X; r): same monomial, same valuation.
    """
    a, b = _as_term(a), _as_term(b)
    o._check(a.monomial)
    o._check(b.monomial)
    if a.coeff == 0 or b.coeff == 0:
        raise ValueError("terms must have nonzero coefficients")
    ka, kb = o.key(a.coeff, a.monomial), o.key(b.coeff, b.monomial)
    return (ka > kb) - (ka < kb)


def compare_terms_homog(a, b, o: TateOrder) -> int:
    """Compare terms of K{X, t; r, 0}; ``t`` is the last variable."""
    return compare_terms(a, b, o if o.homogenized else o.homogenize())


def term_divides(a, b) -> bool:
    """Divisibility in TT(X; r): coefficients are units, only monomials matter."""
    ma = a.monomial if isinstance(a, Term) else a
    mb = b.monomial if isinstance(b, Term) else b
    if len(ma) != len(mb):
        raise ValueError("terms live in different algebras")
    return all(x <= y for x, y in zip(ma, mb))
