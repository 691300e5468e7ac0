"""Sparse multivariate polynomials over Q.

A :class:`Polynomial` is an immutable map from exponent tuples to nonzero
``Fraction`` coefficients.  It carries no order: leading terms are always
computed against a :class:`~tategb.order.TateOrder` passed in by the
caller, and memoized per order on the instance.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple

from .coeffs import INF, ExtValue, format_rational, int_valuation
from .order import GREVLEX, Monomial, TateOrder, Term


class Polynomial:
    __slots__ = ("_terms", "nvars", "_cache", "_hash")

    def __init__(self, terms=None, nvars: int = None):
        if nvars is None:
            raise TypeError("nvars is required")
        clean: Dict[Monomial, Fraction] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for exps, c in items:
                exps = tuple(int(e) for e in exps)
                if len(exps) != nvars or any(e < 0 for e in exps):
                    raise ValueError(f"bad exponent vector {exps} for {nvars} variables")
                c = clean.get(exps, 0) + Fraction(c)
                if c:
                    clean[exps] = c
                else:
                    clean.pop(exps, None)
        self._terms = clean
        self.nvars = nvars
        self._cache = {}
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Monomial, Fraction], nvars: int) -> "Polynomial":
        # terms must already be canonical (no zero coefficients)
        obj = cls.__new__(cls)
        obj._terms = terms
        obj.nvars = nvars
        obj._cache = {}
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls._raw({}, nvars)

    @classmethod
    def constant(cls, c, nvars: int) -> "Polynomial":
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def monomial(cls, exps: Sequence[int], c=1) -> "Polynomial":
        return cls({tuple(exps): c}, len(exps))

    @classmethod
    def variable(cls, i: int, nvars: int) -> "Polynomial":
        exps = [0] * nvars
        exps[i] = 1
        return cls({tuple(exps): 1}, nvars)

    # -- container protocol --

    def items(self):
        return self._terms.items()

    def terms(self) -> List[Term]:
        return [Term(c, m) for m, c in self._terms.items()]

    def support(self) -> set:
        return set(self._terms)

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exps), Fraction(0))

    def __iter__(self) -> Iterator[Tuple[Monomial, Fraction]]:
        return iter(self._terms.items())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(other, self.nvars)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r}, nvars={self.nvars})"

    def __str__(self):
        return format_polynomial(self)

    # -- arithmetic --

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise ValueError("polynomials live in different rings")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other, self.nvars)
        raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                del out[m]
        return Polynomial._raw(out, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({m: -c for m, c in self._terms.items()}, self.nvars)

    def __sub__(self, other):
        return self.sub_term_multiple(Fraction(1), (0,) * self.nvars, self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            if not other:
                return Polynomial.zero(self.nvars)
            return Polynomial._raw({m: c * other for m, c in self._terms.items()}, self.nvars)
        other = self._coerce(other)
        out: Dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial._raw({m: c for m, c in out.items() if c}, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def mul_term(self, coeff, exps: Sequence[int]) -> "Polynomial":
        """Return ``coeff * X^exps * self``."""
        coeff = Fraction(coeff)
        if not coeff:
            return Polynomial.zero(self.nvars)
        return Polynomial._raw(
            {tuple(a + b for a, b in zip(m, exps)): c * coeff for m, c in self._terms.items()},
            self.nvars,
        )

    def sub_term_multiple(self, coeff: Fraction, exps: Sequence[int], g: "Polynomial") -> "Polynomial":
        """Return ``self - coeff * X^exps * g`` (the inner reduction step)."""
        out = dict(self._terms)
        if any(exps):
            for m, c in g._terms.items():
                m = tuple(a + b for a, b in zip(m, exps))
                s = out.get(m, 0) - coeff * c
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        else:
            for m, c in g._terms.items():
                s = out.get(m, 0) - coeff * c
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Polynomial._raw(out, self.nvars)

    # -- structure --

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._terms}) <= 1

    def involves(self, var: int) -> bool:
        return any(m[var] for m in self._terms)

    def leading_term(self, o: TateOrder) -> Term:
        key = ("lt", o)
        lt = self._cache.get(key)
        if lt is None:
            if not self._terms:
                raise ValueError("the zero polynomial has no leading term")
            o._check(next(iter(self._terms)))
            m, c = max(self._terms.items(), key=lambda mc: o.key(mc[1], mc[0]))
            lt = self._cache[key] = Term(c, m)
        return lt


# -- leading data -------------------------------------------------------------


def leading_term(f: Polynomial, o: TateOrder) -> Term:
    return f.leading_term(o)


def leading_monomial(f: Polynomial, o: TateOrder) -> Monomial:
    return f.leading_term(o).monomial


def leading_coefficient(f: Polynomial, o: TateOrder) -> Fraction:
    return f.leading_term(o).coeff


def gauss_valuation_poly(f: Polynomial, o: TateOrder) -> ExtValue:
    """Minimum Gauss valuation over the terms; +inf for zero."""
    return min((o.valuation(c, m) for m, c in f.items()), default=INF)


def monomial_gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(min(x, y) for x, y in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_quotient(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def spoly(f: Polynomial, g: Polynomial, o: TateOrder) -> Polynomial:
    """S-polynomial ``(LT(g)/gcd) f - (LT(f)/gcd) g``, gcd taken with coefficient 1."""
    if not f or not g:
        raise ValueError("S-polynomial of a zero polynomial")
    cf, mf = f.leading_term(o)
    cg, mg = g.leading_term(o)
    lcm = monomial_lcm(mf, mg)
    left = f.mul_term(cg, monomial_quotient(lcm, mf))
    return left.sub_term_multiple(cf, monomial_quotient(lcm, mg), g)


# -- homogenization -------------------------------------------------------------


def homogenize(f: Polynomial) -> Polynomial:
    """Append a variable ``t`` and make every term of degree ``deg f``."""
    d = f.degree()
    return Polynomial._raw(
        {m + (d - sum(m),): c for m, c in f.items()}, f.nvars + 1
    )


def dehomogenize(h: Polynomial) -> Polynomial:
    """Set the last variable to 1."""
    return Polynomial(((m[:-1], c) for m, c in h.items()), h.nvars - 1)


def dehomogenize_term(t: Term) -> Term:
    return Term(t.coeff, t.monomial[:-1])


# -- overconvergence helpers ----------------------------------------------------


def _val_s(c: Fraction, m: Monomial, s, p: int) -> Fraction:
    return int_valuation(c, p) - sum((si * e for si, e in zip(s, m) if e), Fraction(0))


def valuation_s(f: Polynomial, s, p: int) -> ExtValue:
    """Gauss valuation for finite log-radii ``s`` (no order needed)."""
    return min((_val_s(c, m, s, p) for m, c in f.items()), default=INF)


def support_s(f: Polynomial, s, p: int) -> set:
    """Monomials whose term reaches the s-Gauss valuation of ``f``."""
    if not f:
        return set()
    vals = {m: _val_s(c, m, s, p) for m, c in f.items()}
    v = min(vals.values())
    return {m for m, x in vals.items() if x == v}


def deg_sr(f: Polynomial, s, r, p: int) -> Fraction:
    """max of (s - r).alpha over the s-support of ``f``."""
    if not f:
        raise ValueError("(s,r)-degree of the zero polynomial")
    w = [Fraction(a) - Fraction(b) for a, b in zip(s, r)]
    return max(sum((wi * e for wi, e in zip(w, m)), Fraction(0)) for m in support_s(f, s, p))


# -- text format ------------------------------------------------------------------


class ParseError(ValueError):
    def __init__(self, msg: str, text: str, pos: int):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"{msg} at line {line}, column {col}")
        self.line = line
        self.column = col
        self.pos = pos


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+(?:\s*/\s*\d+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<pow>\*\*|\^)|(?P<op>[-+*]))"
)
_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


def scan_variables(text: str) -> List[str]:
    """Identifiers of ``text`` in order of first appearance."""
    seen: List[str] = []
    for name in _NAME_RE.findall(text):
        if name not in seen:
            seen.append(name)
    return seen


def _tokenize(text: str):
    pos, n = 0, len(text)
    tokens = []
    while pos < n:
        if text[pos:].strip() == "":
            break
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[start]!r}", text, start)
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


def parse_polynomial(text: str, varnames: Sequence[str]) -> Polynomial:
    """Parse e.g. ``"-3/8*x*y^2 + x - 1"`` over the given variable names."""
    index = {name: i for i, name in enumerate(varnames)}
    nvars = len(varnames)
    tokens = _tokenize(text)
    pos = 0

    def peek():
        return tokens[pos]

    def take():
        nonlocal pos
        tok = tokens[pos]
        pos += 1
        return tok

    def factor(coeff, exps):
        kind, val, at = take()
        if kind == "num":
            num, _, den = val.replace(" ", "").partition("/")
            if den and int(den) == 0:
                raise ParseError("zero denominator", text, at)
            return coeff * Fraction(int(num), int(den or 1))
        if kind == "name":
            if val not in index:
                raise ParseError(f"unknown variable {val!r}", text, at)
            e = 1
            if peek()[0] == "pow":
                take()
                k2, v2, at2 = take()
                if k2 != "num" or "/" in v2:
                    raise ParseError("expected an integer exponent", text, at2)
                e = int(v2)
            exps[index[val]] += e
            return coeff
        what = "end of input" if kind == "end" else repr(val)
        raise ParseError(f"unexpected {what}", text, at)

    def term(sign):
        coeff = Fraction(sign)
        exps = [0] * nvars
        coeff = factor(coeff, exps)
        while True:
            kind, val, _ = peek()
            if kind == "op" and val == "*":
                take()
                coeff = factor(coeff, exps)
            elif kind in ("num", "name"):
                coeff = factor(coeff, exps)
            else:
                break
        return tuple(exps), coeff

    terms = []
    kind, val, at = peek()
    if kind == "end":
        raise ParseError("empty polynomial", text, at)
    sign = 1
    if kind == "op" and val in "+-":
        take()
        sign = -1 if val == "-" else 1
    terms.append(term(sign))
    while True:
        kind, val, at = take()
        if kind == "end":
            break
        if kind == "op" and val in "+-":
            terms.append(term(-1 if val == "-" else 1))
        else:
            raise ParseError(f"unexpected {val!r}", text, at)
    return Polynomial(terms, nvars)


def default_varnames(nvars: int) -> List[str]:
    return [f"x{i + 1}" for i in range(nvars)]


def sorted_terms(f: Polynomial, o: TateOrder | None = None) -> List[Tuple[Monomial, Fraction]]:
    """Terms in decreasing order (Tate order if given, grevlex otherwise)."""
    if o is not None:
        return sorted(f.items(), key=lambda mc: o.key(mc[1], mc[0]), reverse=True)
    return sorted(f.items(), key=lambda mc: GREVLEX.key(mc[0]), reverse=True)


def format_monomial(m: Monomial, varnames: Sequence[str]) -> str:
    parts = []
    for name, e in zip(varnames, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_polynomial(
    f: Polynomial, varnames: Sequence[str] | None = None, o: TateOrder | None = None
) -> str:
    if varnames is None:
        varnames = default_varnames(f.nvars)
    if not f:
        return "0"
    out = []
    for i, (m, c) in enumerate(sorted_terms(f, o)):
        mono = format_monomial(m, varnames)
        a = abs(c)
        if not mono:
            body = format_rational(a)
        elif a == 1:
            body = mono
        else:
            body = f"{format_rational(a)}*{mono}"
        if i == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("- " if c < 0 else "+ ") + body)
    return " ".join(out)


def embed(f: Polynomial, positions: Sequence[int], nvars: int) -> Polynomial:
    """Map variable ``i`` of ``f`` to variable ``positions[i]`` of a bigger ring."""
    out = {}
    for m, c in f.items():
        e = [0] * nvars
        for i, k in enumerate(positions):
            e[k] = m[i]
        out[tuple(e)] = c
    return Polynomial._raw(out, nvars)


def restrict(f: Polynomial, keep: Sequence[int]) -> Polynomial:
    """Drop the variables not in ``keep``; they must not occur in ``f``."""
    kept = set(keep)
    out = {}
    for m, c in f.items():
        if any(e for k, e in enumerate(m) if k not in kept):
            raise ValueError("polynomial involves a dropped variable")
        out[tuple(m[k] for k in keep)] = c
    return Polynomial._raw(out, len(keep))


def exact_divide(a: Polynomial, b: Polynomial) -> Polynomial:
    """Quotient of ``a`` by ``b`` in Q[X]; raises ArithmeticError if inexact."""
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    lead = lambda mc: GREVLEX.key(mc[0])
    mb, cb = max(b.items(), key=lead)
    q: Dict[Monomial, Fraction] = {}
    rem = a
    while rem:
        mr, cr = max(rem.items(), key=lead)
        if any(x < y for x, y in zip(mr, mb)):
            raise ArithmeticError("inexact polynomial division")
        v = monomial_quotient(mr, mb)
        c = cr / cb
        q[v] = q.get(v, 0) + c
        rem = rem.sub_term_multiple(c, v, b)
    return Polynomial(q, a.nvars)


def polys_from_lines(lines: Iterable[str], varnames: Sequence[str]) -> List[Polynomial]:
    return [parse_polynomial(line, varnames) for line in lines if line.strip()]
