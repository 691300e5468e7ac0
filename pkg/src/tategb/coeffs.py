"""Exact rational coefficients and their p-adic valuations.

Coefficients are plain :class:`fractions.Fraction` objects.  Valuations live
in an extended line: finite values are ``Fraction`` instances, the two
infinities are ``math.inf`` and ``-math.inf`` (both compare correctly with
fractions).
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import Union

ExtValue = Union[Fraction, float]

INF = math.inf
NEG_INF = -math.inf

_RATIONAL_RE = re.compile(r"\s*([+-]?)\s*(\d+)(?:\s*/\s*(\d+))?\s*\Z")


def is_prime(n: int) -> bool:
    """Deterministic primality test by trial division."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def check_prime(p: int) -> int:
    if not isinstance(p, int) or isinstance(p, bool) or not is_prime(p):
        raise ValueError(f"{p!r} is not a prime number")
    return p


def _int_valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


@lru_cache(maxsize=1 << 16)
def _valuation(num: int, den: int, p: int) -> int:
    return _int_valuation(num, p) - _int_valuation(den, p)


def padic_valuation(q, p: int) -> ExtValue:
    """Return v_p(q) as a Fraction, or +inf when q is zero."""
    check_prime(p)
    q = Fraction(q)
    if q == 0:
        return INF
    return Fraction(_valuation(abs(q.numerator), q.denominator, p))


def int_valuation(q: Fraction, p: int) -> int:
    """v_p of a nonzero rational as a plain int (hot path, no checks)."""
    return _valuation(abs(q.numerator), q.denominator, p)


def parse_rational(text: str) -> Fraction:
    """Parse ``[sign]int[/int]``.  Floats and other spellings are rejected."""
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"not a rational number: {text!r}")
    sign, num, den = m.groups()
    if den is not None and int(den) == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    value = Fraction(int(num), int(den) if den is not None else 1)
    return -value if sign == "-" else value


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_ext(text: str) -> ExtValue:
    """Parse a rational or ``inf`` / ``+inf`` / ``-inf``."""
    t = text.strip().lower()
    if t in ("inf", "+inf", "oo", "+oo"):
        return INF
    if t in ("-inf", "-oo"):
        return NEG_INF
    return parse_rational(text)


def format_ext(v: ExtValue) -> str:
    if v == INF:
        return "inf"
    if v == NEG_INF:
        return "-inf"
    return format_rational(v)
