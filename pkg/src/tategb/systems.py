"""Katsura and cyclic benchmark systems.

Variable conventions (fixed, tests rely on them):

* ``katsura(n)`` uses ``x0, ..., xn``.
* ``cyclic(n)`` uses ``x1, ..., xn``.
"""

from __future__ import annotations

from typing import List, Tuple

from .poly import Polynomial


def katsura_varnames(n: int) -> List[str]:
    return [f"x{i}" for i in range(n + 1)]


def cyclic_varnames(n: int) -> List[str]:
    return [f"x{i}" for i in range(1, n + 1)]


def katsura(n: int) -> List[Polynomial]:
    """Katsura-n: n+1 equations in x0..xn.

    For k = 0..n-1: sum_{i=-n..n} x_|i| x_|k-i| = x_k (with x_j = 0 for
    j > n), and x0 + 2(x1 + ... + xn) = 1.
    """
    if n < 2:
        raise ValueError("katsura needs n >= 2")
    nv = n + 1

    def var(i):
        e = [0] * nv
        e[i] = 1
        return e

    polys = []
    for k in range(n):
        terms = {}
        for i in range(-n, n + 1):
            a, b = abs(i), abs(k - i)
            if a > n or b > n:
                continue
            e = [0] * nv
            e[a] += 1
            e[b] += 1
            e = tuple(e)
            terms[e] = terms.get(e, 0) + 1
        xk = tuple(var(k))
        terms[xk] = terms.get(xk, 0) - 1
        polys.append(Polynomial(terms, nv))
    lin = {tuple(var(0)): 1, (0,) * nv: -1}
    for i in range(1, n + 1):
        lin[tuple(var(i))] = 2
    polys.append(Polynomial(lin, nv))
    return polys


def cyclic(n: int) -> List[Polynomial]:
    """Cyclic-n: elementary cyclic sums of lengths 1..n-1 and x1...xn - 1."""
    if n < 2:
        raise ValueError("cyclic needs n >= 2")
    polys = []
    for k in range(1, n):
        terms = {}
        for i in range(n):
            e = [0] * n
            for j in range(i, i + k):
                e[j % n] += 1
            e = tuple(e)
            terms[e] = terms.get(e, 0) + 1
        polys.append(Polynomial(terms, n))
    polys.append(Polynomial({(1,) * n: 1, (0,) * n: -1}, n))
    return polys


def system(name: str) -> Tuple[List[Polynomial], List[str]]:
    """Resolve ``"katsura:3"`` / ``"cyclic:5"`` to (polynomials, variable names)."""
    family, _, arg = name.partition(":")
    try:
        n = int(arg)
    except ValueError:
        raise ValueError(f"bad system name {name!r}") from None
    if family == "katsura":
        return katsura(n), katsura_varnames(n)
    if family == "cyclic":
        return cyclic(n), cyclic_varnames(n)
    raise ValueError(f"unknown system {family!r}")
