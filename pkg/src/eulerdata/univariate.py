"""Dense univariate helpers over Q.

Coefficient lists run from the constant term upward and never carry
trailing zeros; ``[]`` is the zero polynomial.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .poly import Polynomial

Coeffs = list[Fraction]


def trim(a: Sequence) -> Coeffs:
    out = [Fraction(c) for c in a]
    while out and not out[-1]:
        out.pop()
    return out


def degree(a: Coeffs) -> int:
    return len(a) - 1


def from_polynomial(p: Polynomial, var: str | None = None) -> Coeffs:
    """Coefficients of a polynomial that involves at most ``var``."""
    support = p.support()
    if var is None:
        if len(support) > 1:
            raise ValueError(f"not univariate: {p}")
        var = next(iter(support)) if support else (p.vars[0] if p.vars else None)
    elif support - {var}:
        raise ValueError(f"{p} involves variables other than {var!r}")
    if var is None:
        return trim([p.constant_term()])
    i = p.vars.index(var)
    out = [Fraction(0)] * (max((m[i] for m, _ in p.items()), default=-1) + 1)
    for m, c in p.items():
        out[m[i]] += c
    return trim(out)


def derivative(a: Coeffs) -> Coeffs:
    return trim([c * k for k, c in enumerate(a)][1:])


def divmod_poly(a: Coeffs, b: Coeffs) -> tuple[Coeffs, Coeffs]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(r) >= len(b) and r:
        shift = len(r) - len(b)
        f = r[-1] / lead
        q[shift] = f
        for i, c in enumerate(b):
            r[shift + i] -= f * c
        r = trim(r)
    return trim(q), r


def gcd(a: Coeffs, b: Coeffs) -> Coeffs:
    """Monic gcd."""
    a, b = trim(a), trim(b)
    while b:
        a, b = b, divmod_poly(a, b)[1]
    if not a:
        return a
    return [c / a[-1] for c in a]


def squarefree_degree(a: Coeffs) -> int:
    """Degree of the squarefree part, i.e. number of distinct complex roots."""
    a = trim(a)
    if not a:
        raise ValueError("zero polynomial has no squarefree part")
    return degree(a) - degree(gcd(a, derivative(a)))


def evaluate(a: Coeffs, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def integer_primitive(a: Coeffs) -> list[int]:
    """Scale to coprime integer coefficients."""
    den = 1
    for c in a:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in a]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    return [c // g for c in ints] if g else ints


def rational_roots(a: Coeffs) -> list[Fraction]:
    """Distinct rational roots, sorted, by the rational root test."""
    a = trim(a)
    if not a:
        raise ValueError("zero polynomial")
    roots: set[Fraction] = set()
    if not a[0]:
        roots.add(Fraction(0))
        while a and not a[0]:
            a = a[1:]
    if len(a) <= 1:
        return sorted(roots)
    ints = integer_primitive(a)
    for p in _divisors(ints[0]):
        for q in _divisors(ints[-1]):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if cand not in roots and not evaluate(a, cand):
                    roots.add(cand)
    return sorted(roots)
