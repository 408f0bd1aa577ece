"""Groebner-basis engine: reduced bases, normal forms, dimension,
saturation, elimination and counting points of zero-dimensional ideals.
"""

from __future__ import annotations

import heapq
import itertools
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import univariate
from .config import DEFAULT_SPAIR_LIMIT, default_spair_limit, derive_seed, seeded_coefficient
from .errors import GenericityFailure, NotZeroDimensional, ResourceLimit
from .poly import GREVLEX, LEX, Monomial, MonomialOrder, Polynomial, elimination_order

#: krull_dimension of the unit ideal (empty vanishing set)
EMPTY_DIMENSION = -1

_RawPoly = dict  # Monomial -> Fraction


def _divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


class _Keys:
    """Memoised order keys; orders are compared millions of times."""

    def __init__(self, order: MonomialOrder):
        self._key = order.key
        self._cache: dict[Monomial, object] = {}

    def __call__(self, m: Monomial):
        k = self._cache.get(m)
        if k is None:
            k = self._cache[m] = self._key(m)
        return k


def _monic(p: _RawPoly, lm: Monomial) -> _RawPoly:
    c = p[lm]
    if c == 1:
        return p
    inv = 1 / c
    return {m: v * inv for m, v in p.items()}


def _reduce(p: _RawPoly, basis: Sequence[_RawPoly], lms: Sequence[Monomial], key) -> _RawPoly:
    """Full reduction of ``p`` by monic ``basis`` with leading monomials ``lms``."""
    p = dict(p)
    rem: _RawPoly = {}
    while p:
        m = max(p, key=key)
        c = p[m]
        for g, lg in zip(basis, lms):
            if _divides(lg, m):
                shift = tuple(a - b for a, b in zip(m, lg))
                for gm, gc in g.items():
                    t = tuple(a + b for a, b in zip(gm, shift))
                    v = p.get(t, 0) - c * gc
                    if v:
                        p[t] = v
                    else:
                        p.pop(t, None)
                break
        else:
            rem[m] = c
            del p[m]
    return rem


def _spoly(f: _RawPoly, lf: Monomial, g: _RawPoly, lg: Monomial) -> _RawPoly:
    lcm = _lcm(lf, lg)
    sf = tuple(a - b for a, b in zip(lcm, lf))
    sg = tuple(a - b for a, b in zip(lcm, lg))
    out: _RawPoly = {}
    for m, c in f.items():
        out[tuple(a + b for a, b in zip(m, sf))] = c
    for m, c in g.items():
        t = tuple(a + b for a, b in zip(m, sg))
        v = out.get(t, 0) - c
        if v:
            out[t] = v
        else:
            out.pop(t, None)
    return out


def buchberger(polys: Iterable[_RawPoly], order: MonomialOrder, spair_limit: int = DEFAULT_SPAIR_LIMIT) -> list[_RawPoly]:
    """Reduced Groebner basis of raw polynomials, sorted by descending leading monomial.

    Pairs are processed lowest-degree lcm first; Buchberger's coprime and
    chain criteria prune the queue (Gebauer-Moeller update).
    """
    key = _Keys(order)
    G: list[_RawPoly] = []
    LM: list[Monomial] = []
    active: set[tuple[int, int]] = set()
    queue: list = []
    counter = itertools.count()

    def add(f: _RawPoly) -> None:
        lf = max(f, key=key)
        f = _monic(f, lf)
        new = len(G)
        # drop old pairs made redundant by the chain criterion
        for (i, j) in list(active):
            L = _lcm(LM[i], LM[j])
            if _divides(lf, L) and L != _lcm(LM[i], lf) and L != _lcm(LM[j], lf):
                active.discard((i, j))
        groups: dict[Monomial, list[int]] = {}
        for i, li in enumerate(LM):
            groups.setdefault(_lcm(li, lf), []).append(i)
        kept: list[Monomial] = []
        for L in sorted(groups, key=lambda m: (sum(m), key(m))):
            if any(_divides(K, L) for K in kept):
                continue
            kept.append(L)
            members = groups[L]
            coprime = any(L == tuple(a + b for a, b in zip(LM[i], lf)) for i in members)
            if not coprime:
                pair = (min(members), new)
                active.add(pair)
                heapq.heappush(queue, (sum(L), key(L), next(counter), pair))
        G.append(f)
        LM.append(lf)

    for f in polys:
        if f:
            add(dict(f))
    if any(not any(m) for m in LM):
        return [{(0,) * len(LM[0]): Fraction(1)}]

    processed = 0
    while queue:
        *_, pair = heapq.heappop(queue)
        if pair not in active:
            continue
        active.discard(pair)
        processed += 1
        if processed > spair_limit:
            raise ResourceLimit(f"more than {spair_limit} S-pairs processed")
        i, j = pair
        r = _reduce(_spoly(G[i], LM[i], G[j], LM[j]), G, LM, key)
        if r:
            if len(r) == 1 and not any(next(iter(r))):
                return [{next(iter(r)): Fraction(1)}]
            add(r)

    # minimalise, then interreduce
    idx = sorted(range(len(G)), key=lambda i: key(LM[i]))
    minimal: list[int] = []
    for i in idx:
        if not any(_divides(LM[k], LM[i]) for k in minimal):
            minimal.append(i)
    basis = [G[i] for i in minimal]
    lms = [LM[i] for i in minimal]
    reduced = []
    for n, (g, lg) in enumerate(zip(basis, lms)):
        others = basis[:n] + basis[n + 1:]
        other_lms = lms[:n] + lms[n + 1:]
        tail = {m: c for m, c in g.items() if m != lg}
        r = _reduce(tail, others, other_lms, key)
        r[lg] = g[lg]
        reduced.append(_monic(r, lg))
    order_idx = sorted(range(len(reduced)), key=lambda k: key(lms[k]), reverse=True)
    return [reduced[k] for k in order_idx]


@dataclass(frozen=True)
class PointCount:
    count: int
    with_multiplicity: int

    def __post_init__(self):
        if not 0 <= self.count <= self.with_multiplicity:
            raise ValueError("need 0 <= count <= with_multiplicity")


class Ideal:
    """Ideal of Q[vars], with a write-once Groebner-basis cache per order."""

    def __init__(self, generators: Iterable[Polynomial], vars: Sequence[str] | None = None,
                 *, spair_limit: int | None = None):
        gens = list(generators)
        if vars is None:
            if not gens:
                raise ValueError("vars required for an ideal with no generators")
            vars = gens[0].vars
        self.vars = tuple(vars)
        self.generators = tuple(g if g.vars == self.vars else g.with_vars(self.vars) for g in gens if g)
        self.spair_limit = spair_limit if spair_limit is not None else default_spair_limit()
        self._bases: dict[MonomialOrder, tuple[Polynomial, ...]] = {}
        self._lock = threading.Lock()

    def derived(self, generators: Iterable[Polynomial], vars: Sequence[str] | None = None) -> "Ideal":
        """A new ideal that inherits this one's resource limit."""
        return Ideal(generators, self.vars if vars is None else vars, spair_limit=self.spair_limit)

    def groebner(self, order: MonomialOrder = GREVLEX) -> tuple[Polynomial, ...]:
        cached = self._bases.get(order)
        if cached is not None:
            return cached
        raw = buchberger((dict(g.items()) for g in self.generators), order, self.spair_limit)
        basis = tuple(Polynomial._raw(self.vars, r) for r in raw)
        with self._lock:
            return self._bases.setdefault(order, basis)

    def is_unit(self) -> bool:
        gb = self.groebner()
        return len(gb) == 1 and gb[0].is_constant()

    def contains(self, p: Polynomial) -> bool:
        return normal_form(p, self).is_zero()

    def __add__(self, other: "Ideal") -> "Ideal":
        if other.vars != self.vars:
            raise ValueError("ideals live in different rings")
        return self.derived(self.generators + other.generators)

    def __repr__(self) -> str:
        gens = ", ".join(str(g) for g in self.generators)
        return f"Ideal<{gens}> in Q[{', '.join(self.vars)}]"


def groebner_basis(I: Ideal, order: MonomialOrder = GREVLEX) -> list[Polynomial]:
    return list(I.groebner(order))


def normal_form(p: Polynomial, I: Ideal, order: MonomialOrder = GREVLEX) -> Polynomial:
    if p.vars != I.vars:
        p = p.with_vars(I.vars)
    gb = I.groebner(order)
    key = _Keys(order)
    basis = [dict(g.items()) for g in gb]
    lms = [g.leading_monomial(order) for g in gb]
    return Polynomial._raw(I.vars, _reduce(dict(p.items()), basis, lms, key))


def _leading_monomials(I: Ideal, order: MonomialOrder = GREVLEX) -> list[Monomial]:
    return [g.leading_monomial(order) for g in I.groebner(order)]


def krull_dimension(I: Ideal) -> int:
    """Dimension of V(I); ``EMPTY_DIMENSION`` (-1) when 1 is in I.

    Uses maximal sets of variables independent modulo the leading-term ideal.
    """
    if I.is_unit():
        return EMPTY_DIMENSION
    lms = _leading_monomials(I)
    n = len(I.vars)
    for size in range(n, -1, -1):
        for S in itertools.combinations(range(n), size):
            chosen = set(S)
            if all(any(e and i not in chosen for i, e in enumerate(m)) for m in lms):
                return size
    return 0


def standard_monomials(I: Ideal, order: MonomialOrder = GREVLEX) -> list[Monomial]:
    """Monomials outside the leading-term ideal of a zero-dimensional ideal."""
    if I.is_unit():
        return []
    lms = _leading_monomials(I, order)
    n = len(I.vars)
    for i in range(n):
        if not any(m[i] and all(not e for k, e in enumerate(m) if k != i) for m in lms):
            raise NotZeroDimensional(f"no pure power of {I.vars[i]} among leading monomials")
    seen = {(0,) * n}
    frontier = [(0,) * n]
    while frontier:
        nxt = []
        for m in frontier:
            for i in range(n):
                t = m[:i] + (m[i] + 1,) + m[i + 1:]
                if t not in seen and not any(_divides(l, t) for l in lms):
                    seen.add(t)
                    nxt.append(t)
        frontier = nxt
    return sorted(seen, key=order.key)


def quotient_vector_dimension(I: Ideal) -> int:
    if krull_dimension(I) > 0:
        raise NotZeroDimensional(f"{I} is not zero-dimensional")
    return len(standard_monomials(I))


def _fresh_name(vars: Sequence[str], stem: str = "_t") -> str:
    k = 0
    while f"{stem}{k}" in vars:
        k += 1
    return f"{stem}{k}"


def eliminate(I: Ideal, drop: Iterable[str]) -> Ideal:
    """I intersected with the subring in the variables not in ``drop``."""
    drop = set(drop)
    unknown = drop - set(I.vars)
    if unknown:
        raise ValueError(f"undeclared variables {sorted(unknown)}")
    keep = tuple(v for v in I.vars if v not in drop)
    ordered = tuple(v for v in I.vars if v in drop) + keep
    J = Ideal((g.with_vars(ordered) for g in I.generators), ordered, spair_limit=I.spair_limit)
    k = len(drop)
    order = elimination_order(k)
    out = []
    for g in J.groebner(order):
        if not (g.support() & drop):
            out.append(g.with_vars(keep))
    return Ideal(out, keep, spair_limit=I.spair_limit)


def intersection(I: Ideal, J: Ideal) -> Ideal:
    """I ∩ J via elimination of t from t*I + (1 - t)*J."""
    t = _fresh_name(I.vars)
    big = (t,) + I.vars
    T = Polynomial.variable(big, t)
    gens = [T * g.with_vars(big) for g in I.generators]
    gens += [(1 - T) * g.with_vars(big) for g in J.generators]
    return eliminate(Ideal(gens, big, spair_limit=I.spair_limit), {t})


def saturation_by_element(I: Ideal, g: Polynomial) -> Ideal:
    """I : g^∞ as the elimination of t from I + <1 - t*g>."""
    t = _fresh_name(I.vars)
    big = (t,) + I.vars
    T = Polynomial.variable(big, t)
    gens = [h.with_vars(big) for h in I.generators] + [1 - T * g.with_vars(big)]
    return eliminate(Ideal(gens, big, spair_limit=I.spair_limit), {t})


def saturation(I: Ideal, J: Ideal) -> Ideal:
    """I : J^∞, the ideal of the closure of V(I) minus V(J).

    Computed as the intersection of I : g^∞ over the reduced basis elements
    g of J; generators already in I contribute the unit ideal and are skipped.
    """
    if J.vars != I.vars:
        raise ValueError("ideals live in different rings")
    Jgb = J.groebner()
    if not Jgb:
        return I.derived([Polynomial.constant(I.vars, 1)])
    if len(Jgb) == 1 and Jgb[0].is_constant():
        return I
    result: Ideal | None = None
    for g in Jgb:
        if I.contains(g):
            continue
        part = saturation_by_element(I, g)
        result = part if result is None else intersection(result, part)
    if result is None:
        return I.derived([Polynomial.constant(I.vars, 1)])
    # canonical generators: the reduced grevlex basis
    return I.derived(result.groebner())


def _minimal_polynomial(u: Polynomial, I: Ideal) -> list[Fraction]:
    """Minimal polynomial of multiplication by ``u`` on Q[x]/I (low to high)."""
    gb = I.groebner()
    key = _Keys(GREVLEX)
    basis = [dict(g.items()) for g in gb]
    lms = [g.leading_monomial() for g in gb]
    u_raw = dict(u.items())
    one = {(0,) * len(I.vars): Fraction(1)}

    def times_u(v: _RawPoly) -> _RawPoly:
        out: _RawPoly = {}
        for m1, c1 in v.items():
            for m2, c2 in u_raw.items():
                t = tuple(a + b for a, b in zip(m1, m2))
                out[t] = out.get(t, 0) + c1 * c2
        return _reduce({m: c for m, c in out.items() if c}, basis, lms, key)

    # echelon rows: (pivot monomial, vector, combination of powers of u)
    rows: list[tuple[Monomial, _RawPoly, dict[int, Fraction]]] = []
    power = _reduce(one, basis, lms, key)
    k = 0
    while True:
        vec = dict(power)
        combo = {k: Fraction(1)}
        for pivot, rvec, rcombo in rows:
            c = vec.get(pivot)
            if c:
                for m, x in rvec.items():
                    v = vec.get(m, 0) - c * x
                    if v:
                        vec[m] = v
                    else:
                        vec.pop(m, None)
                for j, x in rcombo.items():
                    combo[j] = combo.get(j, 0) - c * x
        if not vec:
            out = [Fraction(0)] * (k + 1)
            for j, x in combo.items():
                out[j] = x
            return univariate.trim(out)
        pivot = max(vec, key=key)
        scale = 1 / vec[pivot]
        rows.append((pivot, {m: c * scale for m, c in vec.items()},
                     {j: c * scale for j, c in combo.items()}))
        power = times_u(power)
        k += 1


def _separating_degree(I: Ideal, seed: int, attempt: int, which: int, bound: int) -> int:
    s = derive_seed(seed, "point-count", 2 * attempt + which)
    coeffs = [seeded_coefficient(s, "u", i, bound) for i in range(len(I.vars))]
    u = Polynomial.linear(I.vars, coeffs)
    return univariate.squarefree_degree(_minimal_polynomial(u, I))


def distinct_point_count(I: Ideal, seed: int = 0, *, bound: int = 997, retries: int = 5) -> PointCount:
    """Distinct points and length of a zero-dimensional ideal.

    The count is the number of distinct roots of the minimal polynomial of a
    seeded random linear form on the quotient algebra, confirmed by a second
    independent form.  The unit ideal gives ``PointCount(0, 0)``.
    """
    dim = krull_dimension(I)
    if dim == EMPTY_DIMENSION:
        return PointCount(0, 0)
    if dim != 0:
        raise NotZeroDimensional(f"{I} has dimension {dim}")
    mult = len(standard_monomials(I))
    if not I.vars:
        return PointCount(1, mult)
    for attempt in range(retries + 1):
        a = _separating_degree(I, seed, attempt, 0, bound)
        b = _separating_degree(I, seed, attempt, 1, bound)
        if a == b:
            return PointCount(a, mult)
    raise GenericityFailure(f"random linear forms never agreed on the point count of {I}")


def univariate_eliminant(I: Ideal, var: str) -> Polynomial:
    """Monic generator of I ∩ Q[var] for a zero-dimensional ideal."""
    J = eliminate(I, set(I.vars) - {var})
    gb = J.groebner(LEX)
    if len(gb) != 1:
        raise NotZeroDimensional(f"{I} has no univariate eliminant in {var}")
    return gb[0]
