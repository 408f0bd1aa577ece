"""Exact multivariate polynomials over Q.

A :class:`Polynomial` is a map from exponent tuples to nonzero
:class:`fractions.Fraction` coefficients together with the ordered tuple of
variable names it lives over.  Term storage carries no monomial order; orders
are passed to the operations that need one (leading terms, Groebner bases).
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import InvalidSubstitution, ParseError, SizeError

Monomial = tuple[int, ...]
Scalar = int | Fraction


def _grevlex_key(m: Monomial) -> tuple:
    return (sum(m), tuple(-e for e in reversed(m)))


@dataclass(frozen=True)
class MonomialOrder:
    """Total monomial order.

    ``kind`` is ``"lex"``, ``"grevlex"`` or ``"elim"``; for ``"elim"`` the
    first ``block`` variables form a grevlex block that dominates a grevlex
    order on the remaining ones, so a Groebner basis under it eliminates them.
    """

    kind: str = "grevlex"
    block: int = 0

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex", "elim"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "elim" and self.block < 0:
            raise ValueError("elimination block size must be non-negative")

    def key(self, m: Monomial):
        if self.kind == "lex":
            return m
        if self.kind == "grevlex":
            return _grevlex_key(m)
        k = self.block
        return (_grevlex_key(m[:k]), _grevlex_key(m[k:]))

    def __str__(self) -> str:
        return f"elim({self.block})" if self.kind == "elim" else self.kind


LEX = MonomialOrder("lex")
GREVLEX = MonomialOrder("grevlex")


def elimination_order(k: int) -> MonomialOrder:
    return MonomialOrder("elim", k)


class Polynomial:
    """Immutable sparse polynomial with rational coefficients."""

    __slots__ = ("vars", "_terms", "_hash")

    def __init__(self, vars: Sequence[str], terms: Mapping[Monomial, Scalar] | None = None):
        self.vars = tuple(vars)
        n = len(self.vars)
        clean: dict[Monomial, Fraction] = {}
        for mono, c in (terms or {}).items():
            mono = tuple(mono)
            if len(mono) != n:
                raise ValueError(f"monomial {mono} does not match {n} variables")
            if c:
                clean[mono] = Fraction(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, vars: tuple[str, ...], terms: dict[Monomial, Fraction]) -> "Polynomial":
        # trusted constructor: terms already canonical
        p = cls.__new__(cls)
        p.vars = vars
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, vars: Sequence[str], c: Scalar) -> "Polynomial":
        vars = tuple(vars)
        return cls(vars, {(0,) * len(vars): c})

    @classmethod
    def variable(cls, vars: Sequence[str], name: str) -> "Polynomial":
        vars = tuple(vars)
        if name not in vars:
            raise ValueError(f"undeclared variable {name!r}")
        e = [0] * len(vars)
        e[vars.index(name)] = 1
        return cls(vars, {tuple(e): 1})

    @classmethod
    def linear(cls, vars: Sequence[str], coefficients: Sequence[Scalar], constant: Scalar = 0) -> "Polynomial":
        vars = tuple(vars)
        if len(coefficients) != len(vars):
            raise ValueError("need one coefficient per variable")
        terms: dict[Monomial, Scalar] = {(0,) * len(vars): constant}
        for i, c in enumerate(coefficients):
            e = [0] * len(vars)
            e[i] = 1
            terms[tuple(e)] = c
        return cls(vars, terms)

    # -- basic protocol ---------------------------------------------------

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not any(m) for m in self._terms)

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * len(self.vars), Fraction(0))

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.vars == other.vars and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_term() == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.vars, frozenset(self._terms.items())))
        return self._hash

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.vars != self.vars:
                raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.vars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial._raw(self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.vars, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return Polynomial._raw(self.vars, {})
            return Polynomial._raw(self.vars, {m: c * other for m, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial._raw(self.vars, {m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.constant(self.vars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- structure ---------------------------------------------------------

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    def degree_in(self, var: str) -> int:
        i = self.vars.index(var)
        return max((m[i] for m in self._terms), default=-1)

    def support(self) -> set[str]:
        """Variables that actually occur."""
        return {v for i, v in enumerate(self.vars) if any(m[i] for m in self._terms)}

    def leading_monomial(self, order: MonomialOrder = GREVLEX) -> Monomial:
        return max(self._terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder = GREVLEX) -> Fraction:
        return self._terms[self.leading_monomial(order)]

    def monic(self, order: MonomialOrder = GREVLEX) -> "Polynomial":
        if not self._terms:
            return self
        return self * (1 / self.leading_coefficient(order))

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        if len(point) != len(self.vars):
            raise ValueError("point has wrong number of coordinates")
        total = Fraction(0)
        for m, c in self._terms.items():
            t = c
            for x, e in zip(point, m):
                if e:
                    t *= Fraction(x) ** e
            total += t
        return total

    def with_vars(self, new_vars: Sequence[str]) -> "Polynomial":
        """Re-express over ``new_vars``; variables in use must be kept."""
        new_vars = tuple(new_vars)
        missing = self.support() - set(new_vars)
        if missing:
            raise ValueError(f"cannot drop variables in use: {sorted(missing)}")
        pos = [new_vars.index(v) if v in new_vars else None for v in self.vars]
        out = {}
        for m, c in self._terms.items():
            e = [0] * len(new_vars)
            for i, p in enumerate(pos):
                if p is not None:
                    e[p] = m[i]
            out[tuple(e)] = c
        return Polynomial._raw(new_vars, out)

    def substitute(self, mapping: Mapping[str, "Polynomial | Scalar"]) -> "Polynomial":
        """Simultaneous substitution of variables by polynomials over ``self.vars``."""
        images = []
        for i, v in enumerate(self.vars):
            r = mapping.get(v)
            if r is None:
                images.append(None)
            else:
                images.append(self._coerce(r))
        powers: dict[tuple[int, int], Polynomial] = {}

        def power(i: int, e: int) -> Polynomial:
            if (i, e) not in powers:
                powers[(i, e)] = images[i] ** e
            return powers[(i, e)]

        result = Polynomial._raw(self.vars, {})
        for m, c in self._terms.items():
            kept = tuple(0 if images[i] is not None else e for i, e in enumerate(m))
            t = Polynomial._raw(self.vars, {kept: c})
            for i, e in enumerate(m):
                if e and images[i] is not None:
                    t = t * power(i, e)
            result = result + t
        return result

    def coefficients_in(self, var: str) -> list["Polynomial"]:
        """Coefficients of powers of ``var`` (low to high), free of ``var``."""
        i = self.vars.index(var)
        buckets: dict[int, dict[Monomial, Fraction]] = {}
        for m, c in self._terms.items():
            rest = m[:i] + (0,) + m[i + 1:]
            buckets.setdefault(m[i], {})[rest] = c
        deg = max(buckets, default=-1)
        return [Polynomial._raw(self.vars, buckets.get(k, {})) for k in range(deg + 1)]

    def sorted_terms(self, order: MonomialOrder = GREVLEX) -> list[tuple[Monomial, Fraction]]:
        return sorted(self._terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    # -- printing ----------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for m, c in self.sorted_terms(GREVLEX):
            mono = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in zip(self.vars, m) if e
            )
            a = abs(c)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            sign = "-" if c < 0 else "+"
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r}, vars={self.vars})"


# -- parser -------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # trailing whitespace
            break
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), start))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*^/()":
                raise ParseError(f"unexpected character {ch!r}", start, text)
            tokens.append(("op", ch, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, vars: tuple[str, ...]):
        self.text = text
        self.vars = vars
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message: str, tok=None):
        tok = tok or self.peek()
        raise ParseError(message, tok[2], self.text)

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            self.fail("empty expression")
        p = self.expr()
        if self.peek()[0] != "end":
            self.fail(f"unexpected token {self.peek()[1]!r}")
        return p

    def expr(self) -> Polynomial:
        p = self.term()
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> Polynomial:
        p = self.unary()
        while self.peek()[:2] in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            if op == "*":
                p = p * self.unary()
            else:
                tok = self.take()
                if tok[0] != "int":
                    self.fail("division only by an integer literal", tok)
                if tok[1] == 0:
                    self.fail("division by zero", tok)
                p = p * Fraction(1, tok[1])
        return p

    def unary(self) -> Polynomial:
        if self.peek()[:2] == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek()[:2] == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            tok = self.take()
            if tok[0] != "int":
                self.fail("exponent must be a non-negative integer literal", tok)
            return base ** tok[1]
        return base

    def atom(self) -> Polynomial:
        tok = self.take()
        kind, value, pos = tok
        if kind == "int":
            return Polynomial.constant(self.vars, value)
        if kind == "name":
            if value not in self.vars:
                self.fail(f"undeclared variable {value!r}", tok)
            return Polynomial.variable(self.vars, value)
        if (kind, value) == ("op", "("):
            p = self.expr()
            close = self.take()
            if close[:2] != ("op", ")"):
                self.fail("expected ')'", close)
            return p
        if kind == "end":
            self.fail("unexpected end of input", tok)
        self.fail(f"unexpected token {value!r}", tok)


def parse_polynomial(text: str, vars: Sequence[str]) -> Polynomial:
    """Parse ``text`` over the declared ``vars``.

    Grammar: integer literals, declared identifiers, ``+ - * ^`` and
    parentheses; ``^`` takes a non-negative integer literal.  Division is
    accepted only by a nonzero integer literal, so rational coefficients
    printed by ``str(Polynomial)`` read back unchanged.
    """
    vars = tuple(vars)
    if len(set(vars)) != len(vars):
        raise ValueError("duplicate variable names")
    return _Parser(text, vars).parse()


# -- calculus and substitution -----------------------------------------------

def partial_derivative(p: Polynomial, var: str) -> Polynomial:
    if var not in p.vars:
        raise ValueError(f"undeclared variable {var!r}")
    i = p.vars.index(var)
    out = {}
    for m, c in p.items():
        if m[i]:
            out[m[:i] + (m[i] - 1,) + m[i + 1:]] = c * m[i]
    return Polynomial._raw(p.vars, out)


def gradient(p: Polynomial) -> list[Polynomial]:
    return [partial_derivative(p, v) for v in p.vars]


def substitute_affine(p: Polynomial, var: str, replacement: Polynomial) -> Polynomial:
    """Replace ``var`` by an affine ``replacement`` and drop it from the ring."""
    if var not in p.vars:
        raise InvalidSubstitution(f"undeclared variable {var!r}")
    if replacement.vars != p.vars:
        replacement = replacement.with_vars(p.vars)
    if var in replacement.support():
        raise InvalidSubstitution(f"replacement involves {var!r}")
    if replacement.total_degree() > 1:
        raise InvalidSubstitution("replacement must have total degree <= 1")
    remaining = tuple(v for v in p.vars if v != var)
    return p.substitute({var: replacement}).with_vars(remaining)


def translate(p: Polynomial, point: Sequence[Scalar]) -> Polynomial:
    """Return ``p(x + point)``, moving ``point`` to the origin."""
    mapping = {
        v: Polynomial.variable(p.vars, v) + Fraction(c)
        for v, c in zip(p.vars, point)
        if c
    }
    return p.substitute(mapping) if mapping else p


# -- matrices -----------------------------------------------------------------

def determinant(matrix: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Determinant by memoised cofactor expansion along rows."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise SizeError("determinant needs a square matrix")
    if n == 0:
        raise SizeError("empty matrix")
    vars = matrix[0][0].vars
    memo: dict[int, Polynomial] = {}

    def expand(row: int, cols: int) -> Polynomial:
        # cols: bitmask of columns still available
        if row == n:
            return Polynomial.constant(vars, 1)
        if cols in memo:
            return memo[cols]
        total = Polynomial._raw(vars, {})
        sign = 1
        for j in range(n):
            if cols >> j & 1:
                entry = matrix[row][j]
                if entry:
                    sub = expand(row + 1, cols & ~(1 << j))
                    total = total + entry * sub * sign
                sign = -sign
        memo[cols] = total
        return total

    return expand(0, (1 << n) - 1)


def minors(matrix: Sequence[Sequence[Polynomial]], size: int) -> list[Polynomial]:
    """All ``size`` x ``size`` minors, rows subsets outer, column subsets inner."""
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    if size < 1 or size > min(rows, cols):
        raise SizeError(f"minor size {size} exceeds a {rows}x{cols} matrix")
    out = []
    for rs in itertools.combinations(range(rows), size):
        for cs in itertools.combinations(range(cols), size):
            out.append(determinant([[matrix[r][c] for c in cs] for r in rs]))
    return out


def jacobian(polys: Iterable[Polynomial], vars: Sequence[str]) -> list[list[Polynomial]]:
    return [[partial_derivative(p, v) for v in vars] for p in polys]
