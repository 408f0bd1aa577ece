"""Brute-force verifiers that do not touch the Groebner engine.

Point counts of bivariate systems come from Sylvester resultants, and
Euler characteristics of smooth plane curves from the genus-degree formula.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import univariate
from .config import derive_seed, seeded_coefficient
from .errors import CommonComponent, GenericityFailure
from .poly import Polynomial, determinant

SHEAR_ATTEMPTS = 5


@dataclass(frozen=True)
class BivariateSystem:
    p: Polynomial
    q: Polynomial

    def __post_init__(self):
        if len(self.p.vars) != 2 or self.p.vars != self.q.vars:
            raise ValueError("both polynomials must live in the same two variables")
        if self.p.is_zero() or self.q.is_zero():
            raise ValueError("bivariate system needs nonzero polynomials")


def sylvester_matrix(p: Polynomial, q: Polynomial, var: str) -> list[list[Polynomial]]:
    """Sylvester matrix of p and q as polynomials in ``var``."""
    a = p.coefficients_in(var)[::-1]  # highest degree first
    b = q.coefficients_in(var)[::-1]
    m, n = len(a) - 1, len(b) - 1
    zero = Polynomial(p.vars)
    size = m + n
    rows = []
    for i in range(n):
        rows.append([zero] * i + a + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + b + [zero] * (size - n - 1 - i))
    return rows


def resultant(p: Polynomial, q: Polynomial, var: str) -> Polynomial:
    """Res_var(p, q) by cofactor expansion of the Sylvester matrix."""
    m, n = p.degree_in(var), q.degree_in(var)
    if m == 0 and n == 0:
        return Polynomial.constant(p.vars, 1)
    if m == 0:
        return p ** n
    if n == 0:
        return q ** m
    return determinant(sylvester_matrix(p, q, var))


def _sheared_count(S: BivariateSystem, shear: int) -> int | None:
    """Distinct roots of Res_y after x -> x + shear*y; None if it vanishes."""
    x, y = S.p.vars
    X = Polynomial.variable(S.p.vars, x)
    Y = Polynomial.variable(S.p.vars, y)
    image = {x: X + Y * shear}
    p, q = S.p.substitute(image), S.q.substitute(image)
    res = resultant(p, q, y)
    if res.is_zero():
        return None
    return univariate.squarefree_degree(univariate.from_polynomial(res, x))


def resultant_point_count(S: BivariateSystem, seed: int = 0, bound: int = 997) -> int:
    """Number of distinct common zeros in C^2.

    After a seeded shear the x-coordinates of distinct solutions are distinct
    and both leading coefficients in y are constants, so the squarefree degree
    of the resultant counts the solutions.  A second shear must agree.
    """
    vanishing = 0
    for attempt in range(SHEAR_ATTEMPTS):
        s1 = seeded_coefficient(derive_seed(seed, "shear", attempt), "shear", 0, bound)
        s2 = seeded_coefficient(derive_seed(seed, "shear", attempt), "shear", 1, bound)
        a, b = _sheared_count(S, s1), _sheared_count(S, s2)
        if a is None and b is None:
            vanishing += 1
            if vanishing >= 2:
                raise CommonComponent("resultant vanishes identically under independent shears")
            continue
        if a is not None and a == b:
            return a
    raise GenericityFailure("sheared resultants never agreed")


def chi_smooth_plane_curve(n: int, points_at_infinity: int) -> int:
    """chi of a smooth affine plane curve of degree n: 2 - 2g minus the punctures."""
    if n < 1 or points_at_infinity < 1:
        raise ValueError("degree and number of points at infinity must be positive")
    return 2 - (n - 1) * (n - 2) - points_at_infinity
