from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eulerdata.errors import InvalidSubstitution, ParseError, SizeError
from eulerdata.poly import (GREVLEX, LEX, MonomialOrder, Polynomial, determinant, elimination_order,
                            minors, parse_polynomial, partial_derivative, substitute_affine, translate)

from conftest import poly

XYZ = ("x", "y", "z")


def p3(text):
    return parse_polynomial(text, XYZ)


def test_parse_two_terms():
    f = p3("x*y - z^2")
    assert f.terms == {(1, 1, 0): 1, (0, 0, 2): -1}


def test_parse_zero():
    f = p3("0")
    assert f.is_zero()
    assert f.terms == {}


def test_parse_cancels_to_single_term():
    assert p3("(x+y)^2 - x^2 - 2*x*y") == p3("y^2")
    assert p3("(x+y)^2 - x^2 - 2*x*y").terms == {(0, 2, 0): 1}


@pytest.mark.parametrize("text, position", [
    ("x + w", 4),
    ("x +", 3),
    ("x ^ y", 4),
    ("2 x", 2),
    ("(x + y", 6),
    ("x $ y", 2),
    ("", 0),
])
def test_parse_errors_carry_position(text, position):
    with pytest.raises(ParseError) as info:
        p3(text)
    assert info.value.position == position


def test_no_implicit_multiplication():
    with pytest.raises(ParseError):
        p3("2x")


def test_unary_minus_binds_looser_than_power():
    assert p3("-x^2") == -(p3("x") ** 2)


def test_rational_coefficients_round_trip():
    f = p3("x/2 - 3*y^2/4 + 1/3")
    assert f.terms[(1, 0, 0)] == Fraction(1, 2)
    assert p3(str(f)) == f


def test_partial_derivatives():
    assert partial_derivative(p3("x^3 + y"), "x") == p3("3*x^2")
    assert partial_derivative(p3("x^3"), "y").is_zero()
    assert partial_derivative(p3("x*y - z^2"), "x") == p3("y")


def test_substitute_affine_examples():
    assert substitute_affine(p3("z^2 - x"), "z", p3("x + 1")) == parse_polynomial("x^2 + x + 1", ("x", "y"))
    assert substitute_affine(p3("x*y - z^2"), "x", p3("0")) == parse_polynomial("-z^2", ("y", "z"))
    assert substitute_affine(poly("x*y - 1"), "y", poly("2*x")) == parse_polynomial("2*x^2 - 1", ("x",))


def test_substitute_affine_rejects_bad_replacements():
    with pytest.raises(InvalidSubstitution):
        substitute_affine(p3("x*y"), "x", p3("x + 1"))
    with pytest.raises(InvalidSubstitution):
        substitute_affine(p3("x*y"), "x", p3("y^2"))


def test_translate_moves_point_to_origin():
    f = poly("(x - 1)^2 + (y + 2)^3")
    assert translate(f, (1, -2)) == poly("x^2 + y^3")


def test_minors_examples():
    x, y, z, w = (Polynomial.variable("xyzw", v) for v in "xyzw")
    assert minors([[x, y]], 1) == [x, y]
    assert minors([[x, y], [z, w]], 2) == [x * w - y * z]
    grid = [[x, y, z], [y, z, w]]
    assert minors(grid, 2) == [x * z - y * y, x * w - z * y, y * w - z * z]
    with pytest.raises(SizeError):
        minors(grid, 3)


def test_determinant_against_leibniz():
    import itertools
    vars = tuple("abcdefghi")
    M = [[Polynomial.variable(vars, vars[3 * i + j]) for j in range(3)] for i in range(3)]
    expected = Polynomial(vars)
    for perm in itertools.permutations(range(3)):
        sign = 1
        for i in range(3):
            for j in range(i + 1, 3):
                if perm[i] > perm[j]:
                    sign = -sign
        term = Polynomial.constant(vars, sign)
        for i in range(3):
            term = term * M[i][perm[i]]
        expected = expected + term
    assert determinant(M) == expected


def test_orders():
    # x > y > z under every order used here
    x, y = (1, 0, 0), (0, 1, 0)
    for order in (LEX, GREVLEX, elimination_order(1)):
        assert order.key(x) > order.key(y)
    assert LEX.key((1, 0, 0)) > LEX.key((0, 5, 0))
    assert GREVLEX.key((0, 5, 0)) > GREVLEX.key((1, 0, 0))
    # grevlex: x*z < y^2
    assert GREVLEX.key((1, 0, 1)) < GREVLEX.key((0, 2, 0))
    # elimination: any monomial in the block beats everything outside it
    assert elimination_order(1).key((1, 0, 0)) > elimination_order(1).key((0, 9, 9))
    with pytest.raises(ValueError):
        MonomialOrder("revlex")


def test_str_is_canonical():
    assert str(p3("x*y - z^2")) == "x*y - z^2"
    assert str(p3("0")) == "0"
    assert str(p3("-1")) == "-1"


# -- properties ---------------------------------------------------------------

monomials = st.tuples(*(st.integers(0, 2) for _ in XYZ))
coefficients = st.fractions(min_value=-5, max_value=5, max_denominator=4)
polys = st.dictionaries(monomials, coefficients, max_size=5).map(lambda t: Polynomial(XYZ, t))
quartics = st.dictionaries(st.tuples(*(st.integers(0, 4) for _ in XYZ)).filter(lambda m: sum(m) <= 4),
                           st.integers(-9, 9), max_size=6).map(lambda t: Polynomial(XYZ, t))
affine = st.tuples(st.integers(-4, 4), st.integers(-4, 4), st.integers(-4, 4)).map(
    lambda c: Polynomial.linear(XYZ, (c[0], c[1], 0), c[2]))


@given(polys, polys, polys)
def test_distributive(p, q, r):
    assert (p + q) * r == p * r + q * r


@given(polys, polys)
def test_commutative(p, q):
    assert p * q == q * p
    assert p + q == q + p


@given(polys)
def test_print_parse_round_trip(p):
    assert parse_polynomial(str(p), XYZ) == p
    assert str(parse_polynomial(str(p), XYZ)) == str(p)


@given(quartics)
def test_mixed_partials_commute(p):
    assert partial_derivative(partial_derivative(p, "x"), "y") == \
        partial_derivative(partial_derivative(p, "y"), "x")


@settings(max_examples=50)
@given(polys, polys, affine)
def test_substitution_is_a_ring_map(p, q, r):
    sub = lambda f: substitute_affine(f, "z", r)
    assert sub(p + q) == sub(p) + sub(q)
    assert sub(p * q) == sub(p) * sub(q)


@given(polys, affine)
def test_substitution_does_not_raise_degree(p, r):
    assert substitute_affine(p, "z", r).total_degree() <= p.total_degree()
