import pytest

from eulerdata.errors import CommonComponent
from eulerdata.oracle import (BivariateSystem, chi_smooth_plane_curve, resultant,
                              resultant_point_count, sylvester_matrix)

from conftest import poly


def system(p, q):
    return BivariateSystem(poly(p), poly(q))


def test_resultant_point_count_examples():
    assert resultant_point_count(system("x^2 - 1", "y - x")) == 2
    assert resultant_point_count(system("x*y - 1", "2*x - y")) == 2
    assert resultant_point_count(system("x^2", "y")) == 1
    assert resultant_point_count(system("x - 1", "x - 2")) == 0


def test_grid_points_share_x_coordinates():
    assert resultant_point_count(system("x^2 - x", "y^2 - y")) == 4


def test_common_component():
    with pytest.raises(CommonComponent):
        resultant_point_count(system("x*y", "x*(y - 1)"))


def test_resultant_of_linear_pair():
    # Res_y(y - x, y + x) = det [[1, -x], [1, x]] = 2x
    assert resultant(poly("y - x"), poly("y + x"), "y") == poly("2*x")
    assert len(sylvester_matrix(poly("y^2 - x"), poly("y - 1"), "y")) == 3


def test_resultant_of_constant_in_y():
    assert resultant(poly("x^2 - 1"), poly("y^2 + x"), "y") == poly("(x^2 - 1)^2")


@pytest.mark.parametrize("n, k, chi", [(2, 2, 0), (3, 3, -3), (1, 1, 1)])
def test_chi_smooth_plane_curve(n, k, chi):
    assert chi_smooth_plane_curve(n, k) == chi


def test_oracle_does_not_import_the_engine():
    import eulerdata.oracle as oracle
    source = open(oracle.__file__).read()
    assert "ideal" not in source


from hypothesis import given, settings, strategies as st  # noqa: E402

from eulerdata.ideal import Ideal, distinct_point_count  # noqa: E402
from eulerdata.poly import Polynomial  # noqa: E402

small = st.integers(-3, 3)
linear = st.tuples(small, small, small).filter(lambda t: t[0] or t[1])


def product_of_lines(forms):
    xy = ("x", "y")
    out = Polynomial.constant(xy, 1)
    for a, b, c in forms:
        out = out * (Polynomial.variable(xy, "x") * a + Polynomial.variable(xy, "y") * b + c)
    return out


@settings(max_examples=25, deadline=None)
@given(st.lists(linear, min_size=1, max_size=3), st.lists(linear, min_size=1, max_size=2))
def test_oracle_matches_engine_on_line_arrangements(p_forms, q_forms):
    p, q = product_of_lines(p_forms), product_of_lines(q_forms)
    try:
        expected = resultant_point_count(BivariateSystem(p, q))
    except CommonComponent:
        return
    assert distinct_point_count(Ideal([p, q])).count == expected
