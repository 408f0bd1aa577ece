import dataclasses

import pytest

from eulerdata.errors import FixtureError
from eulerdata.strat import (StratificationFixture, check_duality, check_fixture, eval_chi_pencil,
                             eval_formula_one, eval_formula_two, load_fixture)

from conftest import CORPUS


def fixture(name):
    return load_fixture(CORPUS / f"{name}_strata.json")


def corrupt(F, stratum, field, delta=1):
    strata = tuple(
        dataclasses.replace(s, **{field: getattr(s, field) + delta}) if s.name == stratum else s
        for s in F.strata)
    return dataclasses.replace(F, strata=strata)


@pytest.mark.parametrize("name, eu, chi", [
    ("nodal_cubic", 1, 0), ("cone", 0, 1), ("smooth_cubic", -3, -3), ("cuspidal_cubic", 2, 1),
])
def test_formulas(name, eu, chi):
    F = fixture(name)
    assert eval_formula_one(F) == eu
    assert eval_formula_two(F) == chi
    assert eval_chi_pencil(F, seed=0) == chi


def test_smooth_single_stratum_gives_eu_equal_chi():
    F = fixture("smooth_cubic")
    assert eval_formula_one(F) == eval_formula_two(F) == F.chi_total


@pytest.mark.parametrize("name, eu, chi", [("nodal_cubic", 1, 0), ("cone", 0, 1)])
def test_check_duality(name, eu, chi):
    report = check_duality(fixture(name), seed=0)
    assert report.all_consistent, report.to_dict()
    assert (report.eu, report.chi) == (eu, chi)


def test_corrupted_normal_obstruction_flags_formula_one():
    report = check_duality(corrupt(fixture("nodal_cubic"), "node", "eu_normal", 1), seed=0)
    assert not report.all_consistent
    assert any(r.name.startswith("Eu = sum") and r.status == "mismatch" for r in report.rows)


@pytest.mark.parametrize("name", ["nodal_cubic", "cone"])
@pytest.mark.parametrize("field", ["chi", "eu_normal", "chi_nmd", "eu_closure", "cl_betti"])
def test_any_single_field_corruption_is_detected(name, field):
    F = fixture(name)
    for s in F.strata:
        if getattr(s, field) is None:
            continue
        assert not check_duality(corrupt(F, s.name, field), seed=0).all_consistent


def test_fixture_invariants():
    F = fixture("nodal_cubic")
    check_fixture(F)
    with pytest.raises(FixtureError, match="eu_normal"):
        check_fixture(corrupt(F, "regular", "eu_normal"))
    with pytest.raises(FixtureError, match="chi_nmd"):
        check_fixture(corrupt(F, "regular", "chi_nmd"))
    with pytest.raises(FixtureError, match="eu_closure"):
        check_fixture(corrupt(F, "node", "eu_closure"))
    with pytest.raises(FixtureError, match="cl_betti"):
        check_fixture(corrupt(F, "node", "chi_nmd"))
    with pytest.raises(FixtureError, match="sum"):
        check_fixture(dataclasses.replace(F, chi_total=5))
    with pytest.raises(FixtureError, match="top-dimensional"):
        check_fixture(dataclasses.replace(F, strata=F.strata[1:]))


def test_pencil_needs_closure_equations_for_curves():
    doc = {
        "variety": {"ambient": 3, "vars": ["x", "y", "z"], "equations": ["x*y"], "expected_dim": 2},
        "chi_slice": 1,
        "strata": [
            {"name": "regular", "dim": 2, "chi": 0, "eu_normal": 1, "chi_nmd": 1, "eu_closure": 0},
            {"name": "axis", "dim": 1, "chi": 1, "eu_normal": 2, "chi_nmd": -1, "eu_closure": 1},
        ],
    }
    F = StratificationFixture.from_dict(doc)
    with pytest.raises(FixtureError, match="closure equations"):
        eval_chi_pencil(F)
    report = check_duality(F)
    assert any(r.status == "FixtureError" for r in report.rows)


def test_pencil_with_curve_stratum():
    # two planes meeting along the z-axis, Y = {xy = 0} in C^3, chi(Y) = 1
    # strata: regular part (two punctured planes, chi 0) and the axis (chi 1);
    # the transversal slice at the axis is a node, chi(NMD) = -1, Eu_Y = 2
    doc = {
        "variety": {"ambient": 3, "vars": ["x", "y", "z"], "equations": ["x*y"], "expected_dim": 2},
        "chi_total": 1,
        "chi_slice": 1,
        "strata": [
            {"name": "regular", "dim": 2, "chi": 0, "eu_normal": 1, "chi_nmd": 1, "eu_closure": 2},
            {"name": "axis", "dim": 1, "chi": 1, "eu_normal": 2, "chi_nmd": -1, "eu_closure": 1,
             "cl_betti": 1, "equations": ["x", "y"]},
        ],
    }
    F = StratificationFixture.from_dict(doc)
    assert eval_formula_two(F) == 2 * 1 + 1 * -1 == 1
    assert eval_chi_pencil(F) == 1
