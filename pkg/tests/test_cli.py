import json
import subprocess
import sys

import pytest

from eulerdata.cli import main, run
from eulerdata.config import RunConfig

from conftest import CORPUS


def cli(capsys, *args):
    code = main([str(a) for a in args])
    return code, capsys.readouterr().out


def cli_json(capsys, *args):
    code, out = cli(capsys, *args, "--format", "json")
    return code, json.loads(out), out


REPORT_KEYS = {"command", "input", "alpha", "eu", "chi", "beta", "milnor", "seeds_used", "agreement", "status"}


def test_eu_nodal(capsys):
    code, report, _ = cli_json(capsys, "eu", CORPUS / "nodal_cubic.json")
    assert code == 0
    assert REPORT_KEYS <= report.keys()
    assert report["eu"] == 1 and report["alpha"] == [2, 3] and report["agreement"] is True


def test_eu_text_shows_alternating_sum(capsys):
    code, out = cli(capsys, "eu", CORPUS / "cone.json")
    assert code == 0
    assert "(-1)^2*a1 + (-1)^1*a2 + (-1)^0*a3 = (0) + (-2) + (2) = 0" in out


def test_chi_hyperbola(capsys):
    code, report, _ = cli_json(capsys, "chi", CORPUS / "smooth_hyperbola.json")
    assert code == 0
    assert report["chi"] == 0 and report["sum_mu"] == 0 and report["milnor"] == []


def test_chi_cusp(capsys):
    code, report, _ = cli_json(capsys, "chi", CORPUS / "cuspidal_cubic.json")
    assert code == 0
    assert (report["eu"], report["chi"], report["beta"]) == (2, 1, [1])
    assert report["milnor"] == [{"point": ["0", "0"], "mu": 2, "mu_sectional": 1}]
    assert report["chi_check"]["chi_pencil"] == 1


def test_duality_cone(capsys):
    code, report, _ = cli_json(capsys, "duality", CORPUS / "cone_strata.json")
    assert code == 0
    assert (report["eu"], report["chi"], report["agreement"]) == (0, 1, True)


def test_duality_with_explicit_variety(capsys):
    code, report, _ = cli_json(capsys, "duality", CORPUS / "nodal_cubic.json", CORPUS / "nodal_cubic_strata.json")
    assert code == 0 and report["duality"]["all_consistent"]


def test_duality_mismatch_exit_code(tmp_path, capsys):
    doc = json.loads((CORPUS / "nodal_cubic_strata.json").read_text())
    doc["variety"] = str(CORPUS / "nodal_cubic.json")
    for s in doc["strata"]:
        if s["name"] == "node":
            s["eu_normal"] = 3
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    code, report, _ = cli_json(capsys, "duality", bad)
    assert code == 2
    assert report["status"] == "mismatch" and report["agreement"] is False


def test_milnor_and_point(capsys):
    code, report, _ = cli_json(capsys, "milnor", CORPUS / "nodal_cubic.json")
    assert code == 0 and report["milnor"][0]["mu"] == 1
    code, report, _ = cli_json(capsys, "milnor", CORPUS / "cuspidal_cubic.json", "--point", "0,0")
    assert report["milnor"] == [{"point": ["0", "0"], "mu": 2, "mu_sectional": 1}]


def test_beta_and_degree(capsys):
    _, report, _ = cli_json(capsys, "beta", CORPUS / "cone.json")
    assert report["beta"] == [1, 0]
    _, report, _ = cli_json(capsys, "degree", CORPUS / "smooth_cubic.json")
    assert report["degree"] == 3


def test_json_round_trip_and_determinism(capsys):
    _, report, first = cli_json(capsys, "chi", CORPUS / "nodal_cubic.json", "--seed", "5")
    _, _, second = cli_json(capsys, "chi", CORPUS / "nodal_cubic.json", "--seed", "5")
    assert first == second
    assert json.dumps(report, indent=2, sort_keys=True) + "\n" == first


def test_parse_error_reports_file_and_position(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"vars": ["x", "y"], "equations": ["x*y -* 1"], "expected_dim": 1}))
    code, report, _ = cli_json(capsys, "eu", bad)
    assert code == 1
    assert report["status"] == "ParseError"
    assert str(bad) in report["error"] and "position 5" in report["error"]


def test_bad_point(capsys):
    code, report, _ = cli_json(capsys, "milnor", CORPUS / "nodal_cubic.json", "--point", "0,a")
    assert code == 1 and report["status"] == "ParseError"


def test_missing_file(capsys):
    code, report, _ = cli_json(capsys, "eu", "/nonexistent/file.json")
    assert code == 1 and report["status"] == "InputError"


def test_spair_limit_flag_and_env(capsys, monkeypatch):
    code, report, _ = cli_json(capsys, "eu", CORPUS / "smooth_cubic.json", "--spair-limit", "1")
    assert code == 1 and report["status"] == "ResourceLimit"
    monkeypatch.setenv("EULERDATA_SPAIR_LIMIT", "1")
    code, report, _ = cli_json(capsys, "eu", CORPUS / "smooth_cubic.json")
    assert report["status"] == "ResourceLimit"
    code, report, _ = cli_json(capsys, "eu", CORPUS / "smooth_cubic.json", "--spair-limit", "100000")
    assert code == 0


def test_run_api_wrong_arity():
    code, report = run("eu", [], RunConfig())
    assert code == 1 and report["status"] == "InputError"


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "eulerdata", "eu", str(CORPUS / "cone.json"), "--format", "json"],
                         capture_output=True, text=True, check=True).stdout
    assert json.loads(out)["eu"] == 0


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_seed_independence(capsys, seed):
    _, report, _ = cli_json(capsys, "chi", CORPUS / "cone.json", "--seed", seed)
    assert (report["eu"], report["chi"]) == (0, 1)
