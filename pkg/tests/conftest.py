import sys
from pathlib import Path

import pytest

from eulerdata.geometry import VarietySpec, load_variety
from eulerdata.poly import parse_polynomial

CORPUS = Path(__file__).resolve().parent.parent / "corpus"

CORPUS_NAMES = ["smooth_hyperbola", "cuspidal_cubic", "nodal_cubic", "cone", "smooth_cubic"]


def corpus_variety(name: str) -> VarietySpec:
    return load_variety(CORPUS / f"{name}.json")


def poly(text, vars="xy"):
    return parse_polynomial(text, tuple(vars))


@pytest.fixture(params=CORPUS_NAMES)
def corpus(request):
    return request.param, corpus_variety(request.param)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.summary_lines():
        terminalreporter.write_line(line)
