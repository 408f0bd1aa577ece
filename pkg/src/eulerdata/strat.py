"""Evaluate the stratified Euler-data formulas from fixture files and
compare them with invariants computed by the engine.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

from .config import DEFAULT_CONFIG, RunConfig, derive_seed
from .errors import EulerDataError, FixtureError
from .euler import chi_computation, eu_from_alpha, global_euler_obstruction
from .geometry import VarietySpec, generic_slice, is_smooth
from .polar import alpha_one, alpha_series


@dataclass(frozen=True)
class StratumRecord:
    name: str
    dim: int
    chi: int
    eu_normal: int
    chi_nmd: int
    eu_closure: int
    cl_betti: int | None = None
    equations: tuple[str, ...] | None = None

    @classmethod
    def from_dict(cls, doc: dict) -> "StratumRecord":
        try:
            eqs = doc.get("equations")
            return cls(
                name=str(doc["name"]),
                dim=int(doc["dim"]),
                chi=int(doc["chi"]),
                eu_normal=int(doc["eu_normal"]),
                chi_nmd=int(doc["chi_nmd"]),
                eu_closure=int(doc["eu_closure"]),
                cl_betti=None if doc.get("cl_betti") is None else int(doc["cl_betti"]),
                equations=None if eqs is None else tuple(eqs),
            )
        except KeyError as exc:
            raise FixtureError(f"stratum record missing field {exc.args[0]!r}") from None

    def to_dict(self) -> dict:
        out = {
            "name": self.name, "dim": self.dim, "chi": self.chi,
            "eu_normal": self.eu_normal, "chi_nmd": self.chi_nmd,
            "eu_closure": self.eu_closure, "cl_betti": self.cl_betti,
        }
        if self.equations is not None:
            out["equations"] = list(self.equations)
        return out


@dataclass(frozen=True)
class StratificationFixture:
    variety: VarietySpec
    strata: tuple[StratumRecord, ...]
    chi_total: int | None = None
    chi_slice: int | None = None

    @property
    def top(self) -> StratumRecord:
        tops = [s for s in self.strata if s.dim == self.variety.expected_dim]
        if len(tops) != 1:
            raise FixtureError(f"expected one top-dimensional stratum, found {len(tops)}")
        return tops[0]

    @classmethod
    def from_dict(cls, doc: dict, *, base: Path | None = None,
                  variety: VarietySpec | None = None) -> "StratificationFixture":
        if variety is None:
            ref = doc.get("variety")
            if ref is None:
                raise FixtureError("fixture names no variety")
            if isinstance(ref, str):
                path = Path(ref) if base is None else base / ref
                ref = json.loads(path.read_text())
            variety = VarietySpec.from_dict(ref)
        strata = tuple(StratumRecord.from_dict(s) for s in doc.get("strata", []))
        return cls(variety, strata, doc.get("chi_total"), doc.get("chi_slice"))


def load_fixture(path: str | Path, variety: VarietySpec | None = None) -> StratificationFixture:
    path = Path(path)
    return StratificationFixture.from_dict(json.loads(path.read_text()), base=path.parent, variety=variety)


def check_fixture(F: StratificationFixture) -> None:
    """Raise :class:`FixtureError` on the first violated fixture invariant."""
    d = F.variety.expected_dim
    if not F.strata:
        raise FixtureError("fixture has no strata")
    names = [s.name for s in F.strata]
    if len(set(names)) != len(names):
        raise FixtureError("stratum names must be unique")
    for s in F.strata:
        if not 0 <= s.dim <= d:
            raise FixtureError(f"stratum {s.name} has dimension {s.dim} outside [0, {d}]")
    top = F.top
    if top.eu_normal != 1:
        raise FixtureError(f"top stratum {top.name} must have eu_normal = 1")
    if top.chi_nmd != 1:
        raise FixtureError(f"top stratum {top.name} must have chi_nmd = 1")
    for s in F.strata:
        if s.dim == 0 and s.eu_closure != 1:
            raise FixtureError(f"point stratum {s.name} must have eu_closure = 1")
        if s.cl_betti is not None:
            if s is top:
                raise FixtureError("the top stratum has an empty complex link")
            if s.cl_betti < 0:
                raise FixtureError(f"stratum {s.name} has negative cl_betti")
            chi_cl = 1 + (-1) ** (d - s.dim - 1) * s.cl_betti
            if s.chi_nmd != 1 - chi_cl:
                raise FixtureError(
                    f"stratum {s.name}: chi_nmd = {s.chi_nmd} but cl_betti gives {1 - chi_cl}")
    if F.chi_total is not None and sum(s.chi for s in F.strata) != F.chi_total:
        raise FixtureError(
            f"stratum Euler characteristics sum to {sum(s.chi for s in F.strata)}, "
            f"not chi_total = {F.chi_total}")


def eval_formula_one(F: StratificationFixture) -> int:
    """Eu(Y) as the sum of chi(A_i) * Eu_Y(A_i)."""
    check_fixture(F)
    return sum(s.chi * s.eu_normal for s in F.strata)


def eval_formula_two(F: StratificationFixture) -> int:
    """chi(Y) as the sum of Eu(A_i) * chi(NMD(A_i))."""
    check_fixture(F)
    return sum(s.eu_closure * s.chi_nmd for s in F.strata)


def closure_spec(F: StratificationFixture, s: StratumRecord) -> VarietySpec:
    if s.equations is None:
        if s is F.top:
            return F.variety
        raise FixtureError(f"stratum {s.name} has no closure equations")
    return VarietySpec.from_strings(F.variety.vars, s.equations, s.dim)


def slice_euler_characteristic(F: StratificationFixture, seed: int,
                               config: RunConfig = DEFAULT_CONFIG) -> int:
    """chi(Y ∩ H): the fixture value, else Eu of a generic slice when it is smooth."""
    if F.chi_slice is not None:
        return F.chi_slice
    W = generic_slice(F.variety, derive_seed(seed, "pencil-slice"), config=config)
    if W.expected_dim > 0 and not is_smooth(W, config):
        raise FixtureError("generic slice is singular; fixture must supply chi_slice")
    return eu_from_alpha(alpha_series(W, derive_seed(seed, "pencil-slice-alpha"), config))


def eval_chi_pencil(F: StratificationFixture, seed: int = 0, config: RunConfig = DEFAULT_CONFIG) -> int:
    """chi(Y) from one pencil step: chi(Y ∩ H) plus signed Morse contributions
    (-1)^dim * alpha^(1)(closure) * chi(NMD) of every stratum.
    """
    check_fixture(F)
    return _pencil_unchecked(F, seed, config)


@dataclass
class CheckRow:
    name: str
    value: int | None
    reference: int | None
    reference_source: str | None
    status: str  # "ok", "mismatch", "skipped" or an error name
    detail: str = ""

    def to_dict(self) -> dict:
        return {
            "name": self.name, "value": self.value, "reference": self.reference,
            "reference_source": self.reference_source, "status": self.status,
            "detail": self.detail,
        }


@dataclass
class DualityReport:
    rows: list[CheckRow] = field(default_factory=list)
    eu: int | None = None
    chi: int | None = None

    @property
    def all_consistent(self) -> bool:
        return bool(self.rows) and all(r.status in ("ok", "skipped") for r in self.rows)

    def failing(self) -> list[str]:
        return [r.name for r in self.rows if r.status not in ("ok", "skipped")]

    def to_dict(self) -> dict:
        return {
            "all_consistent": self.all_consistent,
            "eu": self.eu,
            "chi": self.chi,
            "rows": [r.to_dict() for r in self.rows],
        }


def _attempt(fn: Callable[[], int]) -> tuple[int | None, str | None, str]:
    try:
        return fn(), None, ""
    except EulerDataError as exc:
        return None, exc.status, str(exc)


def check_duality(F: StratificationFixture, seed: int = 0, config: RunConfig = DEFAULT_CONFIG) -> DualityReport:
    """Evaluate every formula the fixture supports against every available reference.

    Never raises on fixture or engine errors; they become row statuses.
    """
    report = DualityReport()
    rows = report.rows

    def compare(name: str, value_fn: Callable[[], int], reference: int | None, source: str | None):
        value, err, detail = _attempt(value_fn)
        if err is not None:
            rows.append(CheckRow(name, None, reference, source, err, detail))
        elif reference is None:
            rows.append(CheckRow(name, value, None, None, "skipped", "no reference available"))
        else:
            rows.append(CheckRow(name, value, reference, source,
                                 "ok" if value == reference else "mismatch"))
        return value

    _, err, detail = _attempt(lambda: check_fixture(F) or 0)
    rows.append(CheckRow("fixture invariants", None, None, None, err or "ok", detail))

    eu, err, detail = _attempt(lambda: global_euler_obstruction(F.variety, derive_seed(seed, "eu"), config))
    if err is not None:
        rows.append(CheckRow("engine Eu", None, None, None, err, detail))
    report.eu = eu

    chi_engine = None
    if F.variety.is_hypersurface():
        chi_engine, err, detail = _attempt(lambda: chi_computation(F.variety, derive_seed(seed, "chi"), config).chi)
        if err is not None:
            rows.append(CheckRow("engine chi", None, None, None, "skipped", f"{err}: {detail}"))
    chi_ref, chi_src = (F.chi_total, "fixture chi_total") if F.chi_total is not None else (chi_engine, "engine chi")
    report.chi = chi_engine if chi_engine is not None else F.chi_total

    def sum_one() -> int:
        return sum(s.chi * s.eu_normal for s in F.strata)

    def sum_two() -> int:
        return sum(s.eu_closure * s.chi_nmd for s in F.strata)

    compare("Eu = sum chi(A)*Eu_Y(A)", sum_one, eu, "engine Eu")
    compare("chi = sum Eu(A)*chi(NMD(A))", sum_two, chi_ref, chi_src)
    compare("pencil step: chi = chi(Y∩H) + sum (-1)^dim alpha1 chi(NMD)",
            lambda: _pencil_unchecked(F, seed, config), chi_ref, chi_src)
    if F.chi_total is not None and chi_engine is not None:
        compare("engine chi vs fixture chi_total", lambda: chi_engine, F.chi_total, "fixture chi_total")
    for s in F.strata:
        if s.dim == 0:
            continue
        if s.equations is None and s is not F.top:
            continue
        compare(f"Eu(closure of {s.name})",
                lambda s=s: s.eu_closure,
                _attempt(lambda: global_euler_obstruction(
                    closure_spec(F, s).validate(config), derive_seed(seed, "closure-eu"), config))[0],
                "engine Eu of closure")
    return report


def _pencil_unchecked(F: StratificationFixture, seed: int, config: RunConfig) -> int:
    total = slice_euler_characteristic(F, seed, config)
    for i, s in enumerate(F.strata):
        morse = 1 if s.dim == 0 else alpha_one(
            closure_spec(F, s).validate(config), derive_seed(seed, "pencil", i), config)
        total += (-1) ** s.dim * morse * s.chi_nmd
    return total
