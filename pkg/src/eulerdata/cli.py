"""Command-line front end: ``eulerdata <command> FILE... [options]``."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from .config import RunConfig, default_spair_limit, derive_seed
from .errors import ConsistencyFailure, EulerDataError, ParseError
from .euler import (MilnorRecord, beta_series_isolated, chi_computation, eu_terms,
                    invariant_report, milnor_records)
from .geometry import VarietySpec, load_variety, plane_section_count
from .polar import alpha_series
from .strat import check_duality, load_fixture

COMMANDS = ("alpha", "eu", "chi", "beta", "milnor", "degree", "duality")
EXIT_OK, EXIT_ERROR, EXIT_MISMATCH = 0, 1, 2


def _record_dict(r: MilnorRecord) -> dict:
    return {"point": [str(c) for c in r.point], "mu": r.mu, "mu_sectional": r.mu_sectional}


def _parse_point(text: str) -> tuple[Fraction, ...]:
    coords = []
    pos = 0
    for piece in text.split(","):
        try:
            coords.append(Fraction(piece.strip()))
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"bad coordinate {piece.strip()!r}", pos, text, "--point") from None
        pos += len(piece) + 1
    return tuple(coords)


def _eu_formula(terms: Sequence[int], d: int) -> str:
    labels = " + ".join(f"(-1)^{d - j + 1}*a{j}" for j in range(1, d + 2))
    values = " + ".join(f"({t})" for t in terms)
    return f"{labels} = {values} = {sum(terms)}"


class Report(dict):
    """JSON report; the fixed keys are always present."""

    def __init__(self, command: str, inputs: Sequence[str]):
        super().__init__(command=command, input=list(inputs), alpha=None, eu=None, chi=None,
                         beta=None, milnor=None, seeds_used=[], agreement=None, status="ok")
        self.text: list[str] = []


def _variety_report(report: Report, command: str, V: VarietySpec, config: RunConfig, point) -> None:
    seed = config.seed
    report["seeds_used"] = [seed]
    if command in ("alpha", "eu"):
        alpha = alpha_series(V, seed, config)
        report["alpha"] = list(alpha.values)
        report["seeds_used"] += list(alpha.seeds_used)
        report["agreement"] = True
        report.text.append(f"alpha = {alpha.values}")
        if command == "eu":
            terms = eu_terms(alpha)
            report["eu"] = sum(terms)
            report["eu_terms"] = terms
            report.text.append(f"Eu(Y) = {_eu_formula(terms, V.expected_dim)}")
    elif command == "chi":
        c = chi_computation(V, seed, config)
        invariant_report(c)
        report.update(alpha=list(c.alpha.values), eu=c.eu, chi=c.chi, beta=list(c.beta.values),
                      milnor=[_record_dict(r) for r in c.records], agreement=True,
                      sum_mu=c.mu_sum,
                      chi_check={"chi_milnor": c.chi, "chi_pencil": c.chi_pencil, "slice_eu": c.slice_eu})
        report["seeds_used"] += list(c.alpha.seeds_used)
        d = V.expected_dim
        report.text += [
            f"alpha = {c.alpha.values}",
            f"Eu(Y) = {_eu_formula(eu_terms(c.alpha), d)}",
            f"sum of sectional Milnor numbers = {c.mu_sum}",
            f"chi(Y) = Eu(Y) + (-1)^{d} * {c.mu_sum} = {c.chi}",
            f"pencil check: chi(Y∩H) + (-1)^{d}*(a1 + b1) = {c.slice_eu} + ({(-1) ** d})*"
            f"({c.alpha[1]} + {c.beta[1]}) = {c.chi_pencil}",
        ]
    elif command == "beta":
        beta = beta_series_isolated(V, seed, config)
        report["beta"] = list(beta.values)
        report["agreement"] = True
        report.text.append(f"beta = {beta.values}")
    elif command == "milnor":
        points = [point] if point is not None else None
        records = milnor_records(V, seed, config, points)
        report["milnor"] = [_record_dict(r) for r in records]
        report["agreement"] = True
        if not records:
            report.text.append("no singular points")
        for r in records:
            pt = ", ".join(str(c) for c in r.point)
            report.text.append(f"({pt}): mu = {r.mu}, sectional mu = {r.mu_sectional}")
    elif command == "degree":
        s = derive_seed(seed, "degree")
        report["degree"] = plane_section_count(V, s, config)
        report["seeds_used"].append(s)
        report["agreement"] = True
        report.text.append(f"degree = {report['degree']}")


def run(command: str, paths: Sequence[str], config: RunConfig, point=None) -> tuple[int, Report]:
    report = Report(command, paths)
    try:
        if command not in COMMANDS:
            raise ValueError(f"unknown command {command!r}")
        if command == "duality":
            if len(paths) == 1:
                F = load_fixture(paths[0])
            elif len(paths) == 2:
                F = load_fixture(paths[1], variety=load_variety(paths[0], config))
            else:
                raise ValueError("duality takes FIXTURE or VARIETY FIXTURE")
            F.variety.validate(config)
            result = check_duality(F, config.seed, config)
            report.update(eu=result.eu, chi=result.chi, duality=result.to_dict(),
                          agreement=result.all_consistent, seeds_used=[config.seed])
            for row in result.rows:
                line = f"[{row.status}] {row.name}"
                if row.value is not None:
                    line += f": {row.value}"
                if row.reference is not None:
                    line += f" (reference {row.reference} from {row.reference_source})"
                if row.detail and row.status != "ok":
                    line += f" -- {row.detail}"
                report.text.append(line)
            report.text.append(f"all consistent: {result.all_consistent}")
            if not result.all_consistent:
                report["status"] = "mismatch"
                return EXIT_MISMATCH, report
            return EXIT_OK, report
        if len(paths) != 1:
            raise ValueError(f"{command} takes exactly one variety file")
        V = load_variety(paths[0], config)
        _variety_report(report, command, V, config, point)
        return EXIT_OK, report
    except ConsistencyFailure as exc:
        report.update(status=exc.status, error=str(exc), agreement=False)
        return EXIT_MISMATCH, report
    except EulerDataError as exc:
        report.update(status=exc.status, error=str(exc))
        return EXIT_ERROR, report
    except (OSError, ValueError, KeyError, TypeError) as exc:
        report.update(status="InputError", error=f"{type(exc).__name__}: {exc}")
        return EXIT_ERROR, report


def render(report: Report, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2, sort_keys=True) + "\n"
    lines = [f"{report['command']}: {', '.join(report['input'])}"]
    lines += ["  " + t for t in report.text]
    lines.append(f"status: {report['status']}")
    if "error" in report:
        lines.append(f"error: {report['error']}")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eulerdata",
        description="Global Euler obstruction, polar multiplicities, Milnor numbers and "
                    "Euler characteristics of affine varieties.")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("paths", nargs="+", help="variety file (and fixture file for duality)")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--trials", type=int, default=3)
    parser.add_argument("--coeff-bound", type=int, default=997)
    parser.add_argument("--milnor-cap", type=int, default=64)
    parser.add_argument("--format", choices=("json", "text"), default="text")
    parser.add_argument("--spair-limit", type=int, default=None,
                        help="S-pair budget (default: $EULERDATA_SPAIR_LIMIT or 200000)")
    parser.add_argument("--point", default=None, help='milnor at one point, e.g. "0,0"')
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = RunConfig(seed=args.seed, trials=args.trials, coeff_bound=args.coeff_bound,
                           milnor_cap=args.milnor_cap, format=args.format,
                           spair_limit=args.spair_limit if args.spair_limit is not None
                           else default_spair_limit())
        point = _parse_point(args.point) if args.point is not None else None
    except (ValueError, ParseError) as exc:
        report = Report(args.command, args.paths)
        report.update(status=getattr(exc, "status", "InputError"), error=str(exc))
        sys.stdout.write(render(report, args.format))
        return EXIT_ERROR
    code, report = run(args.command, args.paths, config, point)
    sys.stdout.write(render(report, config.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
