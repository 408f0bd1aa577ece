"""Affine varieties, seeded generic linear forms and hyperplane slicing."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .config import DEFAULT_CONFIG, RunConfig, derive_seed, seeded_coefficient
from .errors import DimensionMismatch, GenericityFailure, ParseError
from .ideal import Ideal, distinct_point_count, krull_dimension
from .poly import Polynomial, jacobian, minors, parse_polynomial, substitute_affine

SLICE_RETRIES = 3


@dataclass(frozen=True)
class VarietySpec:
    """Y in C^N cut out by ``equations``, of pure dimension ``expected_dim``.

    Inputs are assumed reduced; only the dimension is validated
    (:meth:`validate`).
    """

    vars: tuple[str, ...]
    equations: tuple[Polynomial, ...]
    expected_dim: int

    def __post_init__(self):
        object.__setattr__(self, "vars", tuple(self.vars))
        if not self.vars:
            raise ValueError("a variety needs at least one ambient variable")
        eqs = []
        for f in self.equations:
            if f.vars != self.vars:
                f = f.with_vars(self.vars)
            if f:
                eqs.append(f)
        object.__setattr__(self, "equations", tuple(eqs))
        if not 0 <= self.expected_dim < len(self.vars):
            raise DimensionMismatch(
                f"expected_dim {self.expected_dim} outside [0, {len(self.vars)})")

    @property
    def ambient(self) -> int:
        return len(self.vars)

    @property
    def dim(self) -> int:
        return self.expected_dim

    @property
    def codim(self) -> int:
        return self.ambient - self.expected_dim

    def ideal(self, config: RunConfig = DEFAULT_CONFIG) -> Ideal:
        return Ideal(self.equations, self.vars, spair_limit=config.spair_limit)

    def is_hypersurface(self) -> bool:
        return len(self.equations) == 1 and self.codim == 1

    def validate(self, config: RunConfig = DEFAULT_CONFIG) -> "VarietySpec":
        dim = krull_dimension(self.ideal(config))
        if dim != self.expected_dim:
            raise DimensionMismatch(f"equations define dimension {dim}, expected {self.expected_dim}")
        return self

    @classmethod
    def from_strings(cls, vars: Sequence[str], equations: Sequence[str], expected_dim: int,
                     *, source: str | None = None) -> "VarietySpec":
        vars = tuple(vars)
        polys = []
        for k, text in enumerate(equations):
            try:
                polys.append(parse_polynomial(text, vars))
            except ParseError as exc:
                where = f"{source}: equations[{k}]" if source else f"equations[{k}]"
                raise ParseError(exc.message, exc.position, text, where) from None
        return cls(vars, tuple(polys), expected_dim)

    @classmethod
    def from_dict(cls, doc: dict, *, source: str | None = None) -> "VarietySpec":
        vars = doc["vars"]
        if "ambient" in doc and doc["ambient"] != len(vars):
            raise DimensionMismatch(f"ambient {doc['ambient']} but {len(vars)} vars declared")
        return cls.from_strings(vars, doc["equations"], doc["expected_dim"], source=source)

    def to_dict(self) -> dict:
        return {
            "ambient": self.ambient,
            "vars": list(self.vars),
            "equations": [str(f) for f in self.equations],
            "expected_dim": self.expected_dim,
        }


def load_variety(path: str | Path, config: RunConfig = DEFAULT_CONFIG) -> VarietySpec:
    path = Path(path)
    doc = json.loads(path.read_text())
    return VarietySpec.from_dict(doc, source=str(path)).validate(config)


@dataclass(frozen=True)
class GenericForm:
    coefficients: tuple[int, ...]
    constant: Fraction
    seed: int

    def polynomial(self, vars: Sequence[str]) -> Polynomial:
        return Polynomial.linear(vars, self.coefficients, self.constant)


def generic_linear_form(N: int, seed: int, bound: int = 997, *, affine: bool = False) -> GenericForm:
    """Seeded form with nonzero integer coefficients in [-bound, bound]."""
    if bound < 2:
        raise ValueError("coefficient bound must be at least 2")
    coeffs = tuple(seeded_coefficient(seed, "linear-form", i, bound) for i in range(N))
    constant = Fraction(seeded_coefficient(seed, "linear-form-constant", 0, bound)) if affine else Fraction(0)
    return GenericForm(coeffs, constant, seed)


def singular_ideal(V: VarietySpec, config: RunConfig = DEFAULT_CONFIG) -> Ideal:
    """Equations plus the codim-sized minors of their Jacobian."""
    gens = list(V.equations)
    if len(V.equations) >= V.codim:
        gens += minors(jacobian(V.equations, V.vars), V.codim)
    return Ideal(gens, V.vars, spair_limit=config.spair_limit)


def is_smooth(V: VarietySpec, config: RunConfig = DEFAULT_CONFIG) -> bool:
    """True when the singular ideal is the unit ideal."""
    return singular_ideal(V, config).is_unit()


def generic_slice(V: VarietySpec, seed: int, through: Sequence[Fraction] | None = None,
                  config: RunConfig = DEFAULT_CONFIG) -> VarietySpec:
    """Intersect with a generic hyperplane by eliminating the last variable.

    The last variable is replaced by a seeded affine form in the others; if
    ``through`` is given the hyperplane passes through that point, whose
    image in the slice is the point with its last coordinate dropped.
    """
    if V.expected_dim == 0:
        raise DimensionMismatch("cannot slice a zero-dimensional variety")
    if through is not None and len(through) != V.ambient:
        raise ValueError(f"point needs {V.ambient} coordinates")
    last = V.vars[-1]
    rest = V.vars[:-1]
    for attempt in range(SLICE_RETRIES + 1):
        form = generic_linear_form(len(rest), derive_seed(seed, "slice", attempt),
                                   config.coeff_bound, affine=True)
        constant = form.constant
        if through is not None:
            constant = Fraction(through[-1]) - sum(
                c * Fraction(x) for c, x in zip(form.coefficients, through[:-1]))
        replacement = Polynomial.linear(rest, form.coefficients, constant).with_vars(V.vars)
        eqs = tuple(substitute_affine(f, last, replacement) for f in V.equations)
        sliced = VarietySpec(rest, eqs, V.expected_dim - 1)
        try:
            return sliced.validate(config)
        except DimensionMismatch:
            continue
    raise GenericityFailure(f"no generic slice found after {SLICE_RETRIES} retries")


def plane_section_count(V: VarietySpec, seed: int, config: RunConfig = DEFAULT_CONFIG) -> int:
    """Distinct points of V on a generic affine plane of codimension dim V."""
    W = V
    for k in range(V.expected_dim):
        W = generic_slice(W, derive_seed(seed, "section", k), config=config)
    return distinct_point_count(W.ideal(config), derive_seed(seed, "section-count"),
                                bound=config.coeff_bound).count
