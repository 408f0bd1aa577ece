"""Global Euler obstruction, Milnor numbers and the chi/Eu comparison
for hypersurfaces with isolated singularities.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import univariate
from .config import DEFAULT_CONFIG, RunConfig, derive_seed
from .errors import (ConsistencyFailure, GenericityFailure, NonIsolatedSingularity,
                     UnsupportedInput, UnsupportedSingularLocus)
from .geometry import VarietySpec, generic_slice, is_smooth
from .ideal import EMPTY_DIMENSION, Ideal, krull_dimension, quotient_vector_dimension, univariate_eliminant
from .poly import Polynomial, gradient, translate
from .polar import AlphaSeries, alpha_series

Point = tuple[Fraction, ...]


def eu_terms(alpha: AlphaSeries) -> list[int]:
    """Signed summands (-1)^(d-j+1) * alpha^(j), j = 1..d+1."""
    d = alpha.dim
    return [(-1) ** (d - j + 1) * alpha[j] for j in range(1, d + 2)]


def eu_from_alpha(alpha: AlphaSeries) -> int:
    # for d = 0 the single term is +count, i.e. Eu of a point is 1
    return sum(eu_terms(alpha))


def global_euler_obstruction(V: VarietySpec, seed: int = 0, config: RunConfig = DEFAULT_CONFIG) -> int:
    return eu_from_alpha(alpha_series(V, seed, config))


def _monomials_of_degree(n: int, k: int):
    for combo in itertools.combinations_with_replacement(range(n), k):
        e = [0] * n
        for i in combo:
            e[i] += 1
        yield tuple(e)


def milnor_number(f: Polynomial, q: Sequence, cap: int = 64, *, spair_limit: int | None = None) -> int:
    """Milnor number of f at q; 0 at a smooth point.

    Stabilised value of dim Q[x]/(J + m^k), J the Jacobian ideal at the
    origin after translating q there.
    """
    q = tuple(Fraction(c) for c in q)
    if f.evaluate(q):
        raise ValueError(f"point {q} is not on the hypersurface")
    g = translate(f, q)
    partials = gradient(g)
    if any(p.constant_term() for p in partials):
        return 0
    previous = None
    for k in range(1, cap + 1):
        power = [Polynomial(g.vars, {m: 1}) for m in _monomials_of_degree(len(g.vars), k)]
        value = quotient_vector_dimension(Ideal(partials + power, g.vars, spair_limit=spair_limit))
        if value == previous:
            return value
        previous = value
    raise NonIsolatedSingularity(f"Milnor algebra did not stabilise by m^{cap}")


def _require_hypersurface(V: VarietySpec) -> Polynomial:
    if not V.is_hypersurface():
        raise UnsupportedInput("operation needs a hypersurface given by one equation")
    return V.equations[0]


def sectional_milnor(V: VarietySpec, q: Sequence, seed: int = 0, config: RunConfig = DEFAULT_CONFIG) -> int:
    """Milnor number at q of the section of V by a generic hyperplane through q."""
    f = _require_hypersurface(V)
    q = tuple(Fraction(c) for c in q)
    if f.evaluate(q):
        raise ValueError(f"point {q} is not on the hypersurface")
    values = []
    for t in range(config.trials):
        W = generic_slice(V, derive_seed(seed, "sectional", t), through=q, config=config)
        values.append(milnor_number(W.equations[0], q[:-1], config.milnor_cap,
                                    spair_limit=config.spair_limit))
    if len(set(values)) != 1:
        raise GenericityFailure(f"sectional Milnor trials disagree at {q}: {values}")
    return values[0]


def singular_points(V: VarietySpec, config: RunConfig = DEFAULT_CONFIG) -> list[Point]:
    """Rational singular points of a hypersurface with isolated singularities."""
    f = _require_hypersurface(V)
    I = Ideal([f] + gradient(f), V.vars, spair_limit=config.spair_limit)
    dim = krull_dimension(I)
    if dim == EMPTY_DIMENSION:
        return []
    if dim > 0:
        raise NonIsolatedSingularity(f"singular locus has dimension {dim}")
    coordinate_values = []
    for v in V.vars:
        eliminant = univariate.from_polynomial(univariate_eliminant(I, v), v)
        roots = univariate.rational_roots(eliminant)
        if len(roots) != univariate.squarefree_degree(eliminant):
            raise UnsupportedSingularLocus(f"singular {v}-coordinates are not all rational")
        coordinate_values.append(roots)
    return [p for p in itertools.product(*coordinate_values)
            if all(not g.evaluate(p) for g in I.generators)]


@dataclass(frozen=True)
class MilnorRecord:
    point: Point
    mu: int
    mu_sectional: int


def milnor_records(V: VarietySpec, seed: int = 0, config: RunConfig = DEFAULT_CONFIG,
                   points: Sequence[Sequence] | None = None, *, label: str = "beta") -> list[MilnorRecord]:
    f = _require_hypersurface(V)
    if points is None:
        points = singular_points(V, config)
    out = []
    for i, q in enumerate(points):
        q = tuple(Fraction(c) for c in q)
        mu = milnor_number(f, q, config.milnor_cap, spair_limit=config.spair_limit)
        sec = sectional_milnor(V, q, derive_seed(seed, label, i), config) if V.expected_dim >= 1 else 0
        out.append(MilnorRecord(q, mu, sec))
    return out


@dataclass(frozen=True)
class BetaSeries:
    """Slice-singularity contributions ``values[k-1]`` = beta^(k), k = 1..d."""

    values: tuple[int, ...]

    def __post_init__(self):
        if any(v < 0 for v in self.values):
            raise ValueError("beta entries are non-negative")

    def __getitem__(self, k: int) -> int:
        if not 1 <= k <= len(self.values):
            raise IndexError(k)
        return self.values[k - 1]


def _smooth_generic_slice(V: VarietySpec, seed: int, config: RunConfig) -> VarietySpec:
    W = generic_slice(V, seed, config=config)
    if W.expected_dim > 0 and not is_smooth(W, config):
        raise GenericityFailure("generic hyperplane section is singular")
    return W


def beta_from_records(records: Sequence[MilnorRecord], d: int) -> BetaSeries:
    # point strata have alpha^(1) = 1; deeper slices avoid isolated points
    return BetaSeries((sum(r.mu_sectional for r in records),) + (0,) * (d - 1))


def beta_series_isolated(V: VarietySpec, seed: int = 0, config: RunConfig = DEFAULT_CONFIG) -> BetaSeries:
    records = milnor_records(V, seed, config)
    if V.expected_dim >= 2:
        _smooth_generic_slice(V, derive_seed(seed, "beta-slice"), config)
    return beta_from_records(records, V.expected_dim)


def chi_minus_eu_from_beta(beta: BetaSeries) -> int:
    d = len(beta.values)
    return sum((-1) ** (d - k + 1) * beta[k] for k in range(1, d + 1))


def chi_minus_eu(V: VarietySpec, seed: int = 0, config: RunConfig = DEFAULT_CONFIG) -> int:
    return chi_minus_eu_from_beta(beta_series_isolated(V, seed, config))


@dataclass(frozen=True)
class ChiComputation:
    """chi(Y) by the Milnor-sum route, cross-checked by one pencil step."""

    chi: int
    chi_pencil: int
    eu: int
    mu_sum: int
    alpha: AlphaSeries
    beta: BetaSeries
    records: tuple[MilnorRecord, ...]
    slice_eu: int


def chi_computation(V: VarietySpec, seed: int = 0, config: RunConfig = DEFAULT_CONFIG) -> ChiComputation:
    _require_hypersurface(V)
    d = V.expected_dim
    alpha = alpha_series(V, seed, config)
    eu = eu_from_alpha(alpha)
    records = tuple(milnor_records(V, seed, config, label="chi-mu"))
    mu_sum = sum(r.mu_sectional for r in records)
    chi = eu + (-1) ** d * mu_sum

    # one Lefschetz step: chi(Y) = chi(Y ∩ H) + (-1)^d (alpha^(1) + beta^(1))
    W = _smooth_generic_slice(V, derive_seed(seed, "chi-slice"), config)
    slice_eu = eu_from_alpha(alpha_series(W, derive_seed(seed, "chi-slice-alpha"), config))
    beta = beta_series_isolated(V, seed, config)
    chi_pencil = slice_eu + (-1) ** d * (alpha[1] + beta[1])
    if chi != chi_pencil:
        raise ConsistencyFailure(
            f"chi via Milnor sum ({chi}) differs from chi via pencil step ({chi_pencil})")
    if chi - eu != chi_minus_eu_from_beta(beta):
        raise ConsistencyFailure("chi - Eu differs from the signed beta sum")
    return ChiComputation(chi, chi_pencil, eu, mu_sum, alpha, beta, records, slice_eu)


def chi_isolated(V: VarietySpec, seed: int = 0, config: RunConfig = DEFAULT_CONFIG) -> int:
    return chi_computation(V, seed, config).chi


@dataclass
class InvariantReport:
    alpha: AlphaSeries
    eu: int
    chi: int | None = None
    beta: BetaSeries | None = None
    milnor: list[MilnorRecord] = field(default_factory=list)
    seeds: list[int] = field(default_factory=list)
    agreement: bool = True

    def __post_init__(self):
        if self.chi is not None and self.beta is not None:
            if self.chi - self.eu != chi_minus_eu_from_beta(self.beta):
                raise ConsistencyFailure(
                    f"chi - Eu = {self.chi - self.eu} but the beta series gives "
                    f"{chi_minus_eu_from_beta(self.beta)}")


def invariant_report(c: ChiComputation) -> InvariantReport:
    """Assemble the report; construction re-checks chi - Eu against beta."""
    return InvariantReport(alpha=c.alpha, eu=c.eu, chi=c.chi, beta=c.beta,
                           milnor=list(c.records), seeds=list(c.alpha.seeds_used), agreement=True)
