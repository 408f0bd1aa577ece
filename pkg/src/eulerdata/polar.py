"""Polar multiplicities: Morse-point counts of generic linear functions."""

from __future__ import annotations

from dataclasses import dataclass

from .config import DEFAULT_CONFIG, RunConfig, derive_seed
from .errors import DimensionMismatch, GenericityFailure
from .geometry import (VarietySpec, generic_linear_form, generic_slice, plane_section_count,
                       singular_ideal)
from .ideal import EMPTY_DIMENSION, Ideal, distinct_point_count, krull_dimension, saturation
from .poly import Polynomial, jacobian, minors


@dataclass(frozen=True)
class AlphaSeries:
    """Polar multiplicities ``values[j-1]`` = alpha^(j), j = 1..d+1."""

    values: tuple[int, ...]
    seeds_used: tuple[int, ...]
    trials: int

    def __post_init__(self):
        if any(v < 0 for v in self.values):
            raise ValueError("polar multiplicities are non-negative")

    @property
    def dim(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, j: int) -> int:
        """1-based access: ``series[1]`` is alpha^(1)."""
        if not 1 <= j <= len(self.values):
            raise IndexError(j)
        return self.values[j - 1]


def critical_ideal(V: VarietySpec, coefficients, config: RunConfig = DEFAULT_CONFIG) -> Ideal:
    """Points of V where the Jacobian augmented by the row ``coefficients`` drops rank."""
    rows = jacobian(V.equations, V.vars)
    rows.append([Polynomial.constant(V.vars, c) for c in coefficients])
    gens = list(V.equations) + minors(rows, V.codim + 1)
    return Ideal(gens, V.vars, spair_limit=config.spair_limit)


def _alpha_one_trial(V: VarietySpec, sing: Ideal, seed: int, config: RunConfig) -> int:
    ell = generic_linear_form(V.ambient, seed, config.coeff_bound)
    crit = saturation(critical_ideal(V, ell.coefficients, config), sing)
    dim = krull_dimension(crit)
    if dim not in (0, EMPTY_DIMENSION):
        raise GenericityFailure(
            f"critical locus of a generic linear form has dimension {dim} on the regular part")
    return distinct_point_count(crit, derive_seed(seed, "alpha-count"), bound=config.coeff_bound).count


def alpha_one(V: VarietySpec, seed: int = 0, config: RunConfig = DEFAULT_CONFIG) -> int:
    """Number of critical points of a generic linear function on the regular part of V.

    Repeated for ``config.trials`` independent forms; the counts must agree.
    """
    if V.expected_dim == 0:
        raise DimensionMismatch("alpha^(1) needs a positive-dimensional variety")
    sing = singular_ideal(V, config)
    counts = [_alpha_one_trial(V, sing, derive_seed(seed, "alpha-one", t), config)
              for t in range(config.trials)]
    if len(set(counts)) != 1:
        raise GenericityFailure(f"alpha^(1) trials disagree: {counts}")
    return counts[0]


def alpha_series(V: VarietySpec, seed: int = 0, config: RunConfig = DEFAULT_CONFIG) -> AlphaSeries:
    d = V.expected_dim
    if d == 0:
        s = derive_seed(seed, "points")
        count = distinct_point_count(V.ideal(config), s, bound=config.coeff_bound).count
        return AlphaSeries((count,), (s,), config.trials)
    seeds = [derive_seed(seed, "alpha", 1)]
    values = [alpha_one(V, seeds[0], config)]
    W = V
    for k in range(2, d + 1):
        W = generic_slice(W, derive_seed(seed, "alpha-slice", k - 1), config=config)
        seeds.append(derive_seed(seed, "alpha", k))
        values.append(alpha_one(W, seeds[-1], config))
    seeds.append(derive_seed(seed, "degree"))
    values.append(plane_section_count(V, seeds[-1], config))
    return AlphaSeries(tuple(values), tuple(seeds), config.trials)
