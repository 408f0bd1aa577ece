"""Run configuration and deterministic seed splitting."""

from __future__ import annotations

import hashlib
import os
from dataclasses import dataclass, field

SPAIR_LIMIT_ENV = "EULERDATA_SPAIR_LIMIT"
DEFAULT_SPAIR_LIMIT = 200_000


def default_spair_limit() -> int:
    value = os.environ.get(SPAIR_LIMIT_ENV)
    return int(value) if value else DEFAULT_SPAIR_LIMIT


@dataclass(frozen=True)
class RunConfig:
    seed: int = 0
    trials: int = 3
    coeff_bound: int = 997
    milnor_cap: int = 64
    format: str = "text"
    spair_limit: int = field(default_factory=default_spair_limit)

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.coeff_bound < 2:
            raise ValueError("coeff_bound must be >= 2")
        if self.milnor_cap < 2:
            raise ValueError("milnor_cap must be >= 2")
        if self.format not in ("json", "text"):
            raise ValueError("format must be 'json' or 'text'")
        if self.spair_limit < 1:
            raise ValueError("spair_limit must be positive")


DEFAULT_CONFIG = RunConfig()


def derive_seed(seed: int, label: str, index: int = 0) -> int:
    """Child seed = first 8 bytes of sha256("<seed>/<label>/<index>").

    Identical on every platform, and independent streams for distinct labels.
    """
    digest = hashlib.sha256(f"{seed}/{label}/{index}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


def seeded_coefficient(seed: int, label: str, index: int, bound: int) -> int:
    """Integer in [-bound, bound] minus {0}, a pure function of its arguments."""
    v = derive_seed(seed, label, index) % (2 * bound)
    return v - bound if v < bound else v - bound + 1
