import os
from dataclasses import dataclass

BRUTE_LIMIT_ENV = "RINGSTRAT_BRUTE_LIMIT"


@dataclass(frozen=True)
class Limits:
    """Size bounds shared by the oracle, the recipe and the reports."""

    brute_order: int = 10_000
    profile_cap: int = 1_000_000
    max_elems: int = 64

    @classmethod
    def from_env(cls, **overrides):
        raw = os.environ.get(BRUTE_LIMIT_ENV)
        if raw is not None and "brute_order" not in overrides:
            overrides["brute_order"] = int(raw)
        return cls(**overrides)


DEFAULT_LIMITS = Limits()
