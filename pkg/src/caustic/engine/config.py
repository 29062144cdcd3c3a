from __future__ import annotations

import os
from dataclasses import dataclass


@dataclass(frozen=True)
class EngineConfig:
    """Bounds on the brute-force enumerations.  Exceeding one raises ``TooLarge``."""

    max_atoms: int = 16
    max_selections: int = 12
    """Maximum number of disjunctive rules whose head choices get enumerated."""
    max_choices: int = 10
    max_iterations: int = 100_000
    jobs: int = 1

    def __post_init__(self):
        for name in ("max_atoms", "max_selections", "max_choices", "max_iterations", "jobs"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")

    @classmethod
    def from_env(cls, **overrides) -> EngineConfig:
        env = os.environ.get("CAUSTIC_MAX_ATOMS")
        if env and "max_atoms" not in overrides:
            overrides["max_atoms"] = int(env)
        return cls(**overrides)


DEFAULT = EngineConfig()
