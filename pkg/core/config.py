"""
Run configuration shared by the library entry points and the CLI.
"""

import os
from dataclasses import dataclass, replace
from typing import Optional

SEED_ENV = "FLAGRANK_SEED"
SAMPLERS = ("cell", "word")
FORMATS = ("json", "markdown", "csv")


@dataclass(frozen=True)
class RunConfig:
    seed: int = 0
    retries: int = 5
    height: int = 3
    word_length: Optional[int] = None  # None means 2 * rank
    format: str = "json"
    max_rank: int = 8
    workers: int = 1
    sampler: str = "cell"

    def __post_init__(self):
        if self.retries < 1:
            raise ValueError("retries must be at least 1")
        if self.height < 1:
            raise ValueError("height must be at least 1")
        if self.word_length is not None and self.word_length < 1:
            raise ValueError("word length must be at least 1")
        if self.sampler not in SAMPLERS:
            raise ValueError(f"unknown sampler {self.sampler!r}")
        if self.format not in FORMATS:
            raise ValueError(f"unknown format {self.format!r}")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")

    @classmethod
    def from_env(cls, **overrides) -> "RunConfig":
        """Defaults, then FLAGRANK_SEED, then explicit non-None overrides."""
        values = {}
        env_seed = os.environ.get(SEED_ENV)
        if env_seed:
            values["seed"] = int(env_seed)
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

    def length_for(self, rank: int) -> int:
        return self.word_length if self.word_length is not None else 2 * rank

    def with_seed(self, seed: int) -> "RunConfig":
        return replace(self, seed=seed)
