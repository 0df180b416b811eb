from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from .fitness import FitnessParams, Variant


class Selection(str, Enum):
    TOURNAMENT = "tournament"
    ROULETTE = "roulette"


class Crossover(str, Enum):
    PMX = "pmx"
    CYCLE = "cycle"


class Init(str, Enum):
    RANDOM = "random"
    HILL_CLIMBING = "hc"
    SIMULATED_ANNEALING = "sa"


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class SaSchedule:
    initial_temperature: float = 10.0
    cooling_factor: float = 0.95
    steps_per_seed: int = 500

    def __post_init__(self):
        if not (self.initial_temperature > 0 and math.isfinite(self.initial_temperature)):
            raise ConfigError("initial_temperature must be > 0")
        if not (0.0 < self.cooling_factor < 1.0):
            raise ConfigError("cooling_factor must be in (0, 1)")
        if self.steps_per_seed < 1:
            raise ConfigError("steps_per_seed must be >= 1")

    def temperatures(self):
        t = self.initial_temperature
        for _ in range(self.steps_per_seed):
            yield t
            # long cold schedules would underflow to 0.0; stay at the smallest positive float
            t = max(t * self.cooling_factor, math.ulp(0.0))


@dataclass(frozen=True)
class GaConfig:
    """Everything needed to reproduce one GA run.

    Defaults for population size, rates, tournament size and elitism are
    engineering choices; the GA itself only fixes 150 generations.
    """
    population_size: int = 100
    generations: int = 150
    selection: Selection = Selection.TOURNAMENT
    tournament_size: int = 5
    crossover: Crossover = Crossover.CYCLE
    crossover_rate: float = 0.9
    mutation_rate: float = 0.1
    elitism_count: int = 1
    init: Init = Init.RANDOM
    rng_seed: int = 0
    fitness_params: FitnessParams = field(default_factory=FitnessParams)
    hc_iterations: int = 100
    sa_schedule: SaSchedule = field(default_factory=SaSchedule)

    def __post_init__(self):
        for name, enum in (("selection", Selection), ("crossover", Crossover), ("init", Init)):
            try:
                object.__setattr__(self, name, enum(getattr(self, name)))
            except ValueError:
                raise ConfigError(f"unknown {name} {getattr(self, name)!r}") from None
        if self.population_size < 1:
            raise ConfigError("population_size must be >= 1")
        if self.generations < 1:
            raise ConfigError("generations must be >= 1")
        if not 1 <= self.tournament_size <= self.population_size:
            raise ConfigError(f"tournament_size must be in 1..{self.population_size}")
        for name in ("crossover_rate", "mutation_rate"):
            if not 0.0 <= getattr(self, name) <= 1.0:
                raise ConfigError(f"{name} must be in [0, 1]")
        if not 0 <= self.elitism_count < self.population_size:
            raise ConfigError(f"elitism_count must be in 0..{self.population_size - 1}")
        if not -2**63 <= self.rng_seed < 2**64:
            raise ConfigError("rng_seed must fit in 64 bits")
        if self.hc_iterations < 1:
            raise ConfigError("hc_iterations must be >= 1")

    def replace(self, **changes) -> "GaConfig":
        return dataclasses.replace(self, **changes)

    def to_dict(self) -> dict[str, Any]:
        d = dataclasses.asdict(self)
        for k in ("selection", "crossover", "init"):
            d[k] = getattr(self, k).value
        d["fitness_params"]["variant"] = self.fitness_params.variant.value
        return d

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "GaConfig":
        d = dict(d)
        if "fitness_params" in d:
            fp = d["fitness_params"]
            d["fitness_params"] = FitnessParams(fp["w"], Variant(fp["variant"]))
        if "sa_schedule" in d:
            d["sa_schedule"] = SaSchedule(**d["sa_schedule"])
        return cls(**d)
