"""Generational GA loop with elitism and per-generation convergence records."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Any, Sequence

from .config import Crossover, GaConfig, Selection
from .course import Course, LearningPath, is_permutation
from .fitness import Evaluator
from .operators import (Individual, RouletteWheel, cycle_crossover, pmx_crossover,
                        swap_mutate, tournament_select)
from .seeding import seed_population


@dataclass(frozen=True)
class GenerationStats:
    generation: int
    best_fitness: float
    mean_fitness: float


@dataclass
class RunResult:
    first_fitness: float
    last_fitness: float
    best_path: LearningPath
    best_fitness: float
    convergence: list[GenerationStats]
    config: GaConfig | None = field(default=None, compare=False)

    def to_dict(self) -> dict[str, Any]:
        return {
            "first_fitness": self.first_fitness,
            "last_fitness": self.last_fitness,
            "best_fitness": self.best_fitness,
            "best_path": list(self.best_path),
            "convergence": [[s.generation, s.best_fitness, s.mean_fitness]
                            for s in self.convergence],
            "config": self.config.to_dict() if self.config else None,
        }


def spawn_rngs(seed: int) -> tuple[random.Random, random.Random]:
    """Independent streams for seeding and evolution, both derived from ``seed``.

    Keeping them apart means runs that differ only in seeding method share
    every draw made during evolution.
    """
    master = random.Random(seed)
    return random.Random(master.getrandbits(64)), random.Random(master.getrandbits(64))


def _best(population: Sequence[Individual]) -> Individual:
    # lowest index wins ties
    best = population[0]
    for ind in population[1:]:
        if ind.fitness > best.fitness:
            best = ind
    return best


def evolve(course: Course, config: GaConfig, seed_population: Sequence[Individual],
           rng: random.Random | None = None) -> RunResult:
    """Run ``config.generations`` generations starting from ``seed_population``.

    Generation 1 is the first population bred from the seed, so selection
    and recombination already shape ``first_fitness``.
    """
    if len(seed_population) != config.population_size:
        raise ValueError(f"seed population has {len(seed_population)} individuals, "
                         f"config expects {config.population_size}")
    if rng is None:
        rng = spawn_rngs(config.rng_seed)[1]
    evaluator = Evaluator(course, config.fitness_params)
    n = course.n
    size = config.population_size
    can_recombine = n >= 2

    population = list(seed_population)
    best_ever = _best(population)
    convergence: list[GenerationStats] = []

    for generation in range(1, config.generations + 1):
        order = sorted(range(size), key=lambda i: (-population[i].fitness, i))
        offspring = [population[i] for i in order[:config.elitism_count]]

        if config.selection is Selection.TOURNAMENT:
            k = config.tournament_size

            def select() -> Individual:
                return tournament_select(population, k, rng)
        else:
            wheel = RouletteWheel(population)

            def select() -> Individual:
                return wheel.spin(rng)

        while len(offspring) < size:
            p1, p2 = select(), select()
            c1, c2 = p1.path, p2.path
            if can_recombine and rng.random() < config.crossover_rate:
                if config.crossover is Crossover.PMX:
                    c1, c2 = pmx_crossover(c1, c2, rng)
                else:
                    c1, c2 = cycle_crossover(c1, c2)
            for child in (c1, c2):
                if len(offspring) == size:
                    break
                if can_recombine and rng.random() < config.mutation_rate:
                    child = swap_mutate(child, rng)
                if __debug__:
                    assert is_permutation(child, n), child
                offspring.append(Individual(child, evaluator(child)))

        population = offspring
        best = _best(population)
        if best.fitness > best_ever.fitness:
            best_ever = best
        mean = sum(ind.fitness for ind in population) / size
        convergence.append(GenerationStats(generation, best.fitness, mean))

    return RunResult(
        first_fitness=convergence[0].best_fitness,
        last_fitness=convergence[-1].best_fitness,
        best_path=best_ever.path,
        best_fitness=best_ever.fitness,
        convergence=convergence,
        config=config,
    )


def run(course: Course, config: GaConfig) -> RunResult:
    """Seed and evolve one population, all randomness drawn from ``config.rng_seed``."""
    seed_rng, evolve_rng = spawn_rngs(config.rng_seed)
    return evolve(course, config, seed_population(course, config, seed_rng), evolve_rng)
