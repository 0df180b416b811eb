"""Selection, recombination and mutation operators on permutation paths."""
from __future__ import annotations

import bisect
import random
from dataclasses import dataclass
from itertools import accumulate
from typing import Sequence

from .course import LearningPath
from .fitness import FitnessScore


@dataclass(frozen=True)
class Individual:
    path: LearningPath
    score: FitnessScore

    @property
    def fitness(self) -> float:
        return self.score.value


class SelectionError(ValueError):
    pass


def tournament_select(population: Sequence[Individual], k: int,
                      rng: random.Random) -> Individual:
    """Best of ``k`` distinct individuals drawn uniformly; ties go to the lowest index."""
    if not population:
        raise SelectionError("empty population")
    if not 1 <= k <= len(population):
        raise SelectionError(f"tournament size {k} outside 1..{len(population)}")
    picked = rng.sample(range(len(population)), k)
    best = min(picked, key=lambda i: (-population[i].fitness, i))
    return population[best]


class RouletteWheel:
    """Fitness-proportional sampler built once per population."""

    def __init__(self, population: Sequence[Individual]):
        if not population:
            raise SelectionError("empty population")
        fitness = [ind.fitness for ind in population]
        if any(f < 0 for f in fitness):
            raise SelectionError("roulette selection needs non-negative fitness")
        total = sum(fitness)
        if not total > 0:
            raise SelectionError("roulette selection needs positive total fitness")
        self.population = population
        self.cumulative = list(accumulate(f / total for f in fitness))

    def spin(self, rng: random.Random) -> Individual:
        u = rng.random()
        # first individual whose cumulative share exceeds u; a zero share is never hit
        i = bisect.bisect_right(self.cumulative, u)
        if i >= len(self.population):
            i = len(self.population) - 1
        return self.population[i]


def roulette_select(population: Sequence[Individual], rng: random.Random) -> Individual:
    return RouletteWheel(population).spin(rng)


def swap_mutate(path: Sequence[int], rng: random.Random,
                positions: tuple[int, int] | None = None) -> LearningPath:
    """Exchange two distinct positions, drawn uniformly unless ``positions`` is given."""
    n = len(path)
    if n < 2:
        raise ValueError("swap mutation needs at least 2 concepts")
    i, j = positions if positions is not None else rng.sample(range(n), 2)
    child = list(path)
    child[i], child[j] = child[j], child[i]
    return tuple(child)


def _check_parents(p1: Sequence[int], p2: Sequence[int]) -> None:
    if len(p1) != len(p2):
        raise ValueError(f"parent size mismatch: {len(p1)} vs {len(p2)}")


def pmx_child(donor: Sequence[int], other: Sequence[int], lo: int, hi: int) -> LearningPath:
    """Partially-mapped child: ``donor[lo:hi+1]`` kept in place, rest resolved from ``other``."""
    n = len(donor)
    child: list[int | None] = [None] * n
    child[lo:hi + 1] = donor[lo:hi + 1]
    in_segment = set(donor[lo:hi + 1])
    pos_in_other = {v: i for i, v in enumerate(other)}
    for i in range(lo, hi + 1):
        value = other[i]
        if value in in_segment:
            continue
        j = i
        while lo <= j <= hi:
            j = pos_in_other[donor[j]]
        child[j] = value
    for i in range(n):
        if child[i] is None:
            child[i] = other[i]
    return tuple(child)


def pmx_crossover(parent1: Sequence[int], parent2: Sequence[int], rng: random.Random,
                  cuts: tuple[int, int] | None = None) -> tuple[LearningPath, LearningPath]:
    """PMX over an inclusive segment between two distinct random cut points."""
    _check_parents(parent1, parent2)
    n = len(parent1)
    if n < 2:
        raise ValueError("PMX needs at least 2 concepts")
    lo, hi = sorted(cuts if cuts is not None else rng.sample(range(n), 2))
    return pmx_child(parent1, parent2, lo, hi), pmx_child(parent2, parent1, lo, hi)


def cycles(parent1: Sequence[int], parent2: Sequence[int]) -> list[list[int]]:
    """Position cycles, each started at the lowest unconsumed position."""
    pos_in_p1 = {v: i for i, v in enumerate(parent1)}
    seen = [False] * len(parent1)
    out = []
    for start in range(len(parent1)):
        if seen[start]:
            continue
        cycle = []
        i = start
        while not seen[i]:
            seen[i] = True
            cycle.append(i)
            i = pos_in_p1[parent2[i]]
        out.append(cycle)
    return out


def cycle_crossover(parent1: Sequence[int],
                    parent2: Sequence[int]) -> tuple[LearningPath, LearningPath]:
    """Cycle crossover; odd-numbered cycles keep their parent, even ones swap."""
    _check_parents(parent1, parent2)
    child1, child2 = list(parent1), list(parent2)
    for number, cycle in enumerate(cycles(parent1, parent2)):
        if number % 2 == 1:
            for i in cycle:
                child1[i], child2[i] = parent2[i], parent1[i]
    return tuple(child1), tuple(child2)
