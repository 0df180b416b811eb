"""Initial population construction: random, hill climbing, simulated annealing."""
from __future__ import annotations

import math
import random

from .config import GaConfig, Init, SaSchedule
from .course import Course, LearningPath
from .fitness import Evaluator, FitnessParams
from .operators import Individual, swap_mutate


def random_path(n: int, rng: random.Random) -> LearningPath:
    path = list(range(n))
    rng.shuffle(path)
    return tuple(path)


def random_population(n: int, size: int, rng: random.Random) -> list[LearningPath]:
    if n < 1 or size < 1:
        raise ValueError("n and size must be >= 1")
    return [random_path(n, rng) for _ in range(size)]


def hill_climb_seed(course: Course, params: FitnessParams, iterations: int,
                    rng: random.Random, evaluator: Evaluator | None = None) -> LearningPath:
    """Random start, then ``iterations`` single-swap proposals kept only on strict improvement."""
    value = (evaluator or Evaluator(course, params)).value
    current = random_path(course.n, rng)
    if course.n < 2:
        return current
    current_fit = value(current)
    for _ in range(iterations):
        neighbor = swap_mutate(current, rng)
        fit = value(neighbor)
        if fit > current_fit:
            current, current_fit = neighbor, fit
    return current


def accept_probability(e: float, e_new: float, temperature: float) -> float:
    """Chance of moving from fitness ``e`` to ``e_new`` (maximisation)."""
    if not temperature > 0:
        raise ValueError(f"temperature must be > 0, got {temperature}")
    if e_new >= e:
        return 1.0
    return math.exp((e_new - e) / temperature)


def simulated_annealing_seed(course: Course, params: FitnessParams, schedule: SaSchedule,
                             rng: random.Random,
                             evaluator: Evaluator | None = None) -> LearningPath:
    """Anneal from a random start; returns the best path seen on the trajectory."""
    value = (evaluator or Evaluator(course, params)).value
    current = random_path(course.n, rng)
    if course.n < 2:
        return current
    current_fit = value(current)
    best, best_fit = current, current_fit
    for t in schedule.temperatures():
        neighbor = swap_mutate(current, rng)
        fit = value(neighbor)
        p = accept_probability(current_fit, fit, t)
        if p >= 1.0 or rng.random() < p:
            current, current_fit = neighbor, fit
            if fit > best_fit:
                best, best_fit = neighbor, fit
    return best


def seed_population(course: Course, config: GaConfig, rng: random.Random) -> list[Individual]:
    evaluator = Evaluator(course, config.fitness_params)
    size = config.population_size
    if config.init is Init.RANDOM:
        paths = random_population(course.n, size, rng)
    elif config.init is Init.HILL_CLIMBING:
        paths = [hill_climb_seed(course, config.fitness_params, config.hc_iterations, rng,
                                 evaluator) for _ in range(size)]
    else:
        paths = [simulated_annealing_seed(course, config.fitness_params, config.sa_schedule,
                                          rng, evaluator) for _ in range(size)]
    return [Individual(p, evaluator(p)) for p in paths]
