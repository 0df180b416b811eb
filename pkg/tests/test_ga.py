import random

import pytest

from learnpath import (Crossover, FitnessParams, GaConfig, Init, Selection, Variant,
                       evaluate, evolve, run, seed_population)
from learnpath.config import ConfigError
from learnpath.course import is_permutation
from learnpath.ga import spawn_rngs

from conftest import random_course, sub_course

SMALL = GaConfig(population_size=30, generations=25)


def test_single_generation(table1):
    r = run(table1, SMALL.replace(generations=1))
    assert len(r.convergence) == 1
    assert r.first_fitness == r.last_fitness


@pytest.mark.parametrize("selection", list(Selection))
@pytest.mark.parametrize("crossover", list(Crossover))
def test_two_concepts_reach_the_better_order(table1, selection, crossover):
    pair = sub_course(table1, [0, 1])
    best = max(evaluate(p, pair).value for p in [(0, 1), (1, 0)])
    for seed in range(5):
        cfg = GaConfig(population_size=4, generations=1, tournament_size=2,
                       selection=selection, crossover=crossover, rng_seed=seed)
        assert run(pair, cfg).last_fitness == best


def test_single_concept_course(table1):
    one = sub_course(table1, [5])
    r = run(one, GaConfig(population_size=3, tournament_size=2, generations=3))
    assert r.best_path == (0,)
    assert r.last_fitness == 0.0


def test_deterministic(table1):
    cfg = SMALL.replace(rng_seed=77, selection=Selection.ROULETTE, crossover=Crossover.PMX)
    assert run(table1, cfg) == run(table1, cfg)


def test_seed_changes_run(table1):
    assert run(table1, SMALL.replace(rng_seed=1)) != run(table1, SMALL.replace(rng_seed=2))


@pytest.mark.parametrize("selection", list(Selection))
@pytest.mark.parametrize("crossover", list(Crossover))
@pytest.mark.parametrize("init", list(Init))
def test_elitist_runs_never_lose_their_best(table1, selection, crossover, init):
    cfg = GaConfig(population_size=20, generations=30, selection=selection,
                   crossover=crossover, init=init, hc_iterations=20, rng_seed=3)
    r = run(table1, cfg)
    bests = [s.best_fitness for s in r.convergence]
    assert len(bests) == 30
    assert all(b2 >= b1 for b1, b2 in zip(bests, bests[1:]))
    assert r.best_fitness == r.last_fitness
    assert evaluate(r.best_path, table1).value == r.best_fitness
    assert [s.generation for s in r.convergence] == list(range(1, 31))


def test_without_elitism_best_ever_is_tracked(table1):
    cfg = SMALL.replace(elitism_count=0, mutation_rate=1.0, rng_seed=5)
    r = run(table1, cfg)
    assert r.best_fitness >= max(s.best_fitness for s in r.convergence)
    assert evaluate(r.best_path, table1).value == r.best_fitness


def test_closure_every_generation(table1, monkeypatch):
    import learnpath.ga as ga
    seen = []
    real = ga.Individual

    def spy(path, score):
        seen.append(path)
        return real(path, score)

    monkeypatch.setattr(ga, "Individual", spy)
    run(table1, SMALL.replace(crossover=Crossover.PMX, mutation_rate=0.5))
    assert len(seen) == 25 * (30 - 1)
    assert all(is_permutation(p, 13) for p in seen)


def test_population_size_mismatch(table1):
    cfg = SMALL
    seeds = seed_population(table1, cfg.replace(population_size=10), random.Random(0))
    with pytest.raises(ValueError, match="seed population"):
        evolve(table1, cfg, seeds)


def test_mean_never_exceeds_best(table1):
    r = run(table1, SMALL.replace(rng_seed=9))
    # a converged population can average an ulp above its max
    assert all(s.mean_fitness <= s.best_fitness + 1e-9 for s in r.convergence)


def test_run_uses_separate_seeding_and_evolution_streams(table1):
    cfg = SMALL.replace(rng_seed=11)
    seed_rng, evolve_rng = spawn_rngs(11)
    pop = seed_population(table1, cfg, seed_rng)
    assert evolve(table1, cfg, pop, evolve_rng) == run(table1, cfg)


def test_roulette_rejects_negative_text_fitness(table1):
    cfg = SMALL.replace(selection=Selection.ROULETTE,
                        fitness_params=FitnessParams(0.5, Variant.TEXT))
    with pytest.raises(ValueError, match="non-negative"):
        run(table1, cfg)


@pytest.mark.parametrize("changes", [
    dict(population_size=0), dict(generations=0), dict(tournament_size=0),
    dict(tournament_size=101), dict(crossover_rate=1.5), dict(mutation_rate=-0.1),
    dict(elitism_count=100), dict(elitism_count=-1), dict(selection="best"),
    dict(rng_seed=2**64), dict(hc_iterations=0),
])
def test_config_validation(changes):
    with pytest.raises(ConfigError):
        GaConfig(**changes)


def test_config_round_trip():
    cfg = GaConfig(selection="roulette", init="sa", crossover="pmx", rng_seed=5,
                   fitness_params=FitnessParams(0.25, Variant.TEXT))
    assert GaConfig.from_dict(cfg.to_dict()) == cfg


def test_tournament_pressure_on_random_course():
    course = random_course(9, random.Random(2))
    base = GaConfig(population_size=40, generations=5)
    t = sum(run(course, base.replace(rng_seed=s)).first_fitness for s in range(20))
    r = sum(run(course, base.replace(rng_seed=s, selection=Selection.ROULETTE)).first_fitness
            for s in range(20))
    assert t >= r
