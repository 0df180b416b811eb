"""Command-line harness: run, matrix, evaluate, oracle.

Exit codes: 0 success, 1 input/data error, 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import logging
import statistics
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .config import ConfigError, Crossover, GaConfig, Init, Selection
from .course import Course, CourseDataError, InvalidPathError, load_course, validate_path
from .fitness import DEFAULT_W, Evaluator, FitnessParams, FitnessScore, Variant
from .ga import RunResult, run
from .operators import SelectionError
from .oracle import CourseTooLargeError, exhaustive_best
from .samples import sample_files

log = logging.getLogger("learnpath")

CONVERGENCE_HEADER = ["generation", "best_fitness", "mean_fitness"]
MATRIX_HEADER = ["selection", "init", "crossover", "seed", "first_fitness", "last_fitness",
                 "best_path", "repeats", "last_fitness_mean", "last_fitness_std"]
MATRIX_CELLS = list(itertools.product(Selection, Init, Crossover))

VARIANT_FLAGS = {"text": Variant.TEXT, "listing": Variant.LISTING}


class UsageError(Exception):
    pass


def _fmt2(value: float) -> str:
    return f"{FitnessScore(value).reported:.2f}"


def _path_str(path) -> str:
    return " ".join(str(i) for i in path)


def convergence_csv(result: RunResult) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CONVERGENCE_HEADER)
    for s in result.convergence:
        w.writerow([s.generation, repr(s.best_fitness), repr(s.mean_fitness)])
    return buf.getvalue()


def _add_fitness_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--w", type=float, default=DEFAULT_W, help="fitness weight in [0, 1]")
    p.add_argument("--variant", choices=sorted(VARIANT_FLAGS), default="listing",
                   help="fitness expression (default: listing)")


def _add_data_flags(p: argparse.ArgumentParser) -> None:
    course, rdm = sample_files("table1")
    p.add_argument("--course", type=Path, default=course,
                   help="course CSV (default: bundled 13-concept sample)")
    p.add_argument("--rdm", type=Path, default=rdm,
                   help="relation-degree matrix CSV (default: bundled sample)")


def _add_ga_flags(p: argparse.ArgumentParser, cell_flags: bool) -> None:
    d = GaConfig()
    if cell_flags:
        p.add_argument("--selection", choices=[s.value for s in Selection],
                       default=d.selection.value)
        p.add_argument("--init", choices=[s.value for s in Init], default=d.init.value)
        p.add_argument("--crossover", choices=[s.value for s in Crossover],
                       default=d.crossover.value)
    p.add_argument("--pop-size", type=int, default=d.population_size)
    p.add_argument("--generations", type=int, default=d.generations)
    p.add_argument("--tournament-size", type=int, default=d.tournament_size)
    p.add_argument("--crossover-rate", type=float, default=d.crossover_rate)
    p.add_argument("--mutation-rate", type=float, default=d.mutation_rate)
    p.add_argument("--elitism", type=int, default=d.elitism_count)
    p.add_argument("--hc-iterations", type=int, default=d.hc_iterations)
    p.add_argument("--seed", type=int, default=42)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="learnpath",
                                     description="GA learning-path generation")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", help="one GA run")
    _add_data_flags(p)
    _add_ga_flags(p, cell_flags=True)
    _add_fitness_flags(p)
    p.add_argument("--out", type=Path,
                   help="RunResult JSON path; convergence CSV is written next to it")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("matrix", help="all 12 selection x init x crossover cells")
    _add_data_flags(p)
    _add_ga_flags(p, cell_flags=False)
    _add_fitness_flags(p)
    p.add_argument("--repeats", type=int, default=1, help="seeds per cell (seed, seed+1, ...)")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--out", type=Path, help="matrix CSV path (default: stdout)")
    p.add_argument("--convergence-dir", type=Path,
                   help="write one convergence CSV per cell and seed here")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("evaluate", help="score a given path under both fitness variants")
    _add_data_flags(p)
    _add_fitness_flags(p)
    p.add_argument("--path", required=True, help="comma-separated concept ids")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("oracle", help="exhaustive optimum for courses of up to 10 concepts")
    _add_data_flags(p)
    _add_fitness_flags(p)
    p.set_defaults(func=cmd_oracle)
    return parser


def _fitness_params(args) -> FitnessParams:
    try:
        return FitnessParams(args.w, VARIANT_FLAGS[args.variant])
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _config(args, **cell) -> GaConfig:
    try:
        return GaConfig(
            population_size=args.pop_size,
            generations=args.generations,
            tournament_size=args.tournament_size,
            crossover_rate=args.crossover_rate,
            mutation_rate=args.mutation_rate,
            elitism_count=args.elitism,
            hc_iterations=args.hc_iterations,
            rng_seed=args.seed,
            fitness_params=_fitness_params(args),
            **cell,
        )
    except ConfigError as exc:
        raise UsageError(str(exc)) from None


def _load(args) -> Course:
    return load_course(args.course, args.rdm)


def cmd_run(args) -> int:
    config = _config(args, selection=args.selection, init=args.init, crossover=args.crossover)
    course = _load(args)
    result = run(course, config)
    if args.out:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        args.out.write_text(json.dumps(result.to_dict(), indent=2) + "\n", encoding="utf-8")
        conv = args.out.with_name(args.out.stem + "_convergence.csv")
        conv.write_text(convergence_csv(result), encoding="utf-8")
        log.info("wrote %s and %s", args.out, conv)
    print(f"first_fitness: {_fmt2(result.first_fitness)}")
    print(f"last_fitness: {_fmt2(result.last_fitness)}")
    print(f"best_path: {','.join(map(str, result.best_path))}")
    return 0


def _run_cell(job):
    course, config = job
    return run(course, config)


def matrix_rows(course: Course, base: GaConfig, repeats: int = 1,
                jobs: int = 1) -> tuple[list[list[str]], list[tuple[GaConfig, RunResult]]]:
    """Run every cell ``repeats`` times; rows come back in cell order regardless of ``jobs``."""
    configs = [base.replace(selection=sel, init=init, crossover=cx, rng_seed=base.rng_seed + r)
               for sel, init, cx in MATRIX_CELLS for r in range(repeats)]
    jobs_list = [(course, c) for c in configs]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_cell, jobs_list))
    else:
        results = [_run_cell(j) for j in jobs_list]

    rows = []
    for cell in range(len(MATRIX_CELLS)):
        chunk = list(zip(configs, results))[cell * repeats:(cell + 1) * repeats]
        lasts = [r.last_fitness for _, r in chunk]
        # representative run: highest last fitness, earliest seed on ties
        cfg, best = max(chunk, key=lambda cr: (cr[1].last_fitness, -cr[0].rng_seed))
        std = statistics.stdev(lasts) if len(lasts) > 1 else 0.0
        rows.append([cfg.selection.value, cfg.init.value, cfg.crossover.value,
                     str(cfg.rng_seed), _fmt2(best.first_fitness), _fmt2(best.last_fitness),
                     _path_str(best.best_path), str(repeats),
                     f"{statistics.fmean(lasts):.4f}", f"{std:.4f}"])
    return rows, list(zip(configs, results))


def cmd_matrix(args) -> int:
    if args.repeats < 1:
        raise UsageError("--repeats must be >= 1")
    if args.jobs < 1:
        raise UsageError("--jobs must be >= 1")
    base = _config(args)
    course = _load(args)
    rows, runs = matrix_rows(course, base, args.repeats, args.jobs)

    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(MATRIX_HEADER)
    w.writerows(rows)
    text = buf.getvalue()
    if args.out:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        args.out.write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    if args.convergence_dir:
        args.convergence_dir.mkdir(parents=True, exist_ok=True)
        for cfg, result in runs:
            name = f"{cfg.selection.value}_{cfg.init.value}_{cfg.crossover.value}_{cfg.rng_seed}.csv"
            (args.convergence_dir / name).write_text(convergence_csv(result), encoding="utf-8")
    return 0


def cmd_evaluate(args) -> int:
    params = _fitness_params(args)
    course = _load(args)
    try:
        ids = [int(x) for x in args.path.split(",")]
    except ValueError:
        raise InvalidPathError(f"--path {args.path!r} is not a comma-separated id list") from None
    path = validate_path(ids, course.n)
    print(f"path: {','.join(map(str, path))}")
    print(f"w: {params.w}")
    for variant in (Variant.LISTING, Variant.TEXT):
        score = Evaluator(course, FitnessParams(params.w, variant))(path)
        marker = " (selected)" if variant is params.variant else ""
        print(f"{variant.value}: {score}{marker}")
    return 0


def cmd_oracle(args) -> int:
    params = _fitness_params(args)
    course = _load(args)
    result = exhaustive_best(course, params)
    print(f"best_path: {','.join(map(str, result.best_path))}")
    print(f"best_fitness: {_fmt2(result.best_fitness)}")
    print(f"evaluated: {result.evaluated_count}")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"learnpath: error: {exc}", file=sys.stderr)
        return 2
    except (CourseDataError, InvalidPathError, CourseTooLargeError, SelectionError) as exc:
        print(f"learnpath: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"learnpath: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
