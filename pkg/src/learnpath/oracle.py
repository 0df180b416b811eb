"""Exhaustive search over every learning path of a small course."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .course import Course, LearningPath
from .fitness import FitnessParams, make_evaluator

MAX_ORACLE_CONCEPTS = 10


class CourseTooLargeError(ValueError):
    pass


@dataclass(frozen=True)
class OracleResult:
    best_path: LearningPath
    best_fitness: float
    evaluated_count: int


def exhaustive_best(course: Course, params: FitnessParams = FitnessParams()) -> OracleResult:
    """Best path by full enumeration in lexicographic order.

    Ties keep the lexicographically smallest path.  Refuses courses with more
    than 10 concepts.
    """
    n = course.n
    if n > MAX_ORACLE_CONCEPTS:
        raise CourseTooLargeError(
            f"course has {n} concepts; exhaustive search is limited to {MAX_ORACLE_CONCEPTS}")
    value = make_evaluator(course, params)
    best_path, best_fit, count = None, float("-inf"), 0
    for path in permutations(range(n)):
        count += 1
        fit = value(path)
        if fit > best_fit:
            best_path, best_fit = path, fit
    return OracleResult(best_path, best_fit, count)
