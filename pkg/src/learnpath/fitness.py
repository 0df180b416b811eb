"""Learning-path fitness.

Two variants of the objective are supported because the published formula
and the code that produced the published numbers disagree:

``Variant.TEXT``
    sum over i = 1..n-1 of (g_i / r_i) * (1 - w) * rd(i-1, i) + w * (1 - d_i)
``Variant.LISTING``
    sum over i = 1..n-1 of (g_i / r_i) * (w * rd(i-1, i)) + (1 - w) * d_i

where i indexes path positions, g/r/d are granularity, rating and difficulty
of the concept at position i, and rd(i-1, i) is ``rdm.degree(prev, cur)``.
Position 0 contributes nothing.  Higher is fitter.
"""
from __future__ import annotations

from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from enum import Enum
from typing import Callable, Sequence

from .course import Course, LearningPath, validate_path

DEFAULT_W = 0.5


class Variant(str, Enum):
    TEXT = "text"
    LISTING = "listing"


@dataclass(frozen=True)
class FitnessParams:
    w: float = DEFAULT_W
    variant: Variant = Variant.LISTING

    def __post_init__(self):
        if not (0.0 <= self.w <= 1.0):
            raise ValueError(f"w must be in [0, 1], got {self.w}")
        object.__setattr__(self, "variant", Variant(self.variant))


def round_half_up(value: float, places: int = 2) -> float:
    q = Decimal(1).scaleb(-places)
    return float(Decimal(repr(value)).quantize(q, rounding=ROUND_HALF_UP))


@dataclass(frozen=True)
class FitnessScore:
    value: float

    @property
    def reported(self) -> float:
        return round_half_up(self.value, 2)

    def __str__(self) -> str:
        return f"{self.reported:.2f}"


def transition_table(course: Course, params: FitnessParams) -> list[list[float]]:
    """``table[p][c]`` is the fitness gained when concept c follows concept p."""
    w = params.w
    rd = course.rdm.values
    table = []
    for p in range(course.n):
        row = []
        for c, concept in enumerate(course.concepts):
            ratio = concept.granularity / concept.rating
            if params.variant is Variant.LISTING:
                gain = ratio * (w * rd[c][p]) + (1 - w) * concept.difficulty
            else:
                gain = ratio * (1 - w) * rd[c][p] + w * (1 - concept.difficulty)
            row.append(gain)
        table.append(row)
    return table


def make_evaluator(course: Course, params: FitnessParams) -> Callable[[Sequence[int]], float]:
    """Return a fast unchecked ``path -> fitness value`` function.

    The caller guarantees ``path`` is a valid permutation.
    """
    table = transition_table(course, params)

    def value(path: Sequence[int]) -> float:
        total = 0.0
        prev = path[0]
        for cur in path[1:]:
            total += table[prev][cur]
            prev = cur
        return total

    return value


def evaluate(path: Sequence[int], course: Course,
             params: FitnessParams = FitnessParams()) -> FitnessScore:
    path = validate_path(path, course.n)
    return FitnessScore(make_evaluator(course, params)(path))


class Evaluator:
    """Caches the transition table for repeated scoring of one (course, params)."""

    def __init__(self, course: Course, params: FitnessParams):
        self.course = course
        self.params = params
        self.value = make_evaluator(course, params)

    def __call__(self, path: LearningPath) -> FitnessScore:
        return FitnessScore(self.value(path))

    def checked(self, path: Sequence[int]) -> FitnessScore:
        return FitnessScore(self.value(validate_path(path, self.course.n)))
