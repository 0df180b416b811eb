import random

import pytest

from learnpath import Concept, Course, RelationDegreeMatrix, load_sample


@pytest.fixture(scope="session")
def table1():
    return load_sample("table1")


@pytest.fixture(scope="session")
def synthetic8():
    return load_sample("synthetic8")


def naive_fitness(path, course, w, variant):
    """Straight transcription of both objective expressions, no shared helpers."""
    total = 0.0
    for i in range(1, len(path)):
        cur = course.concepts[path[i]]
        prev_id = path[i - 1]
        rd = course.rdm.values[cur.id][prev_id]
        if variant == "listing":
            total += (cur.granularity / cur.rating) * (w * rd) + (1 - w) * cur.difficulty
        else:
            total += (cur.granularity / cur.rating) * (1 - w) * rd + w * (1 - cur.difficulty)
    return total


def sub_course(course, ids):
    concepts = tuple(Concept(new, course.concepts[old].title, course.concepts[old].difficulty,
                             course.concepts[old].granularity, course.concepts[old].rating)
                     for new, old in enumerate(ids))
    rdm = RelationDegreeMatrix(tuple(tuple(course.rdm.values[a][b] for b in ids) for a in ids))
    return Course(concepts, rdm)


def random_course(n, rng: random.Random, symmetric=True):
    concepts = tuple(Concept(i, f"c{i}", rng.uniform(0.0, 5.0), rng.uniform(1.0, 20.0),
                             rng.uniform(0.5, 10.0)) for i in range(n))
    rows = [[rng.random() for _ in range(n)] for _ in range(n)]
    if symmetric:
        for i in range(n):
            for j in range(i):
                rows[i][j] = rows[j][i]
    return Course(concepts, RelationDegreeMatrix.from_rows(rows))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
