"""Course domain types and CSV ingestion.

A course is a list of concepts (learning objects) plus a relation-degree
matrix.  Matrix cell ``values[c][p]`` holds the relation degree used when
concept ``c`` directly follows concept ``p`` in a learning path.
"""
from __future__ import annotations

import csv
import io
import logging
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

log = logging.getLogger(__name__)

LearningPath = tuple[int, ...]

COURSE_HEADER = ("id", "title", "difficulty", "granularity", "rating")


class CourseDataError(ValueError):
    """Raised when a course or relation-degree file cannot be accepted.

    ``file``, ``row`` and ``column`` locate the offending cell when known.
    Rows are 1-based line numbers in the source file.
    """

    def __init__(self, message: str, file: str | None = None,
                 row: int | None = None, column: int | str | None = None):
        self.file = file
        self.row = row
        self.column = column
        where = []
        if file is not None:
            where.append(str(file))
        if row is not None:
            where.append(f"row {row}")
        if column is not None:
            where.append(f"column {column}")
        super().__init__(f"{', '.join(where)}: {message}" if where else message)


class InvalidPathError(ValueError):
    pass


@dataclass(frozen=True)
class Concept:
    id: int
    title: str
    difficulty: float
    granularity: float
    rating: float

    def __post_init__(self):
        if self.id < 0:
            raise ValueError(f"concept id must be non-negative, got {self.id}")
        if not (self.rating > 0):
            raise ValueError(f"rating must be > 0, got {self.rating}")
        if not (self.granularity > 0):
            raise ValueError(f"granularity must be > 0, got {self.granularity}")
        if not (self.difficulty >= 0):
            raise ValueError(f"difficulty must be >= 0, got {self.difficulty}")


@dataclass(frozen=True)
class RelationDegreeMatrix:
    values: tuple[tuple[float, ...], ...]

    def __post_init__(self):
        n = len(self.values)
        for c, row in enumerate(self.values):
            if len(row) != n:
                raise ValueError(f"row {c} has {len(row)} entries, expected {n}")
            for p, v in enumerate(row):
                if c != p and not (0.0 <= v <= 1.0):
                    raise ValueError(f"relation degree [{c}][{p}] = {v} outside [0, 1]")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[float]]) -> "RelationDegreeMatrix":
        return cls(tuple(tuple(float(v) for v in row) for row in rows))

    @property
    def n(self) -> int:
        return len(self.values)

    def degree(self, previous: int, current: int) -> float:
        """Relation degree applied when ``current`` follows ``previous``."""
        return self.values[current][previous]

    def is_symmetric(self) -> bool:
        n = self.n
        return all(self.values[i][j] == self.values[j][i]
                   for i in range(n) for j in range(i + 1, n))


@dataclass(frozen=True)
class Course:
    concepts: tuple[Concept, ...]
    rdm: RelationDegreeMatrix

    def __post_init__(self):
        ids = [c.id for c in self.concepts]
        if ids != list(range(len(ids))):
            raise ValueError("concept ids must be exactly 0..n-1 in order")
        if self.rdm.n != len(self.concepts):
            raise ValueError(
                f"relation-degree matrix is {self.rdm.n}x{self.rdm.n} "
                f"but course has {len(self.concepts)} concepts")

    @property
    def n(self) -> int:
        return len(self.concepts)


def validate_path(path: Sequence[int], n: int) -> LearningPath:
    """Return ``path`` as a tuple, raising InvalidPathError unless it permutes 0..n-1."""
    seq = tuple(path)
    if len(seq) != n or sorted(seq) != list(range(n)):
        raise InvalidPathError(f"{list(seq)} is not a permutation of 0..{n - 1}")
    return seq


def is_permutation(path: Sequence[int], n: int) -> bool:
    return len(path) == n and sorted(path) == list(range(n))


def traditional_path(course: Course) -> LearningPath:
    """The lecture-order baseline: concepts in id order."""
    return tuple(range(course.n))


def _data_lines(text: str) -> list[tuple[int, str]]:
    # keep source line numbers; '#' lines are comments
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        out.append((lineno, line))
    return out


def _read_text(path: str | Path) -> str:
    p = Path(path)
    if not p.is_file():
        raise CourseDataError("file not found", file=str(path))
    try:
        return p.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise CourseDataError(f"cannot read file ({exc})", file=str(path)) from exc


def _parse_real(text: str, name: str, file: str, row: int) -> float:
    try:
        value = float(text)
    except ValueError:
        raise CourseDataError(f"{name} {text!r} is not a number",
                              file=file, row=row, column=name) from None
    if not math.isfinite(value):
        raise CourseDataError(f"{name} must be finite", file=file, row=row, column=name)
    return value


def parse_concepts(text: str, file: str = "<course>") -> tuple[Concept, ...]:
    lines = _data_lines(text)
    if not lines:
        raise CourseDataError("empty course file", file=file)
    header_line, header = lines[0]
    fields = [h.strip().lower() for h in next(csv.reader([header]))]
    if tuple(fields) != COURSE_HEADER:
        raise CourseDataError(f"expected header {','.join(COURSE_HEADER)}",
                              file=file, row=header_line)
    concepts = []
    seen: dict[int, int] = {}
    for lineno, line in lines[1:]:
        cells = next(csv.reader([line]))
        if len(cells) != len(COURSE_HEADER):
            raise CourseDataError(f"expected {len(COURSE_HEADER)} fields, got {len(cells)}",
                                  file=file, row=lineno)
        try:
            cid = int(cells[0])
        except ValueError:
            raise CourseDataError(f"id {cells[0]!r} is not an integer",
                                  file=file, row=lineno, column="id") from None
        difficulty = _parse_real(cells[2], "difficulty", file, lineno)
        granularity = _parse_real(cells[3], "granularity", file, lineno)
        rating = _parse_real(cells[4], "rating", file, lineno)
        if rating <= 0:
            raise CourseDataError(f"rating must be > 0, got {cells[4].strip()}",
                                  file=file, row=lineno, column="rating")
        if granularity <= 0:
            raise CourseDataError(f"granularity must be > 0, got {cells[3].strip()}",
                                  file=file, row=lineno, column="granularity")
        if difficulty < 0:
            raise CourseDataError(f"difficulty must be >= 0, got {cells[2].strip()}",
                                  file=file, row=lineno, column="difficulty")
        if cid in seen:
            raise CourseDataError(f"duplicate id {cid} (first seen at row {seen[cid]})",
                                  file=file, row=lineno, column="id")
        if cid < 0:
            raise CourseDataError(f"id must be non-negative, got {cid}",
                                  file=file, row=lineno, column="id")
        seen[cid] = lineno
        concepts.append(Concept(cid, cells[1].strip(), difficulty, granularity, rating))
    if not concepts:
        raise CourseDataError("course file has no concept rows", file=file)
    n = len(concepts)
    for cid, lineno in seen.items():
        if cid >= n:
            raise CourseDataError(f"id {cid} out of range; ids must be exactly 0..{n - 1}",
                                  file=file, row=lineno, column="id")
    concepts.sort(key=lambda c: c.id)
    return tuple(concepts)


def parse_rdm(text: str, n: int, file: str = "<rdm>") -> RelationDegreeMatrix:
    lines = _data_lines(text)
    rows = [(lineno, [c.strip() for c in next(csv.reader([line]))]) for lineno, line in lines]
    # optional header row of ids 0..n-1; for n <= 2 such a row is also a valid
    # data row, so it only counts as a header when n data rows follow it
    if len(rows) == n + 1 and rows[0][1] == [str(i) for i in range(n)]:
        rows = rows[1:]
    if len(rows) != n:
        raise CourseDataError(f"relation-degree matrix has {len(rows)} rows, "
                              f"course has {n} concepts", file=file)
    values = []
    for r, (lineno, cells) in enumerate(rows):
        if len(cells) != n:
            raise CourseDataError(f"expected {n} values, got {len(cells)}",
                                  file=file, row=lineno)
        row = []
        for c, cell in enumerate(cells):
            try:
                v = float(cell)
            except ValueError:
                raise CourseDataError(f"value {cell!r} is not a number",
                                      file=file, row=lineno, column=c) from None
            if r != c and not (0.0 <= v <= 1.0):
                raise CourseDataError(f"relation degree {cell} outside [0, 1]",
                                      file=file, row=lineno, column=c)
            if r == c and not math.isfinite(v):
                raise CourseDataError("diagonal value must be finite",
                                      file=file, row=lineno, column=c)
            row.append(v)
        values.append(tuple(row))
    return RelationDegreeMatrix(tuple(values))


def load_course(course_file: str | Path, rdm_file: str | Path) -> Course:
    """Read a course CSV and its relation-degree matrix CSV.

    Raises CourseDataError, located by file/row/column, on any defect.
    An asymmetric matrix is accepted with a logged warning.
    """
    concepts = parse_concepts(_read_text(course_file), file=str(course_file))
    rdm = parse_rdm(_read_text(rdm_file), len(concepts), file=str(rdm_file))
    if not rdm.is_symmetric():
        log.warning("relation-degree matrix %s is not symmetric; "
                    "cell [current][previous] is used", rdm_file)
    return Course(concepts, rdm)


def _fmt(v: float) -> str:
    return repr(float(v))


def dump_concepts(course: Course) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(COURSE_HEADER)
    for c in course.concepts:
        w.writerow([c.id, c.title, _fmt(c.difficulty), _fmt(c.granularity), _fmt(c.rating)])
    return buf.getvalue()


def dump_rdm(course: Course, header: bool = False) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if header:
        w.writerow(range(course.n))
    for row in course.rdm.values:
        w.writerow([_fmt(v) for v in row])
    return buf.getvalue()


def save_course(course: Course, course_file: str | Path, rdm_file: str | Path) -> None:
    Path(course_file).write_text(dump_concepts(course), encoding="utf-8")
    Path(rdm_file).write_text(dump_rdm(course), encoding="utf-8")
