"""Regenerate the bundled sample data in src/learnpath/data/.

table1.csv holds the 13 "Control Flow and Conditionals" concepts.  Only the
relation degree between consecutive concepts is known for that course; every
other off-diagonal cell of sample_rdm.csv is synthetic (seeded uniform draw).
synthetic8_*.csv is a fully synthetic 8-concept course for oracle checks.
"""
import random
from pathlib import Path

DATA = Path(__file__).resolve().parents[1] / "src" / "learnpath" / "data"

TABLE1 = [
    # id, title, difficulty, granularity, rating, rd with next concept
    (0, "Introducing Control Flow", 1, 5, 6, 0.985),
    (1, "Decision Making", 1.65, 10, 7, 0.982),
    (2, "If Statement", 2.15, 12.5, 6.5, 0.864),
    (3, "Variable Scope", 2.35, 15, 5.5, 0.731),
    (4, "Else Statement", 2.95, 15, 7, 0.829),
    (5, "Else If", 3.15, 13, 8, 0.816),
    (6, "Multiple Else Ifs", 3.95, 18, 6.5, 0.716),
    (7, "Boolean Expressions", 2.75, 8, 7.5, 0.501),
    (8, "Logical Operators", 2.15, 10, 7, 0.373),
    (9, "Logical Operators Practice", 2.25, 7.5, 8, 0.294),
    (10, "Nested If Statements", 4.55, 20, 8.5, 0.683),
    (11, "Switch Statement", 4.15, 20, 8.5, 0.674),
    (12, "Conclusion", 1.85, 14, 9, None),
]


def symmetric(n, rng, lo, hi, fixed=None):
    m = [[1.0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = round(rng.uniform(lo, hi), 3)
            if fixed and (i, j) in fixed:
                v = fixed[(i, j)]
            m[i][j] = m[j][i] = v
    return m


def write_rdm(path, m, note):
    lines = [f"# {line}" for line in note] + [",".join(str(v) for v in row) for row in m]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def write_course(path, rows, note=()):
    lines = [f"# {line}" for line in note] + ["id,title,difficulty,granularity,rating"]
    lines += [f"{r[0]},{r[1]},{r[2]},{r[3]},{r[4]}" for r in rows]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def main():
    write_course(DATA / "table1.csv", TABLE1)
    fixed = {(i, i + 1): row[5] for i, row in enumerate(TABLE1[:-1])}
    m = symmetric(len(TABLE1), random.Random(2021), 0.1, 0.9, fixed)
    write_rdm(DATA / "sample_rdm.csv", m, [
        "SYNTHETIC relation-degree matrix for table1.csv.",
        "Cells [i][i+1] and [i+1][i] are the published consecutive-concept degrees;",
        "all other off-diagonal cells are seeded uniform draws in [0.1, 0.9] (seed 2021).",
        "Row = current concept id, column = previous concept id. Diagonal is unused.",
    ])

    rng = random.Random(8)
    rows = [(i, f"Synthetic concept {i}", round(rng.uniform(1.0, 4.5), 2),
             round(rng.uniform(5, 20), 1), round(rng.uniform(5.5, 9), 1)) for i in range(8)]
    write_course(DATA / "synthetic8_course.csv", rows,
                 ["SYNTHETIC 8-concept course (seeded draws, seed 8)."])
    write_rdm(DATA / "synthetic8_rdm.csv", symmetric(8, rng, 0.0, 1.0), [
        "SYNTHETIC relation-degree matrix for synthetic8_course.csv (seed 8).",
    ])


if __name__ == "__main__":
    main()
