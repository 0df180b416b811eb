import csv
import json
import subprocess
import sys

import pytest

from learnpath import GaConfig, sample_files
from learnpath.cli import MATRIX_CELLS, MATRIX_HEADER, main

FAST = ["--pop-size", "20", "--generations", "10", "--hc-iterations", "10"]


def read_csv(path):
    with open(path, newline="", encoding="utf-8") as f:
        return list(csv.DictReader(f))


def test_run_writes_artifacts(tmp_path, capsys):
    out = tmp_path / "res" / "run.json"
    args = ["run", "--selection", "tournament", "--init", "random", "--crossover", "cycle",
            "--generations", "150", "--seed", "42", "--out", str(out)]
    assert main(args) == 0
    printed = capsys.readouterr().out
    data = json.loads(out.read_text())
    assert data["config"]["generations"] == 150
    assert data["config"]["rng_seed"] == 42
    assert GaConfig.from_dict(data["config"]) == GaConfig(rng_seed=42)
    conv = read_csv(tmp_path / "res" / "run_convergence.csv")
    assert len(conv) == 150
    assert list(conv[0]) == ["generation", "best_fitness", "mean_fitness"]
    assert "first_fitness:" in printed and "best_path:" in printed

    again = tmp_path / "again.json"
    assert main(args[:-1] + [str(again)]) == 0
    assert again.read_text() == out.read_text()


def test_run_one_generation(tmp_path):
    out = tmp_path / "r.json"
    assert main(["run", "--generations", "1", "--out", str(out)] + FAST[:2]) == 0
    assert len(read_csv(tmp_path / "r_convergence.csv")) == 1


def test_run_missing_rdm(tmp_path, capsys):
    assert main(["run", "--rdm", str(tmp_path / "nope.csv")]) == 1
    assert "file not found" in capsys.readouterr().err


@pytest.mark.parametrize("bad", [
    ["--elitism", "20"], ["--tournament-size", "50"], ["--w", "2"], ["--generations", "0"],
    ["--selection", "rank"], ["--variant", "other"],
])
def test_run_usage_errors(bad):
    assert main(["run"] + FAST + bad) == 2


def test_roulette_on_negative_fitness_is_data_error(capsys):
    assert main(["run", "--selection", "roulette", "--variant", "text"] + FAST) == 1
    assert "non-negative" in capsys.readouterr().err


def test_matrix_shape_and_coverage(tmp_path):
    out = tmp_path / "m.csv"
    conv = tmp_path / "conv"
    assert main(["matrix", "--out", str(out), "--convergence-dir", str(conv)] + FAST) == 0
    rows = read_csv(out)
    assert list(rows[0]) == MATRIX_HEADER
    assert len(rows) == 12
    cells = [(r["selection"], r["init"], r["crossover"]) for r in rows]
    assert cells == [(s.value, i.value, c.value) for s, i, c in MATRIX_CELLS]
    assert len(set(cells)) == 12
    for r in rows:
        assert float(r["last_fitness"]) >= float(r["first_fitness"])
        assert sorted(map(int, r["best_path"].split())) == list(range(13))
    files = sorted(conv.glob("*.csv"))
    assert len(files) == 12
    assert all(len(read_csv(f)) == 10 for f in files)


def test_matrix_repeats(tmp_path):
    out = tmp_path / "m.csv"
    assert main(["matrix", "--repeats", "3", "--seed", "7", "--out", str(out)] + FAST) == 0
    rows = read_csv(out)
    assert len(rows) == 12
    for r in rows:
        assert r["repeats"] == "3"
        assert int(r["seed"]) in (7, 8, 9)
        assert float(r["last_fitness_std"]) >= 0
        assert float(r["last_fitness_mean"]) <= float(r["last_fitness"]) + 0.005


def test_matrix_parallel_matches_serial(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(["matrix", "--out", str(a)] + FAST) == 0
    assert main(["matrix", "--jobs", "3", "--out", str(b)] + FAST) == 0
    assert a.read_bytes() == b.read_bytes()


def test_evaluate_traditional(capsys):
    assert main(["evaluate", "--path", ",".join(map(str, range(13)))]) == 0
    out = capsys.readouterr().out
    assert "listing: 24.95 (selected)" in out
    assert "text: -2.95" in out


def test_evaluate_bad_path(capsys):
    assert main(["evaluate", "--path", "0,0,1"]) == 1
    assert "not a permutation" in capsys.readouterr().err
    assert main(["evaluate", "--path", "a,b"]) == 1


def _single_concept(tmp_path):
    c, r = tmp_path / "c.csv", tmp_path / "r.csv"
    c.write_text("id,title,difficulty,granularity,rating\n0,Only,1,5,6\n")
    r.write_text("1\n")
    return ["--course", str(c), "--rdm", str(r)]


def test_evaluate_single_concept(tmp_path, capsys):
    assert main(["evaluate", "--path", "0"] + _single_concept(tmp_path)) == 0
    out = capsys.readouterr().out
    assert "listing: 0.00" in out and "text: 0.00" in out


def test_oracle_commands(tmp_path, capsys):
    course, rdm = sample_files("synthetic8")
    assert main(["oracle", "--course", str(course), "--rdm", str(rdm)]) == 0
    out = capsys.readouterr().out
    assert "best_path: 7,6,5,2,1,3,4,0" in out
    assert "best_fitness: 14.69" in out

    assert main(["oracle"]) == 1
    assert "limited to 10" in capsys.readouterr().err

    assert main(["oracle"] + _single_concept(tmp_path)) == 0
    out = capsys.readouterr().out
    assert "best_path: 0\n" in out and "best_fitness: 0.00" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "learnpath", "evaluate", "--path", "0"],
                          capture_output=True, text=True)
    assert proc.returncode == 1
    proc = subprocess.run([sys.executable, "-m", "learnpath"], capture_output=True, text=True)
    assert proc.returncode == 2
