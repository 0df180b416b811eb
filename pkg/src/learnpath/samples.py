"""Paths to the bundled sample data files."""
from __future__ import annotations

from importlib import resources
from pathlib import Path

from .course import Course, load_course

SAMPLES = {
    "table1": ("table1.csv", "sample_rdm.csv"),
    "synthetic8": ("synthetic8_course.csv", "synthetic8_rdm.csv"),
}


def sample_files(name: str = "table1") -> tuple[Path, Path]:
    course_name, rdm_name = SAMPLES[name]
    root = resources.files("learnpath") / "data"
    return Path(str(root / course_name)), Path(str(root / rdm_name))


def load_sample(name: str = "table1") -> Course:
    return load_course(*sample_files(name))
