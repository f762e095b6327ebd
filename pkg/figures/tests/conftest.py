from __future__ import annotations

import csv
import subprocess
import sys
from pathlib import Path

import pytest


def _qoinfo(args: list[str]) -> None:
    proc = subprocess.run(
        [sys.executable, "-m", "qoinfo.cli", *args], capture_output=True, text=True
    )
    if proc.returncode != 0:
        pytest.skip(f"qoinfo CLI unavailable: {proc.stderr.strip()}")


@pytest.fixture(scope="session")
def csv_dir(tmp_path_factory) -> Path:
    return tmp_path_factory.mktemp("csv")


@pytest.fixture(scope="session")
def fig1b_csv(csv_dir) -> Path:
    path = csv_dir / "fig1b.csv"
    _qoinfo(["fig1b", "--samples", "40", "--out", str(path)])
    return path


@pytest.fixture(scope="session")
def fig2_csv(csv_dir) -> Path:
    path = csv_dir / "fig2.csv"
    _qoinfo(["fig2", "--steps", "31", "--out", str(path)])
    return path


@pytest.fixture(scope="session")
def fig1a_csv(csv_dir) -> Path:
    """A small CSV in the fig1a schema (the full run has 65,535 rows)."""
    path = csv_dir / "fig1a.csv"
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["experiment", "n", "sample", "omega_q"])
        values = [-1.0, -0.7, -0.4, -0.4, -0.1, 0.0, 0.0, 0.3, 0.5, 1.0]
        for i, v in enumerate(values, start=1):
            writer.writerow(["fig1a", 4, i, format(v, ".17g")])
    return path
