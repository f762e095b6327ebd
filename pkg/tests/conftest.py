from __future__ import annotations

import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from qoinfo.experiments import RunConfig, run_fig1a, run_fig1b, run_fig2, run_table1, write_output


def _run(runner, config):
    t0 = time.perf_counter()
    result = runner(config)
    elapsed = time.perf_counter() - t0
    write_output(result, config)
    return {"result": result, "elapsed": elapsed, "csv": config.out}


@pytest.fixture(scope="session")
def out_dir(tmp_path_factory) -> Path:
    return tmp_path_factory.mktemp("experiments")


@pytest.fixture(scope="session")
def table1_run(out_dir):
    return _run(run_table1, RunConfig(out=out_dir / "table1.csv"))


@pytest.fixture(scope="session")
def fig1a_run(out_dir):
    return _run(run_fig1a, RunConfig(out=out_dir / "fig1a.csv"))


@pytest.fixture(scope="session")
def fig1b_run(out_dir):
    return _run(run_fig1b, RunConfig(out=out_dir / "fig1b.csv"))


@pytest.fixture(scope="session")
def fig2_run(out_dir):
    return _run(run_fig2, RunConfig(out=out_dir / "fig2.csv"))
