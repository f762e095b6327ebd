"""Deterministic batch experiments behind the CLI.

Every random sample draws from a seed derived purely from (master seed,
experiment tag, sample index), so outputs are byte-identical regardless of
worker count or scheduling.
"""

from __future__ import annotations

import csv
import hashlib
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .dynamics import TimeGrid, build_hamiltonian, sweep_q_information
from .errors import DomainError
from .qinformation import q_information, q_information_bounds, q_information_reduced, traced_choice_spread
from .records import SweepRecord
from .states import (
    PureState,
    enumerate_binary_states,
    random_gaussian_state,
    registry_get,
)
from .entropy import partial_trace

TABLE_ROWS: tuple[tuple[str, int], ...] = tuple(
    [("GHZ", n) for n in range(3, 9)]
    + [("W", n) for n in (3, 4, 5, 6, 7, 8, 10, 12)]
    + [("MMES", n) for n in (3, 4, 5, 6)]
    + [("YC", 4), ("HD", 4), ("HS", 4)]
)

FIG2_STATES = ("YC", "GHZ", "W", "0000")
FIG1B_SIZES = (4, 5, 6, 7)

# The order-2 panel needs an anisotropic flip (J_y = -1) to show any motion at
# all for GHZ, W and |0000>: with J_x = J_y those three are eigenstates of the
# chain, so their series are provably constant. See README for the analysis.
DEFAULT_H2_COUPLINGS = (1.0, -1.0, 1.0)


@dataclass(frozen=True)
class RunConfig:
    """Everything a batch run depends on; equal configs give equal bytes."""

    seed: int = 1
    samples: int = 10_000
    t_start: float = 0.0
    t_max: float = 10.0
    steps: int = 501
    out: Path | None = None
    fmt: str = "csv"
    workers: int = 1
    periodic_bonds: bool = False
    bins: int = 101
    diagnostics: bool = False
    h2_couplings: tuple[float, float, float] = DEFAULT_H2_COUPLINGS

    def grid(self) -> TimeGrid:
        return TimeGrid(self.t_start, self.t_max, self.steps)


def _fmt(value) -> str:
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def stable_tag_hash(tag: str) -> int:
    """Platform-independent 64-bit hash of an experiment tag."""
    return int.from_bytes(hashlib.sha256(tag.encode("utf-8")).digest()[:8], "big")


def derive_sample_seed(master_seed: int, tag: str, index: int) -> int:
    """Pure function of (master seed, experiment tag, sample index)."""
    seq = np.random.SeedSequence([master_seed, stable_tag_hash(tag), index])
    return int(seq.generate_state(1, dtype=np.uint64)[0])


def fig2_state(name: str) -> PureState:
    if name == "0000":
        from .states import make_basis_state

        return make_basis_state(4, 0)
    return registry_get(name, 4).state()


# ---------------------------------------------------------------------------
# table1
# ---------------------------------------------------------------------------

def run_table1(config: RunConfig) -> dict:
    """Recompute every registry reference row and its absolute deviation."""
    rows = []
    for name, n in TABLE_ROWS:
        entry = registry_get(name, n)
        omega = q_information_reduced(entry.state()).omega
        reference = entry.expected_q_information
        rows.append(
            {
                "state": name,
                "n": n,
                "omega_q": omega,
                "paper_value": reference,
                "abs_dev": abs(omega - reference),
            }
        )
    summary = {
        "rows": len(rows),
        "max_abs_dev": max(r["abs_dev"] for r in rows),
    }
    return {"schema": ["state", "n", "omega_q", "paper_value", "abs_dev"],
            "rows": rows, "summary": summary}


# ---------------------------------------------------------------------------
# fig1a: every nonzero 0/1 coefficient assignment on 4 qubits
# ---------------------------------------------------------------------------

def _binary_state(mask: int) -> PureState:
    bits = np.array([(mask >> i) & 1 for i in range(16)], dtype=np.float64)
    return PureState(4, bits.astype(np.complex128) / np.sqrt(bits.sum()))


def _fig1a_chunk(args) -> list[tuple]:
    start, stop, diagnostics = args
    out = []
    for mask in range(start, stop):
        psi = _binary_state(mask)
        omega = q_information_reduced(psi).omega
        if diagnostics:
            lo, hi = q_information_bounds(psi)
            out.append((mask, omega, lo, hi, traced_choice_spread(psi)))
        else:
            out.append((mask, omega))
    return out


def run_fig1a(config: RunConfig) -> dict:
    """Reduced Q-information of all 65,535 binary-coefficient 4-qubit states."""
    n_states = 2**16 - 1
    chunks = _split(1, n_states + 1, config.workers)
    args = [(a, b, config.diagnostics) for a, b in chunks]
    results = _map_chunks(_fig1a_chunk, args, config.workers)

    rows = []
    omegas = np.empty(n_states)
    for chunk in results:
        for rec in chunk:
            mask, omega = rec[0], rec[1]
            row = {"experiment": "fig1a", "n": 4, "sample": mask, "omega_q": omega}
            if config.diagnostics:
                row.update(
                    bound_lower=rec[2], bound_upper=rec[3], traced_spread=rec[4]
                )
            rows.append(row)
            omegas[mask - 1] = omega

    counts, edges = np.histogram(omegas, bins=config.bins, range=(-1.5, 1.5))
    summary = {
        "states": n_states,
        "min": float(omegas.min()),
        "max": float(omegas.max()),
        "count_negative": int(np.sum(omegas < -1e-9)),
        "count_positive": int(np.sum(omegas > 1e-9)),
        "count_zero": int(np.sum(np.abs(omegas) <= 1e-9)),
        "histogram": {"counts": counts.tolist(), "edges": edges.tolist()},
    }
    schema = ["experiment", "n", "sample", "omega_q"]
    if config.diagnostics:
        schema += ["bound_lower", "bound_upper", "traced_spread"]
    return {"schema": schema, "rows": rows, "summary": summary}


# ---------------------------------------------------------------------------
# fig1b: Gaussian random states traced down to 3 qubits, n = 4..7
# ---------------------------------------------------------------------------

def _fig1b_chunk(args) -> list[tuple]:
    n, indices, master_seed, diagnostics = args
    out = []
    for i in indices:
        seed = derive_sample_seed(master_seed, f"fig1b:n={n}", i)
        psi = random_gaussian_state(n, seed)
        rho = partial_trace(psi, keep=range(n - 3, n))
        omega = q_information(rho).omega
        if diagnostics and n == 4:
            lo, hi = q_information_bounds(psi)
            out.append((i, omega, lo, hi, traced_choice_spread(psi)))
        else:
            out.append((i, omega))
    return out


def run_fig1b(config: RunConfig) -> dict:
    """Induced-measure sampling: trace n-3 qubits from random n-qubit states."""
    rows = []
    summary = {}
    for n in FIG1B_SIZES:
        chunks = _split(0, config.samples, config.workers)
        args = [(n, range(a, b), config.seed, config.diagnostics) for a, b in chunks]
        results = _map_chunks(_fig1b_chunk, args, config.workers)
        omegas = np.empty(config.samples)
        for chunk in results:
            for rec in chunk:
                i, omega = rec[0], rec[1]
                row = {"experiment": "fig1b", "n": n, "sample": i, "omega_q": omega}
                if config.diagnostics:
                    if len(rec) > 2:
                        row.update(
                            bound_lower=rec[2], bound_upper=rec[3], traced_spread=rec[4]
                        )
                    else:
                        row.update(bound_lower="", bound_upper="", traced_spread="")
                rows.append(row)
                omegas[i] = omega
        counts, edges = np.histogram(omegas, bins=config.bins, range=(-1.5, 1.5))
        summary[f"n={n}"] = {
            "samples": config.samples,
            "min": float(omegas.min()),
            "max": float(omegas.max()),
            "mean": float(omegas.mean()),
            "std": float(omegas.std()),
            "histogram": {"counts": counts.tolist(), "edges": edges.tolist()},
        }
    schema = ["experiment", "n", "sample", "omega_q"]
    if config.diagnostics:
        schema += ["bound_lower", "bound_upper", "traced_spread"]
    return {"schema": schema, "rows": rows, "summary": summary}


# ---------------------------------------------------------------------------
# fig2: time evolution sweeps for orders 1..4
# ---------------------------------------------------------------------------

def run_fig2(config: RunConfig) -> dict:
    """Sixteen sweeps: four Hamiltonian orders times four starting states."""
    rows = []
    summary = {}
    grid = config.grid()
    for order in (1, 2, 3, 4):
        couplings = config.h2_couplings if order == 2 else (1.0, 1.0, 1.0)
        ham = build_hamiltonian(order, couplings=couplings, periodic=config.periodic_bonds)
        for name in FIG2_STATES:
            psi0 = fig2_state(name)
            records = sweep_q_information(
                psi0, ham, grid, experiment="fig2",
                params={"hamiltonian_order": order, "state": name, "seed": config.seed},
            )
            series = np.array([r.omega_q for r in records])
            summary[f"H{order}:{name}"] = {
                "min": float(series.min()),
                "max": float(series.max()),
                "spread": float(series.max() - series.min()),
            }
            for rec in records:
                rows.append(
                    {
                        "experiment": "fig2",
                        "hamiltonian_order": order,
                        "state": name,
                        "seed": config.seed,
                        "step": rec.index,
                        "t": rec.t_or_sample,
                        "omega_q": rec.omega_q,
                    }
                )
    schema = ["experiment", "hamiltonian_order", "state", "seed", "step", "t", "omega_q"]
    return {"schema": schema, "rows": rows, "summary": summary}


# ---------------------------------------------------------------------------
# shared plumbing
# ---------------------------------------------------------------------------

def _split(start: int, stop: int, workers: int) -> list[tuple[int, int]]:
    count = stop - start
    parts = max(1, min(workers, count))
    step = (count + parts - 1) // parts
    return [(a, min(a + step, stop)) for a in range(start, stop, step)]


def _map_chunks(fn, args: list, workers: int) -> list:
    if workers <= 1 or len(args) <= 1:
        return [fn(a) for a in args]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, args))


def write_output(result: dict, config: RunConfig) -> None:
    """Write rows to config.out as CSV or JSON with 17-significant-digit floats."""
    if config.out is None:
        return
    path = Path(config.out)
    path.parent.mkdir(parents=True, exist_ok=True)
    if config.fmt == "csv":
        with open(path, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(result["schema"])
            for row in result["rows"]:
                writer.writerow([_fmt(row[col]) for col in result["schema"]])
    elif config.fmt == "json":
        payload = {
            "schema": result["schema"],
            "rows": [
                {col: row[col] for col in result["schema"]} for row in result["rows"]
            ],
            "summary": result["summary"],
        }
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, sort_keys=True, indent=None, separators=(",", ":"))
            fh.write("\n")
    else:
        raise DomainError(f"unknown output format {config.fmt!r}")
