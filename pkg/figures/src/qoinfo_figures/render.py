"""Render histograms and time-series grids from qoinfo experiment CSVs.

The input schemas are the ones published by the qoinfo CLI:

    hist:             experiment,n,sample,omega_q
    timeseries-grid:  experiment,hamiltonian_order,state,seed,step,t,omega_q

Rendering never alters data: histogram bin counts always sum to the row
count, and rerunning on the same CSV reproduces identical figure dimensions
and axis ranges.
"""

from __future__ import annotations

import csv
from collections import defaultdict
from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

REQUIRED_COLUMNS = {
    "hist": ("n", "omega_q"),
    "timeseries-grid": ("hamiltonian_order", "state", "t", "omega_q"),
}

SERIES_COLORS = {"YC": "black", "GHZ": "blue", "W": "red", "0000": "green"}
FALLBACK_COLOR = "gray"
DPI = 150


class SchemaError(ValueError):
    """The CSV does not match the expected experiment schema."""


@dataclass(frozen=True)
class FigureSpec:
    input_csv: Path
    kind: str  # "hist" or "timeseries-grid"
    output: Path
    title: str | None = None
    bins: int = 101


def load_rows(path: Path, kind: str) -> list[dict]:
    if kind not in REQUIRED_COLUMNS:
        raise SchemaError(f"unknown figure kind {kind!r}")
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        for column in REQUIRED_COLUMNS[kind]:
            if column not in header:
                raise SchemaError(f"missing required column {column!r} in {path}")
        rows = list(reader)
    if not rows:
        raise SchemaError(f"no data rows in {path}")
    return rows


def _span(values: np.ndarray) -> tuple[float, float]:
    lo, hi = float(values.min()), float(values.max())
    if lo == hi:  # degenerate data still needs a drawable range
        lo, hi = lo - 0.5, hi + 0.5
    return lo, hi


def _render_hist(spec: FigureSpec, rows: list[dict]) -> dict:
    by_n: dict[int, list[float]] = defaultdict(list)
    for row in rows:
        by_n[int(row["n"])].append(float(row["omega_q"]))
    sizes = sorted(by_n)
    all_values = np.array([v for vals in by_n.values() for v in vals])
    lo, hi = _span(all_values)

    fig, axes = plt.subplots(
        len(sizes), 1, figsize=(6.0, 2.2 * len(sizes)), sharex=True, squeeze=False
    )
    report_per_n = {}
    for ax, n in zip(axes.ravel(), sizes):
        values = np.array(by_n[n])
        counts, edges = np.histogram(values, bins=spec.bins, range=(lo, hi))
        ax.stairs(counts, edges, fill=True, color="steelblue")
        ax.set_ylabel("count")
        ax.set_xlim(lo, hi)
        ax.annotate(f"n = {n}", xy=(0.02, 0.85), xycoords="axes fraction")
        report_per_n[n] = {"rows": len(values), "bin_counts": counts.tolist()}
    axes.ravel()[-1].set_xlabel(r"$\Omega_Q$ (bits)")
    if spec.title:
        fig.suptitle(spec.title)
    fig.tight_layout()
    fig.savefig(spec.output, dpi=DPI)
    plt.close(fig)
    return {
        "kind": "hist",
        "rows": len(rows),
        "per_n": report_per_n,
        "x_range": [lo, hi],
        "bins": spec.bins,
    }


def _render_grid(spec: FigureSpec, rows: list[dict]) -> dict:
    series: dict[tuple[int, str], list[tuple[float, float]]] = defaultdict(list)
    for row in rows:
        key = (int(row["hamiltonian_order"]), row["state"])
        series[key].append((float(row["t"]), float(row["omega_q"])))

    orders = sorted({order for order, _ in series})
    all_omega = np.array([om for pts in series.values() for _, om in pts])
    all_t = np.array([t for pts in series.values() for t, _ in pts])
    t_lo, t_hi = _span(all_t)
    y_lo, y_hi = _span(all_omega)
    pad = 0.05 * (y_hi - y_lo)

    fig, axes = plt.subplots(2, 2, figsize=(9.0, 6.0), sharex=True, sharey=True)
    curves = 0
    for ax, order in zip(axes.ravel(), orders):
        states = sorted({s for o, s in series if o == order})
        for state in states:
            pts = sorted(series[(order, state)])
            ts = [p[0] for p in pts]
            oms = [p[1] for p in pts]
            ax.plot(ts, oms, color=SERIES_COLORS.get(state, FALLBACK_COLOR),
                    label=state, linewidth=1.2)
            curves += 1
        ax.set_title(f"order {order}")
        ax.set_xlim(t_lo, t_hi)
        ax.set_ylim(y_lo - pad, y_hi + pad)
    for ax in axes[1, :]:
        ax.set_xlabel("t")
    for ax in axes[:, 0]:
        ax.set_ylabel(r"$\Omega_Q$ (bits)")
    axes[0, 0].legend(loc="lower left", fontsize=8)
    if spec.title:
        fig.suptitle(spec.title)
    fig.tight_layout()
    fig.savefig(spec.output, dpi=DPI)
    plt.close(fig)
    return {
        "kind": "timeseries-grid",
        "rows": len(rows),
        "panels": len(orders),
        "curves": curves,
        "t_range": [t_lo, t_hi],
        "y_range": [y_lo - pad, y_hi + pad],
    }


def render(spec: FigureSpec) -> dict:
    """Render the figure and return a report of what was drawn."""
    rows = load_rows(spec.input_csv, spec.kind)
    Path(spec.output).parent.mkdir(parents=True, exist_ok=True)
    if spec.kind == "hist":
        return _render_hist(spec, rows)
    return _render_grid(spec, rows)
