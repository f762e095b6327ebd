"""The row unit shared by sweeps and batch experiments."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class SweepRecord:
    """One evaluated sample or time step of an experiment."""

    experiment: str
    params: dict
    index: int
    t_or_sample: float | int
    omega_q: float
    diagnostics: dict | None = None
