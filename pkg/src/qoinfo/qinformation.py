"""Classical O-information and its quantum counterpart.

For a state over n parts the measure is

    (n - 2) * S(rho) + sum_i [ S(rho_i) - S(rho_-i) ]

with S the von Neumann entropy in bits (Shannon entropy on the classical
side). Positive values indicate redundancy-dominated interdependencies,
negative values synergy-dominated ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .entropy import DensityMatrix, partial_trace, von_neumann_entropy
from .errors import DomainError
from .states import PureState

PMF_TOL = 1e-12


@dataclass(frozen=True)
class JointDistribution:
    """Discrete pmf over a product of finite variables."""

    cardinalities: tuple[int, ...]
    pmf: np.ndarray

    def __post_init__(self):
        card = tuple(int(c) for c in self.cardinalities)
        p = np.asarray(self.pmf, dtype=np.float64).reshape(card)
        if np.any(p < 0):
            raise DomainError("pmf has negative entries")
        if abs(float(p.sum()) - 1.0) > PMF_TOL:
            raise DomainError(f"pmf sums to {float(p.sum())!r}, expected 1")
        p.setflags(write=False)
        object.__setattr__(self, "cardinalities", card)
        object.__setattr__(self, "pmf", p)

    @property
    def n_vars(self) -> int:
        return len(self.cardinalities)


@dataclass(frozen=True)
class QInfoResult:
    """Measure value plus the entropy terms it was assembled from."""

    omega: float
    n_parts: int
    term_breakdown: tuple[tuple[str, float], ...]

    def recombined(self) -> float:
        """Re-evaluate the defining combination from the stored terms."""
        joint = 0.0
        parts = 0.0
        rests = 0.0
        for name, value in self.term_breakdown:
            if name.startswith("S(-") or name.startswith("H(-"):
                rests += value
            elif name.startswith("S(") or name.startswith("H("):
                parts += value
            else:
                joint = value
        return (self.n_parts - 2) * joint + parts - rests


def shannon_entropy(pmf: np.ndarray) -> float:
    """Entropy in bits with the 0 log 0 = 0 convention."""
    p = np.asarray(pmf, dtype=np.float64).reshape(-1)
    p = p[p > 0.0]
    return float(-np.sum(p * np.log2(p)))


def classical_o_information(p: JointDistribution) -> QInfoResult:
    """O-information of a discrete joint distribution, in bits."""
    n = p.n_vars
    if n < 2:
        raise DomainError(f"need at least 2 variables, got {n}")
    joint = shannon_entropy(p.pmf)
    terms: list[tuple[str, float]] = [("H", joint)]
    omega = (n - 2) * joint
    axes = tuple(range(n))
    for i in range(n):
        h_i = shannon_entropy(p.pmf.sum(axis=tuple(a for a in axes if a != i)))
        h_rest = shannon_entropy(p.pmf.sum(axis=i))
        terms.append((f"H({i})", h_i))
        terms.append((f"H(-{i})", h_rest))
        omega += h_i - h_rest
    return QInfoResult(omega, n, tuple(terms))


def _normalize_parts(labels: tuple[int, ...], parts) -> list[tuple[int, ...]]:
    if parts is None:
        return [(q,) for q in labels]
    blocks = []
    for part in parts:
        if isinstance(part, (int, np.integer)):
            blocks.append((int(part),))
        else:
            blocks.append(tuple(sorted(int(q) for q in part)))
    seen: set[int] = set()
    for block in blocks:
        if not block:
            raise DomainError("empty block in partition")
        for q in block:
            if q in seen:
                raise DomainError(f"qubit label {q} appears in more than one block")
            if q not in labels:
                raise DomainError(f"unknown qubit label {q}; state has labels {labels}")
            seen.add(q)
    if seen != set(labels):
        raise DomainError(f"partition {blocks} does not cover labels {labels}")
    return blocks


def q_information(rho: DensityMatrix, parts: Sequence | None = None) -> QInfoResult:
    """Q-information of a density matrix under a partition of its qubits.

    ``parts`` defaults to one block per qubit, the partition used throughout;
    blocks may be ints or iterables of qubit labels.
    """
    blocks = _normalize_parts(rho.labels, parts)
    n = len(blocks)
    if n < 2:
        raise DomainError(f"need at least 2 blocks, got {n}")
    joint = von_neumann_entropy(rho)
    terms: list[tuple[str, float]] = [("S", joint)]
    omega = (n - 2) * joint
    label_set = set(rho.labels)
    for block in blocks:
        s_i = von_neumann_entropy(partial_trace(rho, block))
        s_rest = von_neumann_entropy(partial_trace(rho, label_set - set(block)))
        tag = ",".join(str(q) for q in block)
        terms.append((f"S({tag})", s_i))
        terms.append((f"S(-{tag})", s_rest))
        omega += s_i - s_rest
    return QInfoResult(omega, n, tuple(terms))


def q_information_reduced(psi: PureState, traced_qubit: int = 0) -> QInfoResult:
    """Q-information of the mixed state left after tracing one qubit out.

    Pure states carry zero Q-information outright; tracing out a single qubit
    exposes the interdependency structure of the remainder. The result does
    not depend on the traced qubit for 4-qubit states.
    """
    n = psi.n_qubits
    if n < 3:
        raise DomainError(f"need at least 3 qubits, got {n}")
    if not 0 <= traced_qubit < n:
        raise DomainError(f"traced_qubit must be in [0, {n}), got {traced_qubit}")
    keep = [q for q in range(n) if q != traced_qubit]
    return q_information(partial_trace(psi, keep))


def q_information_bounds(psi: PureState) -> tuple[float, float]:
    """Subadditivity bounds on the reduced Q-information of a 4-qubit state.

    Returns (-2 min_X S_{-X}, 2 min_X S_X) over the four single-qubit choices.
    """
    if psi.n_qubits != 4:
        raise DomainError(f"bounds are defined for 4 qubits, got {psi.n_qubits}")
    single = []
    complement = []
    for x in range(4):
        single.append(von_neumann_entropy(partial_trace(psi, [x])))
        complement.append(
            von_neumann_entropy(partial_trace(psi, [q for q in range(4) if q != x]))
        )
    return -2.0 * min(complement), 2.0 * min(single)


def traced_choice_spread(psi: PureState) -> float:
    """Max minus min of the reduced measure over the four traced-qubit choices."""
    if psi.n_qubits != 4:
        raise DomainError(f"spread is defined for 4 qubits, got {psi.n_qubits}")
    values = [q_information_reduced(psi, traced_qubit=x).omega for x in range(4)]
    return max(values) - min(values)
