"""Interaction Hamiltonians of order 1-4 on a 4-qubit chain and unitary sweeps.

Order 1 is a uniform local field on every site and axis; order k in {2,3,4}
couples k consecutive sites per axis with coefficient -J_a/k. The order-3 sum
wraps site indices modulo 4 (its printed range already runs off the chain);
orders 2 and 3 optionally close the ring with ``periodic=True``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

import numpy as np

from .errors import DomainError
from .qinformation import q_information_reduced
from .records import SweepRecord
from .states import PureState

PAULI = {
    "I": np.eye(2, dtype=np.complex128),
    "X": np.array([[0, 1], [1, 0]], dtype=np.complex128),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
    "Z": np.array([[1, 0], [0, -1]], dtype=np.complex128),
}

AXES = "XYZ"


@dataclass(frozen=True)
class PauliString:
    """coefficient * (letter_0 x letter_1 x ... x letter_{n-1})."""

    n_qubits: int
    letters: tuple[str, ...]
    coefficient: float

    def __post_init__(self):
        if len(self.letters) != self.n_qubits:
            raise DomainError(f"need {self.n_qubits} letters, got {self.letters}")
        if any(l not in PAULI for l in self.letters):
            raise DomainError(f"letters must be in I/X/Y/Z, got {self.letters}")
        object.__setattr__(self, "letters", tuple(self.letters))

    @property
    def weight(self) -> int:
        return sum(1 for l in self.letters if l != "I")

    def matrix(self) -> np.ndarray:
        out = np.array([[self.coefficient]], dtype=np.complex128)
        for letter in self.letters:
            out = np.kron(out, PAULI[letter])
        return out


@dataclass(eq=False)
class Hamiltonian:
    """Sum of Pauli strings with a cached spectral decomposition."""

    n_qubits: int
    terms: tuple[PauliString, ...]
    order: int
    couplings: tuple[float, float, float] = (1.0, 1.0, 1.0)

    @cached_property
    def matrix(self) -> np.ndarray:
        dim = 2**self.n_qubits
        out = np.zeros((dim, dim), dtype=np.complex128)
        for term in self.terms:
            out += term.matrix()
        out.setflags(write=False)
        return out

    @cached_property
    def spectrum(self) -> tuple[np.ndarray, np.ndarray]:
        m = self.matrix
        evals, evecs = np.linalg.eigh((m + m.conj().T) / 2.0)
        evals.setflags(write=False)
        evecs.setflags(write=False)
        return evals, evecs


def _string(n: int, sites: Sequence[int], axis: str, coeff: float) -> PauliString:
    letters = ["I"] * n
    for s in sites:
        letters[s] = axis
    return PauliString(n, tuple(letters), coeff)


def build_hamiltonian(
    order: int,
    n: int = 4,
    couplings: tuple[float, float, float] = (1.0, 1.0, 1.0),
    periodic: bool = False,
) -> Hamiltonian:
    """Interaction Hamiltonian of the given order on a 4-qubit chain."""
    if n != 4:
        raise DomainError(f"the chain is defined for n=4, got {n}")
    if order not in (1, 2, 3, 4):
        raise DomainError(f"order must be 1..4, got {order}")
    jx, jy, jz = couplings
    j = dict(zip(AXES, (float(jx), float(jy), float(jz))))
    terms: list[PauliString] = []

    if order == 1:
        for i in range(4):
            for a in AXES:
                terms.append(_string(n, [i], a, -1.0))
    elif order == 2:
        bonds = [(0, 1), (1, 2), (2, 3)] + ([(3, 0)] if periodic else [])
        for i, k in bonds:
            for a in AXES:
                terms.append(_string(n, [i, k], a, -j[a] / 2.0))
    elif order == 3:
        starts = range(4) if periodic else range(3)
        for i in starts:
            sites = [i % 4, (i + 1) % 4, (i + 2) % 4]
            for a in AXES:
                terms.append(_string(n, sites, a, -j[a] / 3.0))
    else:
        for a in AXES:
            terms.append(_string(n, [0, 1, 2, 3], a, -j[a] / 4.0))

    return Hamiltonian(n, tuple(terms), order, (float(jx), float(jy), float(jz)))


@dataclass(frozen=True)
class TimeGrid:
    t_start: float
    t_end: float
    steps: int

    def __post_init__(self):
        if not self.t_start < self.t_end:
            raise DomainError(f"need t_start < t_end, got [{self.t_start}, {self.t_end}]")
        if self.steps < 2:
            raise DomainError(f"need at least 2 steps, got {self.steps}")

    def times(self) -> np.ndarray:
        return np.linspace(self.t_start, self.t_end, self.steps)


def evolve(psi: PureState, hamiltonian: Hamiltonian, t: float) -> PureState:
    """exp(-i H t)|psi> via the cached eigendecomposition of H."""
    if psi.n_qubits != hamiltonian.n_qubits:
        raise DomainError(
            f"state has {psi.n_qubits} qubits, Hamiltonian {hamiltonian.n_qubits}"
        )
    evals, evecs = hamiltonian.spectrum
    phases = np.exp(-1j * evals * t)
    amps = evecs @ (phases * (evecs.conj().T @ psi.amplitudes))
    return PureState(psi.n_qubits, amps, label=psi.label)


def sweep_q_information(
    psi0: PureState,
    hamiltonian: Hamiltonian,
    grid: TimeGrid,
    experiment: str = "sweep",
    params: dict | None = None,
) -> list[SweepRecord]:
    """Reduced Q-information of the evolved state at each grid point."""
    base = dict(params or {})
    base.setdefault("hamiltonian_order", hamiltonian.order)
    records = []
    for index, t in enumerate(grid.times()):
        omega = q_information_reduced(evolve(psi0, hamiltonian, float(t))).omega
        records.append(
            SweepRecord(
                experiment=experiment,
                params=base,
                index=index,
                t_or_sample=float(t),
                omega_q=omega,
            )
        )
    return records
