"""Density matrices, partial traces, and von Neumann entropy in bits.

Reduced states of pure inputs are computed by contracting the amplitude
vector directly; the full 2^n x 2^n projector is never materialized.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

import numpy as np

from .errors import DomainError, NotAStateError, ResourceError
from .states import PureState

HERMITICITY_TOL = 1e-10
TRACE_TOL = 1e-10
EIG_FLOOR = -1e-8  # below this an eigenvalue is an error, not roundoff
DENSITY_MAX_QUBITS = 12


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian, PSD, unit-trace matrix over the listed qubits."""

    labels: tuple[int, ...]
    matrix: np.ndarray

    def __post_init__(self):
        mat = np.asarray(self.matrix, dtype=np.complex128)
        d = 2 ** len(self.labels)
        if mat.shape != (d, d):
            raise DomainError(f"matrix must be {d}x{d} for labels {self.labels}")
        mat.setflags(write=False)
        object.__setattr__(self, "matrix", mat)
        object.__setattr__(self, "labels", tuple(self.labels))

    @property
    def n_qubits(self) -> int:
        return len(self.labels)

    @property
    def dim(self) -> int:
        return 2 ** len(self.labels)

    def validate(self) -> None:
        m = self.matrix
        herm = float(np.max(np.abs(m - m.conj().T)))
        if herm > HERMITICITY_TOL:
            raise NotAStateError(f"matrix is not Hermitian: max |M - M^H| = {herm:g}")
        tr = complex(np.trace(m))
        if abs(tr - 1.0) > TRACE_TOL:
            raise NotAStateError(f"trace is {tr!r}, expected 1")
        lo = float(np.linalg.eigvalsh((m + m.conj().T) / 2.0)[0])
        if lo < EIG_FLOOR:
            raise NotAStateError(f"matrix has negative eigenvalue {lo:g}", eigenvalue=lo)


StateLike = Union[DensityMatrix, PureState]


def density_of(state: PureState) -> DensityMatrix:
    """|psi><psi| with all of the state's qubits as labels."""
    if state.n_qubits > DENSITY_MAX_QUBITS:
        raise ResourceError(
            f"refusing to materialize a {state.dim}x{state.dim} density matrix "
            f"(limit: {DENSITY_MAX_QUBITS} qubits)"
        )
    a = state.amplitudes
    return DensityMatrix(tuple(range(state.n_qubits)), np.outer(a, a.conj()))


def _keep_positions(labels: tuple[int, ...], keep: Iterable[int]) -> list[int]:
    keep = sorted(set(keep))
    if not keep:
        raise DomainError("keep must be a nonempty set of qubit labels")
    positions = []
    for q in keep:
        if q not in labels:
            raise DomainError(f"unknown qubit label {q}; state has labels {labels}")
        positions.append(labels.index(q))
    return positions


def partial_trace(rho_or_state: StateLike, keep: Iterable[int]) -> DensityMatrix:
    """Reduced density matrix on the qubits in ``keep`` (ascending label order)."""
    if isinstance(rho_or_state, PureState):
        state = rho_or_state
        labels = tuple(range(state.n_qubits))
        pos = _keep_positions(labels, keep)
        rest = [p for p in range(state.n_qubits) if p not in pos]
        z = state.amplitudes.reshape((2,) * state.n_qubits)
        z = z.transpose(pos + rest).reshape(2 ** len(pos), 2 ** len(rest))
        reduced = z @ z.conj().T
        return DensityMatrix(tuple(labels[p] for p in pos), reduced)

    rho = rho_or_state
    pos = _keep_positions(rho.labels, keep)
    n = rho.n_qubits
    rest = [p for p in range(n) if p not in pos]
    t = rho.matrix.reshape((2,) * (2 * n))
    perm = pos + rest + [p + n for p in pos] + [p + n for p in rest]
    t = t.transpose(perm).reshape(
        2 ** len(pos), 2 ** len(rest), 2 ** len(pos), 2 ** len(rest)
    )
    reduced = np.einsum("abcb->ac", t)
    return DensityMatrix(tuple(rho.labels[p] for p in pos), reduced)


def entropy_of_spectrum(eigenvalues: np.ndarray) -> float:
    """-sum(p log2 p) with 0 log 0 = 0; negatives above EIG_FLOOR count as 0."""
    lo = float(np.min(eigenvalues))
    if lo < EIG_FLOOR:
        raise NotAStateError(f"negative eigenvalue {lo:g} in spectrum", eigenvalue=lo)
    p = eigenvalues[eigenvalues > 0.0]
    if p.size == 0:
        return 0.0
    total = float(-np.sum(p * np.log2(p)))
    if -1e-9 < total < 0.0:  # an eigenvalue a fraction above 1 is roundoff too
        return 0.0
    return total


def von_neumann_entropy(rho: StateLike) -> float:
    """Entropy in bits. Symmetrizes before the eigendecomposition."""
    if isinstance(rho, PureState):
        return 0.0
    m = rho.matrix
    eig = np.linalg.eigvalsh((m + m.conj().T) / 2.0)
    return entropy_of_spectrum(eig)


def purity(rho: StateLike) -> float:
    """Tr(rho^2), in [1/dim, 1]."""
    if isinstance(rho, PureState):
        return 1.0
    return float(np.vdot(rho.matrix, rho.matrix).real)
