"""Independent oracles used to freeze expected values.

Everything here deliberately avoids the library's partial-trace and
eigendecomposition code paths: entropies come from SVDs of reshaped
amplitude tensors, classical entropies from plain loops.
"""

from __future__ import annotations

import math

import numpy as np


def binary_entropy(p: float) -> float:
    if p in (0.0, 1.0):
        return 0.0
    return -p * math.log2(p) - (1 - p) * math.log2(1 - p)


def shannon_direct(pmf) -> float:
    total = 0.0
    for p in np.asarray(pmf, dtype=float).ravel():
        if p > 0:
            total -= p * math.log2(p)
    return total


def classical_o_information_direct(pmf: np.ndarray) -> float:
    """Direct evaluation over explicit marginal sums."""
    pmf = np.asarray(pmf, dtype=float)
    n = pmf.ndim
    omega = (n - 2) * shannon_direct(pmf)
    for i in range(n):
        keep_axes = tuple(a for a in range(n) if a != i)
        omega += shannon_direct(pmf.sum(axis=keep_axes))
        omega -= shannon_direct(pmf.sum(axis=i))
    return omega


def schmidt_entropy(amplitudes: np.ndarray, keep: list[int], n: int) -> float:
    """Entropy of a pure-state marginal from SVD singular values."""
    rest = [q for q in range(n) if q not in keep]
    z = np.asarray(amplitudes).reshape((2,) * n).transpose(keep + rest)
    z = z.reshape(2 ** len(keep), 2 ** len(rest))
    s = np.linalg.svd(z, compute_uv=False)
    p = s**2
    p = p[p > 1e-15]
    return float(-np.sum(p * np.log2(p)))


def reduced_omega_pure(amplitudes: np.ndarray, n: int = 4) -> float:
    """Reduced Q-information of a pure 4-qubit state via Schmidt entropies only.

    Uses S_A + S_B + S_C + S_D - S_AB - S_AC - S_AD, each term from an SVD.
    """
    assert n == 4
    singles = sum(schmidt_entropy(amplitudes, [q], 4) for q in range(4))
    pairs = sum(schmidt_entropy(amplitudes, [0, q], 4) for q in (1, 2, 3))
    return singles - pairs


def ghz_reduced_omega(n: int) -> float:
    return float(n - 3)


def w_reduced_omega(n: int) -> float:
    """Closed form from the two-eigenvalue structure of every W marginal."""
    return (2 * n - 4) * binary_entropy(1 / n) - (n - 1) * binary_entropy(2 / n)


def haar_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_state_vector(n: int, rng: np.random.Generator) -> np.ndarray:
    z = rng.standard_normal(2**n) + 1j * rng.standard_normal(2**n)
    return z / np.linalg.norm(z)
