"""Truncated Fock-basis reference computations for the closed-form coherent-state code."""

import numpy as np
from scipy import linalg

FOCK_DIM = 160


def annihilation(dim: int = FOCK_DIM) -> np.ndarray:
    return np.diag(np.sqrt(np.arange(1, dim, dtype=np.float64)), k=1).astype(np.complex128)


def displacement(gamma: complex, dim: int = FOCK_DIM) -> np.ndarray:
    a = annihilation(dim)
    return linalg.expm(gamma * a.conj().T - np.conj(gamma) * a)


def coherent_ket(beta: complex, dim: int = FOCK_DIM) -> np.ndarray:
    vacuum = np.zeros(dim, dtype=np.complex128)
    vacuum[0] = 1.0
    return displacement(beta, dim) @ vacuum


def fock_vector(beta: complex, d: complex = 0.0, cutoff: int = 40, dim: int = FOCK_DIM) -> np.ndarray:
    """``<n|D(d)|beta>`` for ``n = 0..cutoff`` by matrix exponentials."""
    return (displacement(d, dim) @ coherent_ket(beta, dim))[: cutoff + 1]


def overlap(beta: complex, alpha: complex, dim: int = FOCK_DIM) -> complex:
    return complex(np.vdot(coherent_ket(beta, dim), coherent_ket(alpha, dim)))


def hermite_functions(q: np.ndarray, count: int) -> np.ndarray:
    """Normalized Hermite functions ``psi_n(q)`` for ``n < count``, by recurrence; shape ``(count, q)``."""
    q = np.asarray(q, dtype=np.float64)
    table = np.zeros((count,) + q.shape)
    table[0] = np.pi ** (-0.25) * np.exp(-0.5 * q**2)
    if count > 1:
        table[1] = np.sqrt(2.0) * q * table[0]
    for n in range(1, count - 1):
        table[n + 1] = np.sqrt(2.0 / (n + 1)) * q * table[n] - np.sqrt(n / (n + 1)) * table[n - 1]
    return table


def quadrature_wavefunction(x: np.ndarray, beta: complex, count: int = 120) -> np.ndarray:
    """``<x|beta>`` for the quadrature ``x = a + a^dagger``, summed over the Fock expansion of ``|beta>``."""
    weights = np.empty(count, dtype=np.complex128)
    weights[0] = np.exp(-0.5 * abs(beta) ** 2)
    for n in range(1, count):
        weights[n] = weights[n - 1] * beta / np.sqrt(n)
    x = np.asarray(x, dtype=np.float64)
    return 2.0 ** (-0.25) * np.tensordot(weights, hermite_functions(x / np.sqrt(2.0), count), axes=1)
