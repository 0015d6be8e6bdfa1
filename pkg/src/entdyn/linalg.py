"""Dense Hermitian eigensolver and exact unitary propagators.

Matrices here are tiny (4x4 Hamiltonians, 10x10 generators), so a cyclic
Jacobi sweep is both accurate and cheap.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceFailure, NotHermitian

MAX_SWEEPS = 100
OFF_TOL = 1e-13
MAX_DIM = 16


def _as_square(m) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if not 1 <= m.shape[0] <= MAX_DIM:
        raise ValueError(f"dimension {m.shape[0]} outside supported range 1..{MAX_DIM}")
    return m


def is_hermitian(m, tol: float = 1e-12) -> bool:
    """True iff ``max|m - m^dagger| <= tol``."""
    m = _as_square(m)
    return float(np.max(np.abs(m - m.conj().T), initial=0.0)) <= tol


@dataclass(frozen=True)
class SpectralDecomposition:
    """``m = V diag(eigenvalues) V^dagger`` with ascending eigenvalues."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T

    def propagator(self, t: float) -> np.ndarray:
        v = self.eigenvectors
        return (v * np.exp(1j * self.eigenvalues * t)) @ v.conj().T


def _off_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.sqrt(np.sum(np.abs(off) ** 2)))


def _rotate(a: np.ndarray, v: np.ndarray, p: int, q: int) -> None:
    # Zero a[p, q] in place with a 2x2 unitary: a phase on column q turns the
    # pivot real, then an ordinary real Jacobi rotation finishes the job.
    apq = a[p, q]
    r = abs(apq)
    phase = apq / r
    app, aqq = a[p, p].real, a[q, q].real
    tau = (aqq - app) / (2.0 * r)
    t = (1.0 if tau >= 0 else -1.0) / (abs(tau) + np.sqrt(1.0 + tau * tau))
    c = 1.0 / np.sqrt(1.0 + t * t)
    s = t * c
    g = np.array([[c, s], [-s * phase.conjugate(), c * phase.conjugate()]])
    idx = [p, q]
    a[:, idx] = a[:, idx] @ g
    a[idx, :] = g.conj().T @ a[idx, :]
    v[:, idx] = v[:, idx] @ g
    a[p, q] = a[q, p] = 0.0
    a[p, p] = a[p, p].real
    a[q, q] = a[q, q].real


def _fix_phases(v: np.ndarray) -> np.ndarray:
    # Make the first non-negligible entry of each column real and positive.
    v = v.copy()
    for j in range(v.shape[1]):
        col = v[:, j]
        k = int(np.argmax(np.abs(col) > 1e-8))
        v[:, j] = col * (abs(col[k]) / col[k])
    return v


def spectral_decompose(m) -> SpectralDecomposition:
    """Diagonalise a Hermitian matrix by cyclic Jacobi rotations.

    Raises
    ------
    NotHermitian
        If ``m`` deviates from its conjugate transpose by more than 1e-9.
    ConvergenceFailure
        If the off-diagonal norm is still above threshold after
        ``MAX_SWEEPS`` sweeps.
    """
    m = _as_square(m)
    if not is_hermitian(m, 1e-9):
        raise NotHermitian("spectral_decompose requires a Hermitian matrix")
    n = m.shape[0]
    a = 0.5 * (m + m.conj().T)
    v = np.eye(n, dtype=complex)
    threshold = OFF_TOL * max(1.0, float(np.linalg.norm(a)))

    for _ in range(MAX_SWEEPS):
        if _off_norm(a) <= threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                if abs(a[p, q]) > 1e-300:
                    _rotate(a, v, p, q)
    else:
        if _off_norm(a) > threshold:
            raise ConvergenceFailure(
                f"Jacobi did not converge in {MAX_SWEEPS} sweeps "
                f"(off-diagonal norm {_off_norm(a):.3e})"
            )

    w = np.diag(a).real
    order = np.argsort(w, kind="stable")
    w = w[order]
    v = _fix_phases(v[:, order])
    w.setflags(write=False)
    v.setflags(write=False)
    return SpectralDecomposition(w, v)


def unitary_propagator(m, t: float) -> np.ndarray:
    """Return ``exp(i m t)`` for Hermitian ``m``."""
    return spectral_decompose(m).propagator(t)
