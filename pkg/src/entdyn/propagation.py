"""Exact time evolution of the state and of the supervector x.

Dynamics follow psi' = i H psi (note the sign), hence psi(t) = exp(iHt) psi(0)
and x(t) = exp(iAt) x(0).  Both generators are time independent, so one
spectral decomposition per Hamiltonian serves every sample time.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional, Sequence, Union

import numpy as np

from .entanglement import as_state, build_A, x_from_state, P_MATRICES
from .errors import GridMismatch
from .linalg import SpectralDecomposition, spectral_decompose
from .pauli import HamiltonianCoeffs, as_coeffs, build_hamiltonian


class Source(enum.Enum):
    SUPER_ODE = "SuperODE"
    SCHRODINGER_ORACLE = "SchrodingerOracle"
    CLOSED_FORM = "ClosedForm"


@dataclass(frozen=True)
class TimeGrid:
    """``steps + 1`` equally spaced samples from t0 to t1 inclusive.

    The initial state is taken to live at ``t0``.
    """

    t0: float
    t1: float
    steps: int

    def __post_init__(self):
        if int(self.steps) != self.steps or self.steps < 1:
            raise ValueError("steps must be a positive integer")
        if not self.t1 > self.t0:
            raise ValueError("t1 must exceed t0")

    def times(self) -> np.ndarray:
        return np.linspace(self.t0, self.t1, int(self.steps) + 1)


Grid = Union[TimeGrid, Sequence[float], np.ndarray]


def resolve_grid(grid: Grid) -> tuple[np.ndarray, float]:
    """Sample times and the time at which the initial state is given."""
    if isinstance(grid, TimeGrid):
        return grid.times(), float(grid.t0)
    return np.asarray(grid, dtype=float), 0.0


@dataclass
class ConcurrenceTrajectory:
    times: np.ndarray
    concurrence: np.ndarray
    source: Source
    ent: Optional[np.ndarray] = None          # complex x1(t) = psi^T sy sy psi
    x_samples: Optional[np.ndarray] = field(default=None, repr=False)

    def __len__(self) -> int:
        return len(self.times)


@lru_cache(maxsize=512)
def hamiltonian_spectrum(c: HamiltonianCoeffs) -> SpectralDecomposition:
    return spectral_decompose(build_hamiltonian(c))


@lru_cache(maxsize=512)
def generator_spectrum(c: HamiltonianCoeffs) -> SpectralDecomposition:
    return spectral_decompose(build_A(c))


def _propagate_many(spec: SpectralDecomposition, v0: np.ndarray, ts: np.ndarray) -> np.ndarray:
    # Row j holds exp(i M ts[j]) v0.
    v = spec.eigenvectors
    y = v.conj().T @ v0
    phases = np.exp(1j * np.outer(ts, spec.eigenvalues))
    return (phases * y) @ v.T


def evolve_state(c, psi0, t: float) -> np.ndarray:
    """psi(t) = exp(i H t) psi0."""
    psi0 = as_state(psi0)
    return hamiltonian_spectrum(as_coeffs(c)).propagator(t) @ psi0


def evolve_x(c, x0, t: float) -> np.ndarray:
    """x(t) = exp(i A t) x0."""
    x0 = np.asarray(x0, dtype=complex)
    if x0.shape != (10,):
        raise ValueError(f"supervector needs 10 entries, got shape {x0.shape}")
    return generator_spectrum(as_coeffs(c)).propagator(t) @ x0


def states_along(c, psi0, grid: Grid) -> np.ndarray:
    ts, origin = resolve_grid(grid)
    return _propagate_many(hamiltonian_spectrum(as_coeffs(c)), as_state(psi0), ts - origin)


def trajectory_super(c, psi0, grid: Grid, keep_x: bool = False) -> ConcurrenceTrajectory:
    """Concurrence from |x1(t)| with x propagated by the 10x10 generator."""
    ts, origin = resolve_grid(grid)
    x0 = x_from_state(psi0)
    xs = _propagate_many(generator_spectrum(as_coeffs(c)), x0, ts - origin)
    ent = xs[:, 0]
    return ConcurrenceTrajectory(
        times=ts,
        concurrence=np.abs(ent),
        source=Source.SUPER_ODE,
        ent=ent,
        x_samples=xs if keep_x else None,
    )


def trajectory_oracle(c, psi0, grid: Grid, keep_x: bool = False) -> ConcurrenceTrajectory:
    """Concurrence of the directly propagated 4-dim state."""
    ts, _ = resolve_grid(grid)
    psis = states_along(c, psi0, grid)
    ent = np.einsum("ti,ij,tj->t", psis, P_MATRICES[0], psis)
    xs = np.einsum("ti,kij,tj->tk", psis, P_MATRICES, psis) if keep_x else None
    return ConcurrenceTrajectory(
        times=ts,
        concurrence=np.abs(ent),
        source=Source.SCHRODINGER_ORACLE,
        ent=ent,
        x_samples=xs,
    )


def max_deviation(t1: ConcurrenceTrajectory, t2: ConcurrenceTrajectory) -> float:
    if len(t1.times) != len(t2.times) or np.max(np.abs(t1.times - t2.times), initial=0.0) > 1e-12:
        raise GridMismatch("trajectories are sampled on different time grids")
    return float(np.max(np.abs(t1.concurrence - t2.concurrence), initial=0.0))
