"""Analytic x1(t) for the Josephson-junction and exchange Hamiltonians.

Two families of formulas live here:

* the validated closed forms (default), which agree with direct
  propagation under psi' = i H psi and the a_k/2 coefficient convention;
* the *as-printed* variants, reproduced verbatim from the published
  expressions.  Those were written in a different convention: the
  Josephson expression equals the validated one at time -2t, the
  XY/Ising specialisations correspond to unit (not 2) exchange
  coefficients, and the exchange r-vector carries one flipped sign.

All functions accept scalar or array ``t``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .entanglement import PQVector, as_state, build_A, pq_from_state
from .errors import DegenerateScale
from .pauli import exchange_coeffs
from .propagation import ConcurrenceTrajectory, Grid, Source, resolve_grid


@dataclass(frozen=True)
class JosephsonParams:
    """H = -(E_J/2)(sx^1 + sx^2) + (E_J^2/E_L) sy^1 sy^2."""

    E_J: float
    E_L: float

    def __post_init__(self):
        if self.E_L == 0:
            raise DegenerateScale("E_L must be nonzero")
        if not (np.isfinite(self.E_J) and np.isfinite(self.E_L)):
            raise ValueError("Josephson energies must be finite")

    @property
    def alpha(self) -> float:
        return self.E_J / self.E_L


@dataclass(frozen=True)
class ExchangeParams:
    a7: float
    a11: float
    a15: float

    def __post_init__(self):
        if not np.all(np.isfinite([self.a7, self.a11, self.a15])):
            raise ValueError("exchange coefficients must be finite")


# ------------------------------------------------------------- Josephson

def _josephson_printed(alpha: float, e_j: float, pq: PQVector, tau):
    P, Q = pq.P, pq.Q
    tau = np.asarray(tau, dtype=float)
    root = np.sqrt(1.0 + alpha**2)
    fast = root * e_j * tau
    slow = alpha * e_j * tau
    den = 2.0 * (1.0 + alpha**2)

    r1 = (
        ((P(1) - P(4)) + (Q(6) + Q(8)) * alpha) / den
        + (Q(2) + Q(3)) * alpha / (2.0 * root) * np.sin(fast)
        + ((P(1) - P(4)) * alpha - (Q(6) + Q(8))) / den * alpha * np.cos(fast)
        + (P(1) + P(4)) / 2.0 * np.cos(slow)
        + (Q(2) - Q(3)) / 2.0 * np.sin(slow)
    )
    s1 = (
        ((Q(1) - Q(4)) - (P(6) + P(8)) * alpha) / den
        - (P(2) + P(3)) * alpha / (2.0 * root) * np.sin(fast)
        + ((Q(1) - Q(4)) * alpha + (P(6) + P(8))) / den * alpha * np.cos(fast)
        + (Q(1) + Q(4)) / 2.0 * np.cos(slow)
        - (P(2) - P(3)) / 2.0 * np.sin(slow)
    )
    return r1 + 1j * s1


def josephson_ent(params: JosephsonParams, pq: PQVector, t, as_printed: bool = False):
    """x1(t) = r1(t) + i s1(t) for the Josephson Hamiltonian.

    With ``as_printed`` the published expression is evaluated at ``t``
    itself; otherwise at ``-2t``, which is where it coincides with the
    evolution generated by ``josephson_coeffs(E_J, E_L)``.
    """
    if params.E_L == 0:
        raise DegenerateScale("E_L must be nonzero")
    tau = np.asarray(t, dtype=float)
    if not as_printed:
        tau = -2.0 * tau
    return _josephson_printed(params.alpha, params.E_J, pq, tau)


# -------------------------------------------------------------- exchange

def _trig(a7, a11, a15, t):
    t = np.asarray(t, dtype=float)
    return (np.cos(a7 * t), np.sin(a7 * t), np.cos(a11 * t), np.sin(a11 * t),
            np.cos(a15 * t), np.sin(a15 * t))


def exchange_rs(params: ExchangeParams, t, as_printed: bool = False):
    """The 8-vectors r(t), s(t) with x1(t) = (r + i s) . [p1..p4, q1..q4]."""
    c7, s7, c11, s11, c15, s15 = _trig(params.a7, params.a11, params.a15, t)
    # The published r_5 reads +s7 s11 s15; direct propagation gives the opposite sign.
    r5 = s7 * s11 * s15 if as_printed else -s7 * s11 * s15
    r = np.array([
        c7 * c11 * c15, s7 * c11 * s15, -s7 * s11 * c15, -c7 * s11 * s15,
        r5, -c7 * s11 * c15, c7 * c11 * s15, s7 * c11 * c15,
    ])
    s = np.array([
        s7 * s11 * s15, c7 * s11 * c15, -c7 * c11 * s15, -s7 * c11 * c15,
        c7 * c11 * c15, s7 * c11 * s15, -s7 * s11 * c15, -c7 * s11 * s15,
    ])
    return r, s


def exchange_ent(params: ExchangeParams, pq: PQVector, t, as_printed: bool = False):
    r, s = exchange_rs(params, t, as_printed)
    l = np.concatenate([pq.p[:4], pq.q[:4]])
    return np.tensordot(l, r, axes=1) + 1j * np.tensordot(l, s, axes=1)


def exchange_frequencies(params: ExchangeParams) -> tuple[float, float, float, float]:
    """Eigenvalues of the decoupled 4x4 block, in the order T diagonalises it."""
    a7, a11, a15 = params.a7, params.a11, params.a15
    return (a7 - a11 + a15, -a7 - a11 - a15, -a7 + a11 + a15, a7 + a11 - a15)


T_MATRIX = 0.5 * np.array([
    [-1, 1, 1, 1],
    [1, -1, 1, 1],
    [1, 1, -1, 1],
    [1, 1, 1, -1],
], dtype=float)
T_MATRIX.setflags(write=False)


def a11_block(params: ExchangeParams) -> np.ndarray:
    """Rows/columns 1-4 of the generator for a pure exchange Hamiltonian."""
    return build_A(exchange_coeffs(params.a7, params.a11, params.a15))[:4, :4]


def diagonalized_a11(params: ExchangeParams) -> np.ndarray:
    """T^-1 A11 T."""
    return np.linalg.inv(T_MATRIX) @ a11_block(params) @ T_MATRIX


# ------------------------------------------------ printed XY / Ising forms

def xy_concurrence_sq(pq: PQVector, t):
    """C^2(t) for the XY exchange Hamiltonian, formula as published."""
    P, Q = pq.P, pq.Q
    t = np.asarray(t, dtype=float)
    s2, c2 = np.sin(2 * t), np.cos(2 * t)
    first = (P(2) - P(4)) * s2 + (Q(1) + Q(3)) * c2 + Q(1) - Q(3)
    second = (Q(2) - Q(4)) * s2 - (P(1) + P(3)) * c2 - P(1) + P(3)
    return 0.25 * first**2 + 0.25 * second**2


def ising_concurrence(pq: PQVector, t):
    """C(t) for the Ising Hamiltonian, formula as published."""
    P, Q = pq.P, pq.Q
    t = np.asarray(t, dtype=float)
    st, ct = np.sin(t), np.cos(t)
    return np.sqrt((P(4) * st - Q(1) * ct) ** 2 + (Q(4) * st + P(1) * ct) ** 2)


# ----------------------------------------------------------- trajectories

def _closed(ts, ent=None, conc=None) -> ConcurrenceTrajectory:
    if conc is None:
        conc = np.abs(ent)
    return ConcurrenceTrajectory(times=ts, concurrence=np.asarray(conc, dtype=float),
                                 source=Source.CLOSED_FORM, ent=ent)


def josephson_trajectory(params: JosephsonParams, psi0, grid: Grid,
                         as_printed: bool = False) -> ConcurrenceTrajectory:
    ts, origin = resolve_grid(grid)
    pq = pq_from_state(as_state(psi0))
    return _closed(ts, ent=josephson_ent(params, pq, ts - origin, as_printed))


def exchange_trajectory(params: ExchangeParams, psi0, grid: Grid,
                        as_printed: bool = False) -> ConcurrenceTrajectory:
    ts, origin = resolve_grid(grid)
    pq = pq_from_state(as_state(psi0))
    return _closed(ts, ent=exchange_ent(params, pq, ts - origin, as_printed))


def xy_trajectory_as_printed(psi0, grid: Grid) -> ConcurrenceTrajectory:
    ts, origin = resolve_grid(grid)
    c2 = xy_concurrence_sq(pq_from_state(as_state(psi0)), ts - origin)
    return _closed(ts, conc=np.sqrt(np.maximum(c2, 0.0)))


def ising_trajectory_as_printed(psi0, grid: Grid) -> ConcurrenceTrajectory:
    ts, origin = resolve_grid(grid)
    return _closed(ts, conc=ising_concurrence(pq_from_state(as_state(psi0)), ts - origin))
