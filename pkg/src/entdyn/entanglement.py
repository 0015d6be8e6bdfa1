"""Concurrence, the ten bilinears x_k = psi^T P_k psi, and their generator.

For a pure two-qubit state evolving as psi' = i H psi, the vector
x = (x_1, ..., x_10) obeys the closed linear system x' = i A x where A is a
10x10 Hermitian matrix whose entries are read off from the Hamiltonian
coefficients.  x_1 = psi^T (sy (x) sy) psi, whose modulus is the
concurrence.

Everything here uses the *bilinear* form psi^T M psi (plain transpose, no
conjugation).  Mixing that up with the inner product is the classic bug.
"""
from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .errors import NotNormalized
from .pauli import SX, SY, SZ, I2, as_coeffs, build_hamiltonian

NORM_TOL = 1e-8

# P_1..P_10
P_MATRICES = np.array([
    np.kron(SY, SY),
    np.eye(4, dtype=complex),
    np.kron(SX, SX),
    np.kron(SZ, SZ),
    1j * np.kron(SZ, I2),
    1j * np.kron(I2, SX),
    np.kron(SX, SZ),
    1j * np.kron(SX, I2),
    np.kron(SZ, SX),
    1j * np.kron(I2, SZ),
])
P_MATRICES.setflags(write=False)


def p_matrices() -> list[np.ndarray]:
    return [p.copy() for p in P_MATRICES]


# ---------------------------------------------------------------- states

def bilinear(u, m, v) -> complex:
    """u^T m v, without complex conjugation."""
    return complex(np.asarray(u) @ np.asarray(m) @ np.asarray(v))


def as_state(psi, tol: float = NORM_TOL) -> np.ndarray:
    """Validate a 4-amplitude state, raising NotNormalized if off the unit sphere."""
    psi = np.asarray(psi, dtype=complex)
    if psi.shape != (4,):
        raise ValueError(f"two-qubit state needs 4 amplitudes, got shape {psi.shape}")
    norm = np.linalg.norm(psi)
    if abs(norm - 1.0) > tol:
        raise NotNormalized(f"state norm {norm:.12g} deviates from 1 by more than {tol:g}")
    return psi


def renormalize(psi) -> np.ndarray:
    psi = np.asarray(psi, dtype=complex)
    norm = np.linalg.norm(psi)
    if norm == 0.0:
        raise NotNormalized("cannot normalize the zero vector")
    return psi / norm


def state_from_components(components) -> np.ndarray:
    """Amplitude j is ``psi_(2j-1) + i psi_(2j)`` for eight real components."""
    c = np.asarray(components, dtype=float)
    if c.shape != (8,):
        raise ValueError("expected eight real components")
    return c[0::2] + 1j * c[1::2]


def state_components(psi) -> np.ndarray:
    psi = np.asarray(psi, dtype=complex)
    out = np.empty(8)
    out[0::2] = psi.real
    out[1::2] = psi.imag
    return out


_S = 1.0 / np.sqrt(2.0)
NAMED_STATES = {
    "basis00": np.array([1, 0, 0, 0], dtype=complex),
    "basis01": np.array([0, 1, 0, 0], dtype=complex),
    "basis10": np.array([0, 0, 1, 0], dtype=complex),
    "basis11": np.array([0, 0, 0, 1], dtype=complex),
    "bell_phi_plus": np.array([_S, 0, 0, _S], dtype=complex),
    "bell_phi_minus": np.array([_S, 0, 0, -_S], dtype=complex),
    "bell_psi_plus": np.array([0, _S, _S, 0], dtype=complex),
    "bell_psi_minus": np.array([0, _S, -_S, 0], dtype=complex),
}


def named_state(name: str) -> np.ndarray:
    try:
        return NAMED_STATES[name].copy()
    except KeyError:
        raise ValueError(f"unknown state preset {name!r}") from None


def random_state(rng: np.random.Generator) -> np.ndarray:
    z = rng.normal(size=4) + 1j * rng.normal(size=4)
    return z / np.linalg.norm(z)


# ---------------------------------------------------------- supervector

def x_from_state(psi) -> np.ndarray:
    """The ten bilinears x_k = psi^T P_k psi."""
    psi = as_state(psi)
    return np.einsum("i,kij,j->k", psi, P_MATRICES, psi)


def concurrence(psi) -> float:
    """|psi^T (sy (x) sy) psi| for a normalized pure state."""
    psi = as_state(psi)
    return abs(bilinear(psi, P_MATRICES[0], psi))


class PQVector(NamedTuple):
    """Real and imaginary parts of x at the initial time."""

    p: np.ndarray
    q: np.ndarray

    def P(self, k: int) -> float:
        return float(self.p[k - 1])

    def Q(self, k: int) -> float:
        return float(self.q[k - 1])

    def as_complex(self) -> np.ndarray:
        return self.p + 1j * self.q


def pq_from_state(psi) -> PQVector:
    """Evaluate p_k, q_k as explicit quadratic polynomials in the 8 real components."""
    psi = as_state(psi)
    s1, s2, s3, s4, s5, s6, s7, s8 = state_components(psi)
    p = np.array([
        2 * (s3 * s5 - s4 * s6 - s1 * s7 + s2 * s8),
        s1**2 - s2**2 + s3**2 - s4**2 + s5**2 - s6**2 + s7**2 - s8**2,
        2 * (s3 * s5 - s4 * s6 + s1 * s7 - s2 * s8),
        s1**2 - s2**2 - s3**2 + s4**2 - s5**2 + s6**2 + s7**2 - s8**2,
        2 * (-s1 * s2 - s3 * s4 + s5 * s6 + s7 * s8),
        2 * (-s2 * s3 - s1 * s4 - s6 * s7 - s5 * s8),
        2 * (s1 * s5 - s2 * s6 - s3 * s7 + s4 * s8),
        2 * (-s2 * s5 - s1 * s6 - s4 * s7 - s3 * s8),
        2 * (s1 * s3 - s2 * s4 - s5 * s7 + s6 * s8),
        2 * (-s1 * s2 + s3 * s4 - s5 * s6 + s7 * s8),
    ])
    q = np.array([
        2 * (s4 * s5 + s3 * s6 - s2 * s7 - s1 * s8),
        2 * (s1 * s2 + s3 * s4 + s5 * s6 + s7 * s8),
        2 * (s4 * s5 + s3 * s6 + s2 * s7 + s1 * s8),
        2 * (s1 * s2 - s3 * s4 - s5 * s6 + s7 * s8),
        s1**2 - s2**2 + s3**2 - s4**2 - s5**2 + s6**2 - s7**2 + s8**2,
        2 * (s1 * s3 - s2 * s4 + s5 * s7 - s6 * s8),
        2 * (s2 * s5 + s1 * s6 - s4 * s7 - s3 * s8),
        2 * (s1 * s5 - s2 * s6 + s3 * s7 - s4 * s8),
        2 * (s2 * s3 + s1 * s4 - s6 * s7 - s5 * s8),
        s1**2 - s2**2 - s3**2 + s4**2 + s5**2 - s6**2 - s7**2 + s8**2,
    ])
    return PQVector(p, q)


# ------------------------------------------------------------ generator

# Row k lists A[k][j] as "<sign><i?><coefficient index>", "0" for none.
_A_TABLE = """
   0    +11  -15   -7   -8  +12  +13  +14   +9  -10
 +11     0   +7  +15  -i3  -i4   +9  -i1  +13  -i6
 -15    +7    0  -11  +10  -i1  +i5  -i4  +i2   +8
  -7   +15  -11    0  -i6  -14  -i2  -12  -i5  -i3
  -8   +i3  +10  +i6    0  +13  +12  -i2  +i4  +15
 +12   +i4  +i1  -14  +13    0   -8   +7  +i3  +i5
 +13    +9  -i5  +i2  +12   -8    0  -i6  +11  -i1
 +14   +i1  +i4  -12  +i2   +7  +i6    0  -10   +9
  +9   +13  -i2  +i5  -i4  -i3  +11  -10    0  +14
 -10   +i6   +8  +i3  +15  -i5  +i1   +9  +14    0
"""


def _parse_table(text: str) -> tuple[np.ndarray, np.ndarray]:
    index = np.zeros((10, 10), dtype=int)  # 0 means no coefficient
    mult = np.zeros((10, 10), dtype=complex)
    rows = [line.split() for line in text.strip().splitlines()]
    assert len(rows) == 10 and all(len(r) == 10 for r in rows)
    for r, row in enumerate(rows):
        for c, tok in enumerate(row):
            if tok == "0":
                continue
            sign = -1.0 if tok[0] == "-" else 1.0
            body = tok[1:]
            unit = 1.0
            if body.startswith("i"):
                unit, body = 1j, body[1:]
            index[r, c] = int(body)
            mult[r, c] = sign * unit
    return index, mult


A_INDEX, A_MULT = _parse_table(_A_TABLE)


def build_A(c) -> np.ndarray:
    """The 10x10 Hermitian generator with x' = i A x."""
    a = np.concatenate([[0.0], as_coeffs(c).as_array()])
    return A_MULT * a[A_INDEX]


def row_identity_residual(c, k: int) -> float:
    """max|(H^T P_k + P_k H) - sum_j A[k, j] P_j| for 1-based row k."""
    if not 1 <= k <= 10:
        raise IndexError(f"row {k} outside 1..10")
    h = build_hamiltonian(c)
    pk = P_MATRICES[k - 1]
    lhs = h.T @ pk + pk @ h
    rhs = np.tensordot(build_A(c)[k - 1], P_MATRICES, axes=1)
    return float(np.max(np.abs(lhs - rhs)))


def verify_row_identity(c, k: int, tol: float = 1e-12) -> bool:
    return row_identity_residual(c, k) <= tol
