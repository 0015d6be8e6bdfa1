"""Two-qubit Pauli algebra and the 15-coefficient Hamiltonian.

Basis ordering is |00>, |01>, |10>, |11> with qubit 1 as the left tensor
factor, so ``sigma_a^1 sigma_b^2 == np.kron(sigma_a, sigma_b)``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import NotUnitary

I2 = np.eye(2, dtype=complex)
SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
SZ = np.array([[1, 0], [0, -1]], dtype=complex)

PAULI = {"0": I2, "x": SX, "y": SY, "z": SZ}

for _m in (I2, SX, SY, SZ):
    _m.setflags(write=False)


def pauli_table() -> dict[tuple[str, str], np.ndarray]:
    """All sixteen products ``sigma_a^1 sigma_b^2`` keyed by ``(a, b)``."""
    return {(a, b): np.kron(PAULI[a], PAULI[b]) for a in PAULI for b in PAULI}


# Basis matrices B_1..B_15 in coefficient order: local terms on qubit 1,
# local terms on qubit 2, then the nine couplings xx, xy, ..., zz.
TERM_LABELS: tuple[tuple[str, str], ...] = (
    ("x", "0"), ("y", "0"), ("z", "0"),
    ("0", "x"), ("0", "y"), ("0", "z"),
) + tuple((a, b) for a in "xyz" for b in "xyz")

BASIS = np.array([np.kron(PAULI[a], PAULI[b]) for a, b in TERM_LABELS])
BASIS.setflags(write=False)


@dataclass(frozen=True)
class HamiltonianCoeffs:
    """The real coefficients a1..a15 of a two-qubit Hamiltonian.

    Indexing with ``c[k]`` is 1-based to mirror the a_k naming.
    """

    a: tuple[float, ...]

    def __post_init__(self):
        a = tuple(float(v) for v in self.a)
        if len(a) != 15:
            raise ValueError(f"expected 15 coefficients, got {len(a)}")
        if not all(np.isfinite(a)):
            raise ValueError("coefficients must be finite")
        object.__setattr__(self, "a", a)

    @classmethod
    def from_terms(cls, **terms: float) -> "HamiltonianCoeffs":
        """Build from keyword coefficients, e.g. ``from_terms(a7=1, a15=3)``."""
        a = [0.0] * 15
        for name, value in terms.items():
            if not (name.startswith("a") and name[1:].isdigit() and 1 <= int(name[1:]) <= 15):
                raise ValueError(f"unknown coefficient name {name!r}")
            a[int(name[1:]) - 1] = value
        return cls(tuple(a))

    @classmethod
    def zero(cls) -> "HamiltonianCoeffs":
        return cls((0.0,) * 15)

    def __getitem__(self, k: int) -> float:
        if not 1 <= k <= 15:
            raise IndexError(f"coefficient index {k} outside 1..15")
        return self.a[k - 1]

    def __add__(self, other: "HamiltonianCoeffs") -> "HamiltonianCoeffs":
        return HamiltonianCoeffs(tuple(x + y for x, y in zip(self.a, other.a)))

    def __mul__(self, s: float) -> "HamiltonianCoeffs":
        return HamiltonianCoeffs(tuple(s * x for x in self.a))

    __rmul__ = __mul__

    def as_array(self) -> np.ndarray:
        return np.array(self.a)


def as_coeffs(c) -> HamiltonianCoeffs:
    if isinstance(c, HamiltonianCoeffs):
        return c
    return HamiltonianCoeffs(tuple(np.asarray(c, dtype=float).ravel()))


def josephson_coeffs(e_j: float, e_l: float) -> HamiltonianCoeffs:
    """H = -(E_J/2)(sx^1 + sx^2) + (E_J^2/E_L) sy^1 sy^2."""
    return HamiltonianCoeffs.from_terms(a1=-e_j, a4=-e_j, a11=2.0 * e_j**2 / e_l)


def exchange_coeffs(a7: float, a11: float, a15: float) -> HamiltonianCoeffs:
    return HamiltonianCoeffs.from_terms(a7=a7, a11=a11, a15=a15)


def random_coeffs(rng: np.random.Generator, scale: float = 2.0) -> HamiltonianCoeffs:
    """Coefficients drawn uniformly from [-scale, scale]."""
    return HamiltonianCoeffs(tuple(rng.uniform(-scale, scale, 15)))


def build_hamiltonian(c) -> np.ndarray:
    """H = sum_k (a_k / 2) B_k as a 4x4 complex matrix."""
    a = as_coeffs(c).as_array()
    return np.tensordot(a / 2.0, BASIS, axes=1)


class CouplingForm(enum.Enum):
    LOCAL_ONLY = "LocalOnly"
    DIAGONAL_COUPLING = "DiagonalCoupling"
    GENERAL_COUPLING = "GeneralCoupling"


_DIAGONAL = (7, 11, 15)
_CROSS = (8, 9, 10, 12, 13, 14)


def coupling_form(c) -> CouplingForm:
    """Classify the two-qubit terms of ``c``.

    Only the coupling part is inspected; local terms may be present in
    every class.
    """
    c = as_coeffs(c)
    if any(c[k] != 0.0 for k in _CROSS):
        return CouplingForm.GENERAL_COUPLING
    if any(c[k] != 0.0 for k in _DIAGONAL):
        return CouplingForm.DIAGONAL_COUPLING
    return CouplingForm.LOCAL_ONLY


def is_unitary(u, tol: float = 1e-10) -> bool:
    u = np.asarray(u, dtype=complex)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        return False
    return float(np.max(np.abs(u.conj().T @ u - np.eye(u.shape[0])))) <= tol


def apply_local_unitary(psi, u1, u2) -> np.ndarray:
    """Return ``(u1 (x) u2) psi``."""
    u1 = np.asarray(u1, dtype=complex)
    u2 = np.asarray(u2, dtype=complex)
    for name, u in (("u1", u1), ("u2", u2)):
        if u.shape != (2, 2) or not is_unitary(u):
            raise NotUnitary(f"{name} is not a 2x2 unitary")
    return np.kron(u1, u2) @ np.asarray(psi, dtype=complex)


def random_unitary(rng: np.random.Generator, n: int = 2) -> np.ndarray:
    """Unitary from Gram-Schmidt (QR) on a complex Gaussian matrix."""
    z = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))

