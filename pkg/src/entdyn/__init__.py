"""Closed-system two-qubit entanglement dynamics.

The concurrence of a pure two-qubit state is the modulus of x1, the first
component of a 10-dimensional complex vector that evolves linearly,
x' = i A x, with A Hermitian and fixed by the Hamiltonian.
"""

__version__ = "0.1.0"

from .closed_form import (
    ExchangeParams,
    JosephsonParams,
    exchange_ent,
    exchange_frequencies,
    ising_concurrence,
    josephson_ent,
    xy_concurrence_sq,
)
from .entanglement import (
    build_A,
    concurrence,
    p_matrices,
    pq_from_state,
    verify_row_identity,
    x_from_state,
)
from .errors import (
    ConvergenceFailure,
    DegenerateScale,
    GridMismatch,
    NotHermitian,
    NotNormalized,
    NotUnitary,
)
from .linalg import is_hermitian, spectral_decompose, unitary_propagator
from .pauli import (
    CouplingForm,
    HamiltonianCoeffs,
    apply_local_unitary,
    build_hamiltonian,
    coupling_form,
)
from .periodicity import FrequencySet, PeriodKind, classify, josephson_freqs, verify_period
from .propagation import (
    ConcurrenceTrajectory,
    Source,
    TimeGrid,
    evolve_state,
    evolve_x,
    max_deviation,
    trajectory_oracle,
    trajectory_super,
)
