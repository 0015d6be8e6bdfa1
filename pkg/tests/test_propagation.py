import numpy as np
import pytest

from entdyn.entanglement import concurrence, named_state, random_state, x_from_state
from entdyn.errors import GridMismatch, NotNormalized
from entdyn.pauli import SX, HamiltonianCoeffs, exchange_coeffs, josephson_coeffs, random_coeffs
from entdyn.propagation import (
    Source,
    TimeGrid,
    evolve_state,
    evolve_x,
    max_deviation,
    trajectory_oracle,
    trajectory_super,
)
from oracles import rk4_linear, taylor_expm

ISING = HamiltonianCoeffs.from_terms(a7=2)


def test_time_grid():
    g = TimeGrid(0.0, 1.0, 4)
    np.testing.assert_allclose(g.times(), [0, 0.25, 0.5, 0.75, 1])
    with pytest.raises(ValueError):
        TimeGrid(0.0, 1.0, 0)
    with pytest.raises(ValueError):
        TimeGrid(1.0, 1.0, 3)


def test_zero_hamiltonian_is_static(rng):
    psi = random_state(rng)
    x0 = x_from_state(psi)
    for t in (0.0, 1.3, -7.0):
        np.testing.assert_allclose(evolve_state(HamiltonianCoeffs.zero(), psi, t), psi, atol=1e-15)
        np.testing.assert_allclose(evolve_x(HamiltonianCoeffs.zero(), x0, t), x0, atol=1e-15)


@pytest.mark.parametrize("t", [0.0, 0.4, 1.0, 2.2, 3.0])
def test_ising_state_evolution(t):
    psi = evolve_state(ISING, named_state("basis00"), t)
    series = taylor_expm(1j * t * np.kron(SX, SX)) @ named_state("basis00")
    np.testing.assert_allclose(psi, series, atol=1e-12)
    np.testing.assert_allclose(psi, [np.cos(t), 0, 0, 1j * np.sin(t)], atol=1e-12)


def test_ising_supervector():
    x0 = x_from_state(named_state("basis00"))
    for t in np.linspace(0, 5, 11):
        x = evolve_x(ISING, x0, t)
        assert abs(x[0] - (-1j * np.sin(2 * t))) <= 1e-12
        direct = x_from_state(evolve_state(ISING, named_state("basis00"), t))
        assert np.max(np.abs(x - direct)) <= 1e-12


def test_norms_conserved(rng):
    for _ in range(20):
        c, psi = random_coeffs(rng), random_state(rng)
        x0 = x_from_state(psi)
        for t in rng.uniform(-20, 20, 5):
            assert abs(np.linalg.norm(evolve_state(c, psi, t)) - 1) <= 1e-10
            assert abs(np.linalg.norm(evolve_x(c, x0, t)) - 2) <= 1e-9


def test_evolve_state_rejects_unnormalized():
    with pytest.raises(NotNormalized):
        evolve_state(ISING, [1, 1, 0, 0], 1.0)


def test_group_property_and_time_reversal(rng):
    for _ in range(20):
        c, psi = random_coeffs(rng), random_state(rng)
        x0 = x_from_state(psi)
        s, t = rng.uniform(-10, 10, 2)
        np.testing.assert_allclose(evolve_x(c, evolve_x(c, x0, s), t), evolve_x(c, x0, s + t), atol=1e-9)
        back = evolve_state(c, evolve_state(c, psi, t), -t)
        np.testing.assert_allclose(back, psi, atol=1e-10)


def test_sign_convention_is_plus_i(rng):
    # psi' = +i H psi, checked by a centred finite difference
    from entdyn.pauli import build_hamiltonian

    c, psi = random_coeffs(rng), random_state(rng)
    h = 1e-5
    deriv = (evolve_state(c, psi, h) - evolve_state(c, psi, -h)) / (2 * h)
    np.testing.assert_allclose(deriv, 1j * build_hamiltonian(c) @ psi, atol=1e-8)


def test_trajectories_for_zero_hamiltonian(rng):
    psi = random_state(rng)
    grid = TimeGrid(0, 5, 20)
    for traj in (trajectory_super(HamiltonianCoeffs.zero(), psi, grid),
                 trajectory_oracle(HamiltonianCoeffs.zero(), psi, grid)):
        np.testing.assert_allclose(traj.concurrence, concurrence(psi), atol=1e-14)


def test_ising_oracle_trajectory():
    grid = TimeGrid(0, 10, 300)
    traj = trajectory_oracle(ISING, named_state("basis00"), grid)
    assert traj.source is Source.SCHRODINGER_ORACLE
    np.testing.assert_allclose(traj.concurrence, np.abs(np.sin(2 * grid.times())), atol=1e-10)


def test_local_only_gives_constant_concurrence(rng):
    for _ in range(10):
        c = HamiltonianCoeffs(tuple(rng.uniform(-2, 2, 6)) + (0.0,) * 9)
        psi = random_state(rng)
        traj = trajectory_oracle(c, psi, TimeGrid(0, 10, 100))
        assert np.ptp(traj.concurrence) <= 1e-10
        traj = trajectory_super(c, psi, TimeGrid(0, 10, 100))
        assert np.ptp(traj.concurrence) <= 1e-10


def test_josephson_super_matches_oracle():
    grid = TimeGrid(0, 20, 400)
    c = josephson_coeffs(1.0, 1.0)
    psi = named_state("basis00")
    assert max_deviation(trajectory_super(c, psi, grid), trajectory_oracle(c, psi, grid)) <= 1e-9


def test_bell_exchange_bounded(rng):
    traj = trajectory_super(exchange_coeffs(*rng.uniform(-2, 2, 3)), named_state("bell_phi_plus"),
                            TimeGrid(0, 10, 200))
    assert np.all(traj.concurrence <= 1 + 1e-9)


def test_super_vs_oracle_random(rng):
    grid = TimeGrid(0, 10, 200)
    for _ in range(10):
        c, psi = random_coeffs(rng), random_state(rng)
        sup = trajectory_super(c, psi, grid, keep_x=True)
        orc = trajectory_oracle(c, psi, grid, keep_x=True)
        assert sup.source is Source.SUPER_ODE
        assert max_deviation(sup, orc) <= 1e-9
        assert np.max(np.abs(sup.x_samples - orc.x_samples)) <= 1e-9
        assert np.max(np.abs(np.linalg.norm(sup.x_samples, axis=1) - 2)) <= 1e-9


def test_rk4_cross_check(rng):
    from entdyn.entanglement import build_A

    ts = np.linspace(0, 10, 201)
    c, psi = random_coeffs(rng), random_state(rng)
    xs = rk4_linear(build_A(c), x_from_state(psi), ts)
    assert np.max(np.abs(np.abs(xs[:, 0]) - trajectory_oracle(c, psi, ts).concurrence)) <= 1e-7


def test_grid_origin_is_t0(rng):
    c, psi = random_coeffs(rng), random_state(rng)
    shifted = trajectory_super(c, psi, TimeGrid(5.0, 15.0, 50))
    plain = trajectory_super(c, psi, TimeGrid(0.0, 10.0, 50))
    np.testing.assert_allclose(shifted.times, plain.times + 5.0)
    np.testing.assert_allclose(shifted.concurrence, plain.concurrence, atol=1e-12)


def test_max_deviation(rng):
    c, psi = random_coeffs(rng), random_state(rng)
    a = trajectory_super(c, psi, TimeGrid(0, 1, 10))
    assert max_deviation(a, a) == 0
    with pytest.raises(GridMismatch):
        max_deviation(a, trajectory_super(c, psi, TimeGrid(0, 1, 11)))
    with pytest.raises(GridMismatch):
        max_deviation(a, trajectory_super(c, psi, TimeGrid(0, 1.1, 10)))
