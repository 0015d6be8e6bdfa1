"""Seeded invariant ensembles behind ``entdyn verify``."""
from __future__ import annotations

import numpy as np

from .closed_form import ExchangeParams, JosephsonParams, exchange_trajectory, josephson_trajectory
from .entanglement import build_A, named_state, random_state, row_identity_residual
from .pauli import exchange_coeffs, josephson_coeffs, random_coeffs
from .propagation import TimeGrid, max_deviation, trajectory_oracle, trajectory_super

SUITES = ("rows", "norm", "oracle", "closedform")


def _rows(rng):
    worst_row = worst_herm = 0.0
    for _ in range(200):
        c = random_coeffs(rng)
        a = build_A(c)
        worst_herm = max(worst_herm, float(np.max(np.abs(a - a.conj().T))))
        worst_row = max(worst_row, max(row_identity_residual(c, k) for k in range(1, 11)))
    return [
        {"check": "row_identity", "cases": 200, "max_error": worst_row, "tol": 1e-12},
        {"check": "hermitian", "cases": 200, "max_error": worst_herm, "tol": 1e-13},
    ]


def _norm(rng):
    ts = np.linspace(0.0, 50.0, 100)
    worst = 0.0
    for _ in range(100):
        traj = trajectory_super(random_coeffs(rng), random_state(rng), ts, keep_x=True)
        worst = max(worst, float(np.max(np.abs(np.linalg.norm(traj.x_samples, axis=1) - 2.0))))
    return [{"check": "supersphere_radius", "cases": 100, "max_error": worst, "tol": 1e-9}]


def _oracle(rng):
    grid = TimeGrid(0.0, 10.0, 200)
    worst = 0.0
    for _ in range(50):
        c, psi = random_coeffs(rng), random_state(rng)
        worst = max(worst, max_deviation(trajectory_super(c, psi, grid), trajectory_oracle(c, psi, grid)))
    return [{"check": "super_vs_oracle", "cases": 50, "max_error": worst, "tol": 1e-9}]


def _closedform(rng):
    grid = TimeGrid(0.0, 20.0, 199)
    states = [named_state("basis00"), named_state("bell_phi_plus"), random_state(rng)]
    worst_j = 0.0
    for alpha in (0.5, 0.75, 1.0, 2.0):
        params = JosephsonParams(1.0, 1.0 / alpha)
        for psi in states:
            dev = max_deviation(josephson_trajectory(params, psi, grid),
                                trajectory_oracle(josephson_coeffs(1.0, 1.0 / alpha), psi, grid))
            worst_j = max(worst_j, dev)
    grid = TimeGrid(0.0, 10.0, 199)
    worst_x = 0.0
    for _ in range(20):
        a = rng.uniform(-2.0, 2.0, 3)
        psi = random_state(rng)
        closed = exchange_trajectory(ExchangeParams(*a), psi, grid)
        sup = trajectory_super(exchange_coeffs(*a), psi, grid)
        worst_x = max(worst_x, float(np.max(np.abs(closed.ent - sup.ent))))
    return [
        {"check": "josephson_vs_oracle", "cases": 12, "max_error": worst_j, "tol": 1e-8},
        {"check": "exchange_vs_super", "cases": 20, "max_error": worst_x, "tol": 1e-9},
    ]


_RUNNERS = {"rows": _rows, "norm": _norm, "oracle": _oracle, "closedform": _closedform}


def run_suite(name: str, seed: int = 0) -> dict:
    if name not in _RUNNERS:
        raise ValueError(f"unknown suite {name!r}")
    checks = _RUNNERS[name](np.random.default_rng(seed))
    for check in checks:
        check["passed"] = check["max_error"] <= check["tol"]
    return {
        "suite": name,
        "seed": seed,
        "checks": checks,
        "passed": all(c["passed"] for c in checks),
    }
