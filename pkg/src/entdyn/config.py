"""Experiment configuration: strict JSON parsing, canonical form and hashing.

Unknown keys are rejected everywhere so that a typo such as ``"E_l"`` fails
loudly instead of silently falling back to a default.
"""
from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass
from typing import Any, Optional

import numpy as np

from .closed_form import ExchangeParams, JosephsonParams
from .entanglement import NAMED_STATES, named_state, renormalize
from .pauli import HamiltonianCoeffs, coupling_form, CouplingForm, exchange_coeffs, josephson_coeffs
from .propagation import TimeGrid

STATE_TOL = 1e-6
PRESET_STATES = ("bell_phi_plus", "basis00", "basis01", "basis10", "basis11")

# Exchange coefficients of sx sx + sy sy and sx sx read off with the a_k/2 convention.
XY_EXCHANGE = (2.0, 2.0, 0.0)
ISING_EXCHANGE = (2.0, 0.0, 0.0)


class ConfigError(ValueError):
    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


def _number(value, field: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(field, f"expected a number, got {value!r}")
    if not math.isfinite(value):
        raise ConfigError(field, "must be finite")
    return float(value)


def _numbers(value, n: int, field: str) -> list[float]:
    if not isinstance(value, list) or len(value) != n:
        raise ConfigError(field, f"expected a list of {n} numbers")
    return [_number(v, f"{field}[{i}]") for i, v in enumerate(value)]


def _object(value, field: str, allowed: tuple[str, ...], required: tuple[str, ...] = ()) -> dict:
    if not isinstance(value, dict):
        raise ConfigError(field, "expected an object")
    for key in value:
        if key not in allowed:
            raise ConfigError(f"{field}.{key}", "unknown field")
    for key in required:
        if key not in value:
            raise ConfigError(f"{field}.{key}", "missing required field")
    return value


@dataclass(frozen=True)
class Hamiltonian:
    kind: str                       # coeffs | josephson | exchange | xy | ising
    coeffs: HamiltonianCoeffs
    josephson: Optional[JosephsonParams] = None
    exchange: Optional[ExchangeParams] = None

    def canonical(self) -> dict:
        if self.kind == "coeffs":
            return {"coeffs": list(self.coeffs.a)}
        if self.kind == "josephson":
            return {"josephson": {"E_J": self.josephson.E_J, "E_L": self.josephson.E_L}}
        if self.kind == "exchange":
            e = self.exchange
            return {"exchange": {"a7": e.a7, "a11": e.a11, "a15": e.a15}}
        return {self.kind: {}}


def _from_exchange(kind: str, a7: float, a11: float, a15: float) -> Hamiltonian:
    return Hamiltonian(kind, exchange_coeffs(a7, a11, a15), exchange=ExchangeParams(a7, a11, a15))


def recognise(coeffs: HamiltonianCoeffs) -> Hamiltonian:
    """Attach closed-form parameters to raw coefficients when they fit a known pattern."""
    a = coeffs.as_array()
    local, coupling = a[:6], a[6:]
    if not local.any() and coupling_form(coeffs) is not CouplingForm.GENERAL_COUPLING:
        return Hamiltonian("coeffs", coeffs, exchange=ExchangeParams(coeffs[7], coeffs[11], coeffs[15]))
    others = np.delete(a, [0, 3, 10])
    if not others.any() and coeffs[1] == coeffs[4] != 0.0 and coeffs[11] != 0.0:
        e_j = -coeffs[1]
        return Hamiltonian("coeffs", coeffs, josephson=JosephsonParams(e_j, 2.0 * e_j**2 / coeffs[11]))
    return Hamiltonian("coeffs", coeffs)


def parse_hamiltonian(value) -> Hamiltonian:
    field = "hamiltonian"
    _object(value, field, ("coeffs", "josephson", "exchange", "xy", "ising"))
    if len(value) != 1:
        raise ConfigError(field, "exactly one of coeffs, josephson, exchange, xy, ising is required")
    (kind, body), = value.items()
    sub = f"{field}.{kind}"
    if kind == "coeffs":
        return recognise(HamiltonianCoeffs(tuple(_numbers(body, 15, sub))))
    if kind == "josephson":
        _object(body, sub, ("E_J", "E_L"), ("E_J", "E_L"))
        e_j = _number(body["E_J"], f"{sub}.E_J")
        e_l = _number(body["E_L"], f"{sub}.E_L")
        if e_l == 0.0:
            raise ConfigError(f"{sub}.E_L", "must be nonzero")
        return Hamiltonian(kind, josephson_coeffs(e_j, e_l), josephson=JosephsonParams(e_j, e_l))
    if kind == "exchange":
        _object(body, sub, ("a7", "a11", "a15"), ("a7", "a11", "a15"))
        return _from_exchange(kind, *(_number(body[k], f"{sub}.{k}") for k in ("a7", "a11", "a15")))
    if body not in (None, {}, True):
        raise ConfigError(sub, "preset takes no parameters")
    return _from_exchange(kind, *(XY_EXCHANGE if kind == "xy" else ISING_EXCHANGE))


def parse_state(value) -> tuple[np.ndarray, dict]:
    field = "initial_state"
    if isinstance(value, str):
        value = {"preset": value}
    _object(value, field, ("preset", "re", "im"))
    if "preset" in value:
        if len(value) != 1:
            raise ConfigError(field, "use either preset or re/im, not both")
        name = value["preset"]
        if name not in PRESET_STATES:
            raise ConfigError(f"{field}.preset", f"unknown preset {name!r}; choose from {', '.join(PRESET_STATES)}")
        return named_state(name), {"preset": name}
    _object(value, field, ("re", "im"), ("re", "im"))
    re = _numbers(value["re"], 4, f"{field}.re")
    im = _numbers(value["im"], 4, f"{field}.im")
    psi = np.array(re) + 1j * np.array(im)
    norm = float(np.linalg.norm(psi))
    if abs(norm - 1.0) > STATE_TOL:
        raise ConfigError(field, f"state norm {norm:.9g} is not 1 within {STATE_TOL:g}")
    return renormalize(psi), {"re": re, "im": im}


def parse_grid(value) -> TimeGrid:
    field = "grid"
    _object(value, field, ("t0", "t1", "steps"), ("t1", "steps"))
    t0 = _number(value.get("t0", 0.0), f"{field}.t0")
    t1 = _number(value["t1"], f"{field}.t1")
    steps = value["steps"]
    if isinstance(steps, bool) or not isinstance(steps, int) or steps < 1:
        raise ConfigError(f"{field}.steps", "expected a positive integer")
    if not t1 > t0:
        raise ConfigError(f"{field}.t1", "must be greater than t0")
    return TimeGrid(t0, t1, steps)


def parse_outputs(value) -> dict:
    field = "outputs"
    if value is None:
        value = {}
    _object(value, field, ("concurrence", "x_components"))
    out = {"concurrence": True, "x_components": False}
    for key, v in value.items():
        if not isinstance(v, bool):
            raise ConfigError(f"{field}.{key}", "expected true or false")
        out[key] = v
    return out


@dataclass(frozen=True)
class Experiment:
    hamiltonian: Hamiltonian
    psi0: np.ndarray
    grid: TimeGrid
    outputs: dict
    state_spec: dict

    def canonical(self) -> dict:
        return {
            "hamiltonian": self.hamiltonian.canonical(),
            "initial_state": self.state_spec,
            "grid": {"t0": self.grid.t0, "t1": self.grid.t1, "steps": self.grid.steps},
            "outputs": dict(self.outputs),
        }

    def dumps(self) -> str:
        return json.dumps(self.canonical(), sort_keys=True, indent=2) + "\n"

    def sha256(self) -> str:
        blob = json.dumps(self.canonical(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()


def parse_config(data: Any) -> Experiment:
    _object(data, "config", ("hamiltonian", "initial_state", "grid", "outputs"),
            ("hamiltonian", "initial_state", "grid"))
    psi0, state_spec = parse_state(data["initial_state"])
    return Experiment(
        hamiltonian=parse_hamiltonian(data["hamiltonian"]),
        psi0=psi0,
        grid=parse_grid(data["grid"]),
        outputs=parse_outputs(data.get("outputs")),
        state_spec=state_spec,
    )


def load_config(path) -> Experiment:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except FileNotFoundError:
        raise ConfigError("config", f"file not found: {path}") from None
    except json.JSONDecodeError as exc:
        raise ConfigError("config", f"malformed JSON: {exc}") from None
    return parse_config(data)
