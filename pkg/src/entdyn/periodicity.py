"""Commensurability of frequency sets and empirical period checks.

Floating-point frequencies can never prove a ratio irrational, so an
``APERIODIC`` verdict only means "no rational p/q with q <= max_denominator
within tol".
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Optional, Sequence

import numpy as np

from .closed_form import ExchangeParams, JosephsonParams
from .errors import DegenerateScale
from .propagation import trajectory_oracle


class FreqSource(enum.Enum):
    JOSEPHSON = "Josephson"
    EXCHANGE = "Exchange"
    SPECTRUM = "Spectrum"


class PeriodKind(enum.Enum):
    PERIODIC = "Periodic"
    APERIODIC = "Aperiodic"
    CONSTANT = "Constant"


@dataclass(frozen=True)
class FrequencySet:
    freqs: tuple[float, ...]
    source: FreqSource = FreqSource.SPECTRUM

    def __post_init__(self):
        object.__setattr__(self, "freqs", tuple(float(f) for f in self.freqs))


@dataclass(frozen=True)
class PeriodicityVerdict:
    kind: PeriodKind
    period: Optional[float] = None
    witness: list[Fraction] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "period": self.period,
            "witness": [f"{w.numerator}/{w.denominator}" for w in self.witness],
        }


def josephson_freqs(params: JosephsonParams) -> FrequencySet:
    """The two components sqrt(1 + alpha^2) E_J and alpha E_J.

    These are the published values.  Under the a_k/2 convention the
    concurrence actually oscillates at twice these frequencies; the ratio,
    and hence the verdict, is unchanged, and the period derived from them
    is a (non-fundamental) period of the true evolution.
    """
    if params.E_L == 0:
        raise DegenerateScale("E_L must be nonzero")
    a = params.alpha
    return FrequencySet((math.sqrt(1.0 + a * a) * params.E_J, a * params.E_J),
                        FreqSource.JOSEPHSON)


def exchange_coupling_freqs(params: ExchangeParams) -> FrequencySet:
    """a7, a11, a15: every entry of r(t), s(t) is a product of their sines/cosines."""
    return FrequencySet((params.a7, params.a11, params.a15), FreqSource.EXCHANGE)


def _approx(ratio: float, max_denominator: int, tol: float) -> tuple[Fraction, bool]:
    frac = Fraction(ratio).limit_denominator(max_denominator)
    return frac, abs(ratio - float(frac)) <= tol


def classify(fs: FrequencySet | Sequence[float], max_denominator: int = 64,
             tol: float = 1e-9) -> PeriodicityVerdict:
    """Decide whether a superposition of the given frequencies is periodic."""
    if max_denominator < 1 or tol <= 0:
        raise ValueError("need max_denominator >= 1 and tol > 0")
    freqs = fs.freqs if isinstance(fs, FrequencySet) else tuple(float(f) for f in fs)
    nonzero = sorted(abs(f) for f in freqs if abs(f) > tol)
    if not nonzero:
        return PeriodicityVerdict(PeriodKind.CONSTANT)

    ref = nonzero[0]
    witness = []
    for f in nonzero:
        frac, ok = _approx(f / ref, max_denominator, tol)
        witness.append(frac)
        if not ok:
            return PeriodicityVerdict(PeriodKind.APERIODIC, None, witness)
    for i, fi in enumerate(nonzero):
        for fj in nonzero[i + 1:]:
            if not _approx(fj / fi, max_denominator, tol)[1]:
                return PeriodicityVerdict(PeriodKind.APERIODIC, None, witness)

    # f_i = (n_i / L) ref on a common lattice; the fundamental frequency is
    # gcd(n_i) ref / L.
    lcm = reduce(math.lcm, (w.denominator for w in witness))
    numerators = [w.numerator * (lcm // w.denominator) for w in witness]
    g = ref * reduce(math.gcd, numerators) / lcm
    return PeriodicityVerdict(PeriodKind.PERIODIC, 2.0 * math.pi / g, witness)


def verify_period(c, psi0, period: float, samples: int = 100, tol: float = 1e-9) -> bool:
    """Check C(t + period) == C(t) on ``samples`` points spanning one period."""
    if not period > 0:
        raise ValueError("period must be positive")
    ts = np.linspace(0.0, period, samples, endpoint=False)
    base = trajectory_oracle(c, psi0, ts).concurrence
    shifted = trajectory_oracle(c, psi0, ts + period).concurrence
    return bool(np.max(np.abs(shifted - base)) <= tol)
