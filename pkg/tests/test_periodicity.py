import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from entdyn.closed_form import ExchangeParams, JosephsonParams
from entdyn.entanglement import named_state, random_state
from entdyn.pauli import exchange_coeffs, josephson_coeffs
from entdyn.periodicity import (
    FreqSource,
    FrequencySet,
    PeriodKind,
    classify,
    exchange_coupling_freqs,
    josephson_freqs,
    verify_period,
)


def test_josephson_freqs():
    assert josephson_freqs(JosephsonParams(1.0, 4 / 3)).freqs == pytest.approx((1.25, 0.75))
    assert josephson_freqs(JosephsonParams(1.0, 1.0)).freqs == pytest.approx((math.sqrt(2), 1.0))
    fs = josephson_freqs(JosephsonParams(0.0, 1.0))
    assert fs.freqs == (0.0, 0.0) and fs.source is FreqSource.JOSEPHSON


def test_classify_commensurate_pair():
    v = classify(FrequencySet((1.25, 0.75)), 64, 1e-9)
    assert v.kind is PeriodKind.PERIODIC
    assert v.period == pytest.approx(8 * math.pi, rel=1e-12)
    assert v.witness == [Fraction(1), Fraction(5, 3)]


def test_classify_irrational_ratio():
    v = classify(FrequencySet((math.sqrt(2), 1.0)), 64, 1e-9)
    assert v.kind is PeriodKind.APERIODIC and v.period is None


def test_classify_constant():
    assert classify(FrequencySet((0.0, 0.0))).kind is PeriodKind.CONSTANT
    assert classify([]).kind is PeriodKind.CONSTANT


def test_zero_frequency_ignored():
    v = classify([2.0, 0.0, -6.0, 4.0])
    assert v.kind is PeriodKind.PERIODIC
    assert v.period == pytest.approx(math.pi)


def test_exchange_coupling_freqs():
    v = classify(exchange_coupling_freqs(ExchangeParams(1, 2, 3)))
    assert v.kind is PeriodKind.PERIODIC and v.period == pytest.approx(2 * math.pi)


def test_pairwise_denominator_bound():
    # each ratio to the smallest is fine, but 64/63 between the others is too fine
    v = classify([1.0, 63 / 8, 8.0], max_denominator=8)
    assert v.kind is PeriodKind.APERIODIC


def test_classify_argument_validation():
    with pytest.raises(ValueError):
        classify([1.0], max_denominator=0)
    with pytest.raises(ValueError):
        classify([1.0], tol=0)


@given(f=st.floats(1e-3, 1e3))
def test_equal_pair_has_period_two_pi_over_f(f):
    v = classify([f, f])
    assert v.kind is PeriodKind.PERIODIC
    assert v.period == pytest.approx(2 * math.pi / f, rel=1e-12)


@given(p=st.integers(1, 40), q=st.integers(1, 40), base=st.floats(0.05, 20), s=st.floats(0.01, 100))
def test_scale_covariance(p, q, base, s):
    freqs = [p * base, q * base]
    v = classify(freqs)
    w = classify([s * f for f in freqs])
    assert v.kind is w.kind is PeriodKind.PERIODIC
    assert w.period == pytest.approx(v.period / s, rel=1e-9)
    for f in freqs:
        n = f * v.period / (2 * math.pi)
        assert abs(n - round(n)) <= 1e-7


def test_scale_covariance_aperiodic():
    for s in (0.1, 1.0, 37.0):
        assert classify([s * math.sqrt(2), s]).kind is PeriodKind.APERIODIC


def test_verify_period_examples():
    psi = named_state("basis00")
    assert verify_period(exchange_coeffs(2, 0, 0), psi, math.pi, 100, 1e-9)
    assert verify_period(exchange_coeffs(2, 0, 0), psi, math.pi / 2, 100, 1e-9)
    assert verify_period(josephson_coeffs(1.0, 4 / 3), psi, 8 * math.pi, 100, 1e-8)
    assert not verify_period(josephson_coeffs(1.0, 1.0), psi, 2 * math.pi, 100, 1e-4)
    with pytest.raises(ValueError):
        verify_period(exchange_coeffs(2, 0, 0), psi, 0.0)


@pytest.mark.parametrize("alpha", [0.75, 4 / 3, 5 / 12, 12 / 5])
def test_periodic_josephson_verdicts_verify(alpha, rng):
    params = JosephsonParams(1.0, 1.0 / alpha)
    v = classify(josephson_freqs(params))
    assert v.kind is PeriodKind.PERIODIC
    for psi in (named_state("basis00"), random_state(rng)):
        assert verify_period(josephson_coeffs(1.0, 1.0 / alpha), psi, v.period, 200, 1e-7)


def test_periodic_exchange_verdicts_verify(rng):
    for _ in range(10):
        scale = rng.uniform(0.2, 2)
        a = scale * rng.integers(-4, 5, 3)
        v = classify(exchange_coupling_freqs(ExchangeParams(*a)))
        if v.kind is PeriodKind.CONSTANT:
            continue
        assert v.kind is PeriodKind.PERIODIC
        assert verify_period(exchange_coeffs(*a), random_state(rng), v.period, 200, 1e-7)
