"""Tests for the scalar special-function layer.

Frozen reference values were produced with mpmath at 30 significant digits
and are quoted to 20 digits.
"""

from __future__ import annotations

import math

import numpy as np
import pytest

import disknorms.specfun as sf
from disknorms.errors import (
    ConvergenceError,
    DivergenceError,
    DomainError,
    PrecisionError,
)

# mpmath references, 30 dps
CATALAN = 0.91596559417721901505
J0_ZERO = 2.4048255576957727686
ZETA_15 = 2.6123753486854883433
ZETA_3 = 1.2020569031595942854
F21_QUARTER = 1.0731820071493643751  # 2F1(1/2,1/2;1;1/4)
F21_NEG_UPPER = 0.55107607396526271169  # 2F1(-1/2,3/2;1;0.49)
F32_INTERIOR = 1.2001300859472029691  # 3F2(1/2,1/2,3/2;1,5/2;0.81)
F32_UNITY_Q32 = 2.7583968316881053933  # 3F2(1+q/2,q/2,q/2;1,2+q/2;1), q=3/2
F32_UNITY_Q43 = 1.9965774666745873181  # same, q=4/3
F21_UNITY_SLOW = 3.642429629126853664  # 2F1(0.45,0.45;1;1), decay exponent 1.1


def test_ln_gamma_matches_factorials():
    for n in range(1, 12):
        assert math.isclose(sf.ln_gamma(n + 1), math.log(math.factorial(n)),
                            rel_tol=1e-14, abs_tol=1e-14)
    assert sf.ln_gamma(0.5) == pytest.approx(0.5 * math.log(math.pi), abs=1e-15)
    with pytest.raises(DomainError):
        sf.ln_gamma(0.0)
    with pytest.raises(DomainError):
        sf.ln_gamma(-2.5)


def test_pochhammer_log_ratio_recursion():
    # exp(log (q)_{n+1} - log (q)_n) must equal q + n
    rng = np.random.default_rng(42)
    for _ in range(40):
        q = float(rng.uniform(0.05, 8.0))
        n = int(rng.integers(0, 200))
        lhs = math.exp(sf.pochhammer_log(q, n + 1) - sf.pochhammer_log(q, n))
        assert abs(lhs - (q + n)) <= 1e-12 * (q + n)
    assert sf.pochhammer_log(3.7, 0) == 0.0
    with pytest.raises(DomainError):
        sf.pochhammer_log(1.0, -1)


def test_gamma_sign_reflection():
    # Gamma alternates sign between consecutive negative integers
    assert sf.gamma_sign(2.5) == 1.0
    assert sf.gamma_sign(-0.5) == -1.0  # Gamma(-1/2) = -2 sqrt(pi)
    assert sf.gamma_sign(-1.5) == 1.0  # Gamma(-3/2) = 4 sqrt(pi)/3
    assert sf.gamma_sign(-2.5) == -1.0
    with pytest.raises(DomainError):
        sf.gamma_sign(-3.0)


def test_spec_validation():
    with pytest.raises(DomainError):
        sf.HypergeometricSpec((0.5,), (-1.0,), 0.5)
    with pytest.raises(DomainError):
        sf.HypergeometricSpec((0.5,), (1.0,), 1.5)
    with pytest.raises(DomainError):
        sf.HypergeometricSpec((0.5,), (1.0,), -0.1)
    with pytest.raises(DomainError):
        sf.hyp_pfq(sf.HypergeometricSpec((0.5,), (1.0,), 0.5), 0.0)


def test_hyp_pfq_interior_values():
    r = sf.hyp_pfq(sf.HypergeometricSpec((0.5, 0.5), (1.0,), 0.25), 1e-13)
    assert abs(r.value - F21_QUARTER) <= max(r.tail_bound, 1e-13)
    r = sf.hyp_pfq(sf.HypergeometricSpec((-0.5, 1.5), (1.0,), 0.49), 1e-13)
    assert abs(r.value - F21_NEG_UPPER) <= max(r.tail_bound, 1e-13)
    r = sf.hyp_pfq(sf.HypergeometricSpec((0.5, 0.5, 1.5), (1.0, 2.5), 0.81), 1e-13)
    assert abs(r.value - F32_INTERIOR) <= max(r.tail_bound, 1e-13)


def test_hyp_pfq_zero_argument_and_terminating():
    r = sf.hyp_pfq(sf.HypergeometricSpec((0.7, 1.3), (2.0,), 0.0), 1e-12)
    assert r.value == 1.0 and r.tail_bound == 0.0
    # 2F1(-2,1;1;x) = (1-x)^2 terminates after three terms
    r = sf.hyp_pfq(sf.HypergeometricSpec((-2.0, 1.0), (1.0,), 0.3), 1e-12)
    assert r.terms_used == 3
    assert r.value == pytest.approx(0.49, abs=1e-14)


def test_hyp_pfq_unit_argument_accelerated():
    r = sf.hyp_pfq(sf.HypergeometricSpec((0.5, 0.5), (2.0,), 1.0), 1e-12)
    assert abs(r.value - 4.0 / math.pi) <= 1e-10
    assert abs(r.value - 4.0 / math.pi) <= r.tail_bound + 1e-13

    r = sf.hyp_pfq(sf.HypergeometricSpec((1.75, 0.75, 0.75), (1.0, 2.75), 1.0), 1e-10)
    assert abs(r.value - F32_UNITY_Q32) <= r.tail_bound + 1e-10

    q = 4.0 / 3.0
    r = sf.hyp_pfq(
        sf.HypergeometricSpec((1 + q / 2, q / 2, q / 2), (1.0, 2 + q / 2), 1.0), 1e-10
    )
    assert abs(r.value - F32_UNITY_Q43) <= r.tail_bound + 1e-10

    # slow case: terms decay like n^{-1.1}
    r = sf.hyp_pfq(sf.HypergeometricSpec((0.45, 0.45), (1.0,), 1.0), 1e-8)
    assert abs(r.value - F21_UNITY_SLOW) <= r.tail_bound + 1e-8 * F21_UNITY_SLOW


def test_hyp_pfq_divergence_detected():
    with pytest.raises(ConvergenceError):
        sf.hyp_pfq(sf.HypergeometricSpec((1.0, 1.0), (1.5,), 1.0), 1e-8)
    with pytest.raises(ConvergenceError):
        sf.hyp_pfq(sf.HypergeometricSpec((1.0, 1.0), (2.0,), 1.0), 1e-8)
    # 0F0 style mismatch: p > q + 1 never converges for x > 0
    with pytest.raises(ConvergenceError):
        sf.hyp_pfq(sf.HypergeometricSpec((1.0, 1.0, 1.0), (1.5,), 0.5), 1e-8)


def test_hyp_pfq_precision_error_carries_best(monkeypatch):
    monkeypatch.setattr(sf, "TERM_CAP", 300)
    with pytest.raises(PrecisionError) as exc:
        sf.hyp_pfq(sf.HypergeometricSpec((0.45, 0.45), (1.0,), 1.0), 1e-13)
    best = exc.value.best
    assert best is not None
    assert abs(best.value - F21_UNITY_SLOW) <= 10.0 * best.tail_bound


def test_gauss_2f1_at_1_gamma_formula():
    assert sf.gauss_2f1_at_1(0.5, 0.5, 2.0) == pytest.approx(4.0 / math.pi, abs=1e-14)
    assert sf.gauss_2f1_at_1(0.0, 3.0, 1.0) == 1.0
    got = sf.gauss_2f1_at_1(0.45, 0.45, 1.0)
    assert got == pytest.approx(F21_UNITY_SLOW, rel=1e-13)
    with pytest.raises(DivergenceError):
        sf.gauss_2f1_at_1(1.0, 1.0, 2.0)
    with pytest.raises(DivergenceError):
        sf.gauss_2f1_at_1(0.75, 0.75, 1.0)


def test_gauss_vs_series_cross_check():
    # both routes to 2F1(a,b;c;1) when the margin c-a-b is comfortable
    rng = np.random.default_rng(42)
    for _ in range(10):
        a = float(rng.uniform(0.1, 0.9))
        b = float(rng.uniform(0.1, 0.9))
        c = a + b + float(rng.uniform(0.3, 1.5))
        series = sf.hyp_pfq(sf.HypergeometricSpec((a, b), (c,), 1.0), 1e-11)
        closed = sf.gauss_2f1_at_1(a, b, c)
        assert abs(series.value - closed) <= series.tail_bound + 1e-10


def test_bessel_j0_zero():
    z = sf.bessel_j0_smallest_zero()
    assert abs(z - 2.4048256) <= 5e-7
    assert abs(z - J0_ZERO) <= 1e-12
    assert abs(sf._bessel_j0(z)) <= 1e-14
    # it is the first zero: J0 stays positive on [0, z)
    for x in np.linspace(0.0, z - 1e-3, 50):
        assert sf._bessel_j0(float(x)) > 0.0


def test_catalan_constant():
    r = sf.catalan_constant(1e-12)
    assert abs(r.value - 0.915966) <= 5e-7
    assert abs(r.value - CATALAN) <= r.tail_bound + 1e-15
    assert r.tail_bound <= 1e-12

    # loose tolerance takes the raw alternating route
    r = sf.catalan_constant(0.2)
    assert r.value == 1.0 and r.terms_used == 1
    assert abs(r.value - CATALAN) <= r.tail_bound


def test_catalan_partial_sums_bracket():
    # alternating partial sums enclose the accelerated value
    value = sf.catalan_constant(1e-12).value
    s = 0.0
    for k in range(12):
        prev = s
        s += (-1.0) ** k / (2 * k + 1.0) ** 2
        if k >= 1:
            assert min(prev, s) <= value <= max(prev, s)


def test_riemann_zeta():
    assert abs(sf.riemann_zeta(1.5) - ZETA_15) <= 1e-12
    assert abs(sf.riemann_zeta(2.0) - math.pi**2 / 6.0) <= 1e-13
    assert abs(sf.riemann_zeta(3.0) - ZETA_3) <= 1e-13
    with pytest.raises(DomainError):
        sf.riemann_zeta(1.0)
    with pytest.raises(DomainError):
        sf.riemann_zeta(0.5)


def test_gautschi_interval_sandwiches_gamma_ratio():
    for q in (1.0, 1.25, 1.5, 1.75, 2.0):
        for n in range(1, 1001):
            lo, hi = sf.gautschi_interval(q, n)
            ratio = math.exp(sf.ln_gamma(n + 0.5 * q) - sf.ln_gamma(n + 1.0))
            assert lo - 5e-13 <= ratio <= hi + 5e-13
    with pytest.raises(DomainError):
        sf.gautschi_interval(0.5, 3)
    with pytest.raises(DomainError):
        sf.gautschi_interval(2.5, 3)
    with pytest.raises(DomainError):
        sf.gautschi_interval(1.5, 0)
