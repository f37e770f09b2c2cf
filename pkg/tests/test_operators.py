"""Operator evaluation against exact monomial images.

Every kernel here maps w^a conj(w)^b to a closed-form image, derived by
expanding the kernel as a geometric series and using the monomial
orthogonality relation  integral of w^a conj(w)^b dA = delta_{ab} / (a+1).
Those images are the oracles; the module is tested against them rather than
against itself.
"""

import math

import numpy as np
import pytest

from disknorms.errors import ConfigurationError, DomainError, PrecisionError
from disknorms.operators import (
    Operator,
    adjoint_pairing_residual,
    apply,
    dbar_identity_residual,
)
from disknorms.quadrature import AnnulusExclude, DiskRule, Mobius


def poly_field(coeffs):
    """Field w -> sum of c * w^a * conj(w)^b for {(a, b): c} coefficients."""

    def f(w):
        w = np.asarray(w, dtype=complex)
        out = np.zeros_like(w)
        for (a, b), c in coeffs.items():
            out = out + c * w**a * np.conj(w) ** b
        return out

    return f


def cauchy_monomial(j, k, z):
    # geometric expansion of 1/(w - z) inside and outside |w| = |z|
    if j >= k + 1:
        return z ** (j - k - 1) * (1.0 - abs(z) ** (2 * k + 2)) / (k + 1)
    return -np.conj(z) ** (k + 1 - j) * abs(z) ** (2 * j) / (k + 1)


def bergman_monomial(a, b, z):
    if a >= b:
        return (a - b + 1) * z ** (a - b) / (a + 1)
    return 0.0 + 0.0j


def j0_monomial(a, b, z):
    if a >= b:
        return z ** (a - b + 1) / (a + 1)
    return 0.0 + 0.0j


def j0star_monomial(a, b, z):
    if a >= b + 1:
        return z ** (a - b - 1) / (a + 1)
    return 0.0 + 0.0j


Z_POINTS = [0.3 + 0.2j, -0.45 + 0.0j, 0.1 - 0.6j]


class TestValidation:
    def test_outside_disk_rejected(self):
        for op in Operator:
            with pytest.raises(DomainError):
                apply(op, lambda w: w, 1.0 + 0.0j)

    def test_bounded_ops_need_interior_margin(self):
        z = (1.0 - 1e-7) + 0.0j
        for op in (Operator.J0, Operator.J0_STAR, Operator.BERGMAN):
            with pytest.raises(DomainError):
                apply(op, lambda w: w, z)

    def test_singular_op_requires_strategy(self):
        with pytest.raises(ConfigurationError):
            apply(Operator.CAUCHY, lambda w: w, 0.2, DiskRule(64, 128))

    def test_mismatched_mobius_center(self):
        with pytest.raises(ConfigurationError):
            apply(Operator.CAUCHY, lambda w: w, 0.2, DiskRule(64, 128, Mobius(0.3)))

    def test_bounded_op_rejects_singular_rule(self):
        with pytest.raises(ConfigurationError):
            apply(Operator.J0, lambda w: w, 0.2, DiskRule(64, 128, Mobius(0.2)))

    def test_explicit_rule_must_cover_boundary_layer(self):
        # |z| = 0.95 needs ceil(64 / 0.05) = 1280 angular nodes
        with pytest.raises(ConfigurationError):
            apply(Operator.J0, lambda w: w, 0.95, DiskRule(64, 512))

    def test_default_rule_scales_near_boundary(self):
        result = apply(Operator.J0, lambda w: np.ones_like(w), 0.95)
        assert abs(result.value - 0.95) < 1e-8


class TestMonomialImages:
    def test_cauchy_monomials(self):
        for z in Z_POINTS:
            rule = DiskRule(64, 128, Mobius(z))
            for j in range(4):
                for k in range(4):
                    got = apply(Operator.CAUCHY, poly_field({(j, k): 1.0}), z, rule)
                    want = cauchy_monomial(j, k, z)
                    assert abs(got.value - want) < 1e-8, (j, k, z)

    def test_bounded_monomials(self):
        cases = [
            (Operator.BERGMAN, bergman_monomial),
            (Operator.J0, j0_monomial),
            (Operator.J0_STAR, j0star_monomial),
        ]
        rule = DiskRule(64, 128)
        for op, oracle in cases:
            for z in Z_POINTS:
                for a in range(5):
                    for b in range(5):
                        got = apply(op, poly_field({(a, b): 1.0}), z, rule)
                        assert abs(got.value - oracle(a, b, z)) < 1e-9, (op, a, b, z)

    def test_unit_input_images(self):
        z = 0.35 - 0.4j
        assert abs(apply(Operator.J0, lambda w: np.ones_like(w), z).value - z) < 1e-10
        assert abs(apply(Operator.CAUCHY, lambda w: np.ones_like(w), z).value + np.conj(z)) < 1e-10
        cd = apply(Operator.C_DELTA, lambda w: np.ones_like(w), z)
        assert abs(cd.value - np.conj(z)) < 1e-10

    def test_j0star_of_w_is_half_everywhere(self):
        for z in Z_POINTS:
            got = apply(Operator.J0_STAR, lambda w: w, z)
            assert abs(got.value - 0.5) < 1e-10

    def test_bergman_reproduces_holomorphic_monomials(self):
        z = 0.35 - 0.4j
        rule = DiskRule(64, 128)
        for k in range(6):
            got = apply(Operator.BERGMAN, poly_field({(k, 0): 1.0}), z, rule)
            assert abs(got.value - z**k) < 1e-10

    def test_cdelta_of_w(self):
        z = 0.3 + 0.2j
        got = apply(Operator.C_DELTA, lambda w: w, z)
        assert abs(got.value - (abs(z) ** 2 - 0.5)) < 1e-10


def test_j0star_kernel_series_consistency():
    # anchored on integral of |w|^{2k+2} dA = 1/(k+2)
    z = 0.4 + 0.3j
    rule = DiskRule(64, 128)
    for k in range(9):
        holo = apply(Operator.J0_STAR, poly_field({(k + 1, 0): 1.0}), z, rule)
        assert abs(holo.value - z**k / (k + 2)) < 1e-8, k
        anti = apply(Operator.J0_STAR, poly_field({(0, k): 1.0}), z, rule)
        assert abs(anti.value) < 1e-9, k


def test_cauchy_extremal_value_at_center():
    # unit L^4 density concentrated at the origin; the operator value there
    # is 3^(3/4).  The kernel route integrates with exponent 1 so the
    # remaining |w|^(-1/3) factor converges only algebraically; the check
    # is against the reported error estimate plus a generous absolute cap.
    f = lambda w: 3.0 ** (-0.25) * w * np.abs(w) ** (-4.0 / 3.0)
    got = apply(Operator.CAUCHY, f, 0.0)
    want = 3.0**0.75
    err = abs(abs(got.value) - want)
    assert err < 5e-3
    assert err <= 3.0 * got.abs_error_estimate + 1e-10


def test_cdelta_decomposition_random_fields():
    rng = np.random.default_rng(42)
    for trial in range(20):
        coeffs = {
            (a, b): complex(rng.normal(), rng.normal())
            for a in range(3)
            for b in range(3)
            if rng.random() < 0.6
        }
        coeffs[(0, 0)] = coeffs.get((0, 0), 1.0 + 0.0j)
        f = poly_field(coeffs)
        z = complex(rng.uniform(-0.7, 0.7), rng.uniform(-0.7, 0.7))
        if abs(z) > 0.75:
            z *= 0.75 / abs(z)
        combined = apply(Operator.C_DELTA, f, z, DiskRule(48, 96, Mobius(z)))
        adjoint = apply(Operator.J0_STAR, f, z, DiskRule(48, 96))
        cauchy = apply(Operator.CAUCHY, f, z, DiskRule(48, 96, Mobius(z)))
        diff = abs(combined.value - (adjoint.value - cauchy.value))
        budget = (
            combined.abs_error_estimate
            + adjoint.abs_error_estimate
            + cauchy.abs_error_estimate
            + 1e-9
        )
        assert diff <= budget, (trial, diff, budget)


def test_linearity():
    rng = np.random.default_rng(7)
    f = poly_field({(1, 0): 1.0, (2, 1): 0.5 - 0.25j})
    g = poly_field({(0, 1): -0.75j, (3, 0): 1.25})
    alpha, beta = 0.6 - 0.2j, -1.1 + 0.4j
    fg = lambda w: alpha * f(w) + beta * g(w)
    for op in Operator:
        for z in (0.25 + 0.3j, -0.5 + 0.1j):
            rule = DiskRule(48, 96, Mobius(z)) if op in (Operator.CAUCHY, Operator.C_DELTA) else DiskRule(48, 96)
            lhs = apply(op, fg, z, rule).value
            rhs = alpha * apply(op, f, z, rule).value + beta * apply(op, g, z, rule).value
            assert abs(lhs - rhs) < 1e-9, (op, z)


class TestDbarIdentity:
    def test_combined_transform_inverts_dbar(self):
        res = dbar_identity_residual(lambda w: np.ones_like(w), 0.2 + 0.1j, 1e-3)
        assert res <= 1e-3

    def test_cauchy_sign(self):
        res = dbar_identity_residual(lambda w: w, 0.0 + 0.0j, 1e-3, op=Operator.CAUCHY)
        assert res <= 1e-3

    def test_projection_output_is_holomorphic(self):
        f = poly_field({(2, 0): 1.0, (0, 1): 1.0})
        res = dbar_identity_residual(f, 0.3 - 0.2j, 1e-3, op=Operator.BERGMAN)
        assert res <= 1e-3

    def test_tiny_step_raises_precision_error(self):
        with pytest.raises(PrecisionError):
            dbar_identity_residual(
                lambda w: np.ones_like(w),
                0.2 + 0.1j,
                1e-13,
                rule=DiskRule(16, 32, Mobius(0.2 + 0.1j)),
            )

    def test_bad_step_rejected(self):
        with pytest.raises(DomainError):
            dbar_identity_residual(lambda w: w, 0.1, 0.0)


class TestAdjointPairing:
    def test_matched_monomials(self):
        assert adjoint_pairing_residual(lambda w: w, lambda w: w) <= 1e-8

    def test_mixed_polynomials(self):
        f = poly_field({(2, 1): 1.0})
        g = poly_field({(1, 0): 1.0, (0, 1): 0.5})
        assert adjoint_pairing_residual(f, g) <= 1e-6

    def test_constants(self):
        one = lambda w: np.ones_like(np.asarray(w, dtype=complex))
        assert adjoint_pairing_residual(one, one) <= 1e-8

    def test_seeded_polynomial_pairs(self):
        rng = np.random.default_rng(42)
        for trial in range(20):
            def draw():
                return {
                    (a, b): complex(rng.normal(), rng.normal())
                    for a in range(5)
                    for b in range(5)
                    if a + b <= 4 and rng.random() < 0.5
                } or {(1, 0): 1.0}

            f = poly_field(draw())
            g = poly_field(draw())
            res = adjoint_pairing_residual(f, g)
            assert res <= 1e-6, (trial, res)

    def test_rejects_singular_rule(self):
        with pytest.raises(ConfigurationError):
            adjoint_pairing_residual(lambda w: w, lambda w: w, DiskRule(32, 64, Mobius(0.1)))
