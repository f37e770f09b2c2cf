"""Integral operators on the unit disk.

Five operators share the evaluation pipeline here.  Writing K_z(w) for the
kernel at evaluation point z, each operator is f |-> integral of K_z * f over
the disk with normalized area measure:

    cauchy    K_z(w) = 1 / (w - z)            singular at w = z
    bergman   K_z(w) = 1 / (1 - conj(w) z)^2  bounded for |z| < 1
    j0        K_z(w) = z / (1 - conj(w) z)    bounded, vanishing at z = 0
    j0star    K_z(w) = conj(w) / (1 - conj(w) z)
    cdelta    K_z(w) = 1/(z - w) + conj(w)/(1 - conj(w) z)

The last one solves d/dzbar u = f (its output is an antiderivative in the
zbar direction), and it equals j0star minus cauchy.  Both identities are
checked numerically by the helpers at the bottom of the module:
``dbar_identity_residual`` differentiates the output field with a central
finite difference, and ``adjoint_pairing_residual`` tests the duality
<j0 f, g> = <f, j0star g> on staggered quadrature grids.

Singular operators (cauchy, cdelta) must be given a rule whose singularity
strategy is centered at the evaluation point; the bounded three refuse rules
with a strategy attached.  Near the boundary every kernel develops a thin
angular layer, so rules are validated against the same angular-node floor
the quadrature module uses.
"""

from __future__ import annotations

import enum
import math
from typing import Callable, Optional

import numpy as np

from .errors import ConfigurationError, DomainError, PrecisionError
from .quadrature import (
    AnnulusExclude,
    DiskRule,
    FieldFn,
    Integral,
    Mobius,
    _angles,
    _eval_nodes,
    _gauss01,
    integrate_disk,
    integrate_disk_singular,
    required_angular_nodes,
)

__all__ = [
    "Operator",
    "apply",
    "adjoint_pairing_residual",
    "dbar_identity_residual",
]

# Bounded kernels still blow up like 1/(1-|z|); cap evaluation points away
# from the boundary so the angular-node floor stays finite.
_BOUNDARY_MARGIN = 1e-6


class Operator(str, enum.Enum):
    """Operator identifiers, doubling as CLI flag values."""

    CAUCHY = "cauchy"
    BERGMAN = "bergman"
    J0 = "j0"
    J0_STAR = "j0star"
    C_DELTA = "cdelta"


_SINGULAR_OPS = frozenset({Operator.CAUCHY, Operator.C_DELTA})


def _eval_scalar(f: FieldFn, z: complex) -> complex:
    """Evaluate a field at one point, tolerating vector-only callables."""
    return complex(_eval_nodes(f, np.asarray([z], dtype=complex))[0])


def _check_point(op: Operator, z: complex) -> complex:
    z = complex(z)
    if abs(z) >= 1.0:
        raise DomainError(f"evaluation point |z| = {abs(z):.6g} is outside the open disk")
    if op not in _SINGULAR_OPS and abs(z) > 1.0 - _BOUNDARY_MARGIN:
        raise DomainError(
            f"{op.value} evaluation restricted to |z| <= {1.0 - _BOUNDARY_MARGIN}; got |z| = {abs(z):.9g}"
        )
    return z


def _check_rule(op: Operator, z: complex, rule: Optional[DiskRule]) -> DiskRule:
    singular = op in _SINGULAR_OPS
    if rule is None:
        return DiskRule.for_point(z, singular=singular)
    need = required_angular_nodes(z)
    if rule.angular_nodes < need:
        raise ConfigurationError(
            f"rule has {rule.angular_nodes} angular nodes but |z| = {abs(z):.6g} "
            f"requires at least {need}"
        )
    if singular:
        if rule.singularity is None:
            raise ConfigurationError(
                f"{op.value} is singular at the evaluation point and needs a rule "
                "with a singularity strategy centered there"
            )
        if isinstance(rule.singularity, Mobius) and abs(rule.singularity.center - z) > 1e-12:
            raise ConfigurationError(
                f"singularity strategy centered at {rule.singularity.center:.6g} "
                f"does not match evaluation point {z:.6g}"
            )
    elif rule.singularity is not None:
        raise ConfigurationError(f"{op.value} has a bounded kernel; rule must not carry a singularity strategy")
    return rule


def _bounded_integrand(op: Operator, f: FieldFn, z: complex) -> FieldFn:
    if op is Operator.BERGMAN:
        return lambda w: f(w) / (1.0 - np.conj(w) * z) ** 2
    if op is Operator.J0:
        # kernel z/(1 - wbar z); the z factor is applied after integration
        return lambda w: f(w) / (1.0 - np.conj(w) * z)
    if op is Operator.J0_STAR:
        return lambda w: np.conj(w) * f(w) / (1.0 - np.conj(w) * z)
    raise ConfigurationError(f"{op!r} is not a bounded operator")


def apply(op: Operator, f: FieldFn, z: complex, rule: Optional[DiskRule] = None) -> Integral:
    """Evaluate one operator at an interior point.

    ``rule=None`` builds a default rule for ``z``: angular nodes scale with
    the boundary distance, and the singular operators get a Mobius strategy
    centered at ``z``.  Explicit rules are validated instead of silently
    upgraded; too few angular nodes or a mismatched singularity center raise
    ``ConfigurationError``.
    """
    op = Operator(op)
    z = _check_point(op, z)
    rule = _check_rule(op, z, rule)

    if op is Operator.CAUCHY:
        return integrate_disk_singular(lambda w: f(w) / (w - z), z, 1.0, rule)
    if op is Operator.C_DELTA:
        def combined(w):
            return f(w) * (1.0 / (z - w) + np.conj(w) / (1.0 - np.conj(w) * z))

        return integrate_disk_singular(combined, z, 1.0, rule)

    inner = integrate_disk(_bounded_integrand(op, f, z), rule)
    if op is Operator.J0:
        return Integral(z * inner.value, abs(z) * inner.abs_error_estimate)
    return inner


def _disk_nodes(radial_nodes: int, angular_nodes: int):
    """Flattened tensor-product nodes and weights for the normalized measure."""
    t, wt = _gauss01(radial_nodes)
    ang = _angles(angular_nodes)
    nodes = (t[:, None] * ang[None, :]).ravel()
    weights = np.repeat(2.0 * wt * t / angular_nodes, angular_nodes)
    return nodes, weights


def adjoint_pairing_residual(f: FieldFn, g: FieldFn, rule: Optional[DiskRule] = None) -> float:
    """Residual of the duality <j0 f, g> = <f, j0star g>.

    The operator images are sampled on a staggered outer grid (5 extra radial
    and 16 extra angular nodes) so the identity is not a transpose tautology
    of one discretization.  The angular stagger must exceed twice the input
    polynomial degree: the inner grid's first aliased kernel harmonic has
    angular frequency na+1+deg, and an outer count of na+16 only resonates
    with it when the combined input frequency reaches 15, out of reach for
    the degree-4 fields this check is calibrated for.  Inner integrals come
    from ``rule``.
    """
    if rule is None:
        rule = DiskRule(radial_nodes=32, angular_nodes=64)
    if rule.singularity is not None:
        raise ConfigurationError("pairing residual uses bounded kernels; rule must not carry a singularity strategy")

    w_in, wt_in = _disk_nodes(rule.radial_nodes, rule.angular_nodes)
    w_out, wt_out = _disk_nodes(rule.radial_nodes + 5, rule.angular_nodes + 16)

    f_in = _eval_nodes(f, w_in)
    g_in = _eval_nodes(g, w_in)
    f_out = _eval_nodes(f, w_out)
    g_out = _eval_nodes(g, w_out)

    fw = wt_in * f_in
    gw = wt_in * np.conj(w_in) * g_in

    lhs = 0.0 + 0.0j
    rhs = 0.0 + 0.0j
    block = 2048
    for lo in range(0, w_out.size, block):
        zc = w_out[lo : lo + block]
        kern = 1.0 / (1.0 - np.conj(w_in)[None, :] * zc[:, None])
        j0f = zc * (kern @ fw)
        j0sg = kern @ gw
        lhs += np.sum(wt_out[lo : lo + block] * j0f * np.conj(g_out[lo : lo + block]))
        rhs += np.sum(wt_out[lo : lo + block] * f_out[lo : lo + block] * np.conj(j0sg))
    return float(abs(lhs - rhs))


_DBAR_SIGN = {
    Operator.C_DELTA: 1.0,
    Operator.CAUCHY: -1.0,
    Operator.BERGMAN: 0.0,
    Operator.J0: 0.0,
    Operator.J0_STAR: 0.0,
}


def dbar_identity_residual(
    f: FieldFn,
    z: complex,
    h: float,
    rule: Optional[DiskRule] = None,
    op: Operator = Operator.C_DELTA,
) -> float:
    """Check d/dzbar of an operator output field against its known value.

    The zbar derivative of the combined transform reproduces ``f(z)``, the
    Cauchy transform gives ``-f(z)``, and the three holomorphic-output
    operators give zero.  The derivative is a central difference

        [(u(z+h) - u(z-h)) + i (u(z+ih) - u(z-ih))] / (4h)

    so the returned residual carries an O(h^2) truncation term plus the
    quadrature noise of four operator evaluations divided by 4h.  When that
    noise term alone exceeds half the comparison scale the step cannot
    resolve the identity and a PrecisionError is raised instead of returning
    a meaningless number.
    """
    op = Operator(op)
    if op not in _DBAR_SIGN:
        raise ConfigurationError(f"no zbar identity registered for {op!r}")
    if not (h > 0.0):
        raise DomainError("finite-difference step h must be positive")
    z = complex(z)

    shifts = (z + h, z - h, z + 1j * h, z - 1j * h)
    values = []
    noise = 0.0
    for point in shifts:
        if op in _SINGULAR_OPS:
            if rule is None:
                local = DiskRule.for_point(point, singular=True)
            elif isinstance(rule.singularity, AnnulusExclude) or rule.singularity is None:
                # annulus strategy re-centers itself at each shifted point
                strategy = rule.singularity if rule.singularity is not None else None
                local = DiskRule.for_point(
                    point,
                    radial_nodes=rule.radial_nodes,
                    angular_nodes=rule.angular_nodes,
                    singular=strategy is None,
                )
                if strategy is not None:
                    local = DiskRule(local.radial_nodes, local.angular_nodes, strategy)
            else:
                local = DiskRule(
                    rule.radial_nodes,
                    max(rule.angular_nodes, required_angular_nodes(point)),
                    Mobius(point),
                )
        else:
            local = rule
        result = apply(op, f, point, local)
        values.append(result.value)
        noise += result.abs_error_estimate

    derivative = (values[0] - values[1] + 1j * (values[2] - values[3])) / (4.0 * h)
    expected = _DBAR_SIGN[op] * _eval_scalar(f, z)
    scale = max(1.0, abs(expected))
    if noise / (4.0 * h) > 0.5 * scale:
        raise PrecisionError(
            f"step h = {h:.3g} is too small relative to quadrature noise "
            f"{noise:.3g}; the finite difference cannot resolve the identity",
            best=float(abs(derivative - expected)),
        )
    return float(abs(derivative - expected))
