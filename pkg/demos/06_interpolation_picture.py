"""
The interpolation picture for the adjoint kernel
================================================

Endpoint norms at p = 1 and p = infinity, the exact p = 2 value, and
the Riesz-Thorin curve filling in everything between.  Sampled lower
bounds from concrete inputs have to sit below the curve everywhere,
and for large p the direct kernel bound beats interpolation, so the
catalog reports the smaller of the two.
"""

import math

import numpy as np

from disknorms import NormQuery, closed_form_norm, riesz_thorin_bound
from disknorms.quadrature import DiskRule, integrate_disk

print("interpolated upper bound for the adjoint kernel, p from 1 to infinity")
print("----------------------------------------------------------------------")
print("    p    riesz-thorin     catalog        source")
for p in (1.0, 1.25, 1.5, 2.0, 2.5, 3.0, 4.0, 6.0, 10.0, 50.0, float("inf")):
    rt = riesz_thorin_bound(p)
    cat = closed_form_norm(NormQuery("j0star", p))
    marker = "direct kernel bound" if cat.value < rt.value - 1e-15 else "interpolation"
    if cat.kind.name == "EXACT_NORM":
        marker = "exact"
    print(f"  {p:<6g} {rt.value:.10f}   {cat.value:.10f}   {marker}")

print()
print("sampled lower bounds staying under the curve")
print("--------------------------------------------")
# Rayleigh-style samples: ratio of output to input L^p norm for a few
# fixed monomial inputs, computed with plain disk quadrature. w -> 1/2
# and w^2 conj(w) -> 1/3 under the adjoint kernel; w^2 -> z/3.
rule = DiskRule(128, 64)


def lp(f, p):
    if math.isinf(p):
        grid = np.exp(2j * math.pi * np.linspace(0, 1, 512, endpoint=False))
        return float(np.max(np.abs(f(grid))))
    val = integrate_disk(lambda w: np.abs(f(w)) ** p, rule).value
    return float(val.real) ** (1.0 / p)


SAMPLES = (
    ("w        -> 1/2", lambda w: w, lambda z: 0.5 * np.ones_like(z)),
    ("w^2 w~   -> 1/3", lambda w: w**2 * np.conj(w), lambda z: np.ones_like(z) / 3.0),
    ("w^2      -> z/3", lambda w: w**2, lambda z: z / 3.0),
)

for p in (1.5, 3.0, 4.0):
    bound = closed_form_norm(NormQuery("j0star", p)).value
    print(f"  p = {p:g}, upper bound {bound:.6f}")
    for label, f, image in SAMPLES:
        ratio = lp(image, p) / lp(f, p)
        print(f"    {label}   ratio = {ratio:.6f}   headroom = {bound - ratio:+.6f}")
    print()

print("why interpolation always wins in the interior")
print("----------------------------------------------")
# Write L for the sup-norm limit (1 + 2 alpha)/pi. The direct kernel
# bound is L * (4/(1+2a))^(1/p), above L for every finite p, while the
# interpolation curve is L * (1/(2 L^2))^(1/p), below L since 2 L^2 > 1.
# Both squeeze onto L as p grows, from opposite sides.
from disknorms.specfun import catalan_constant

L = (1.0 + 2.0 * catalan_constant(1e-15).value) / math.pi
print(f"  common limit L = {L:.10f},  2 L^2 = {2.0 * L * L:.6f} > 1")
for p in (5.0, 20.0, 100.0, 1000.0):
    rt = riesz_thorin_bound(p).value
    direct = L * (4.0 / (1.0 + 2.0 * catalan_constant(1e-15).value)) ** (1.0 / p)
    print(
        f"  p = {p:<6g} interpolation = {rt:.10f}  direct = {direct:.10f}  "
        f"bracket width = {direct - rt:.2e}"
    )
