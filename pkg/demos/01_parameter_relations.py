#!/usr/bin/env python3
"""Tour of the parameter relations at a fixed point.

For R(z) = z**n + a/z**n + c, prescribing the multiplier lam at a fixed
point ties the two parameters together.  This script walks the exact
branch families in both directions and shows that each branch really does
produce a map with the requested multiplier.
"""

import stabrange as sr

print("=== n = 1: a single closed form each way ===")
lam = 0.5 + 0j
c = 2 + 0j
(rec,) = sr.a_from_c(1, c, lam)
print(f"c = {c}, lam = {lam}  ->  a = {rec.value}")  # c**2/(1 - lam) = 8

for rec in sr.c_from_a(1, 1, -3):
    print(f"a = 1, lam = -3  ->  c = {rec.value} (branch {rec.k})")

print()
print("=== n = 2: two branches of a given c ===")
c, lam = -0.5 + 0.866j, 0.3 - 0.2j
for rec in sr.a_from_c(2, c, lam):
    print(
        f"branch {rec.k}: xi = {rec.xi:.6f}, a = {rec.value:.6f}, "
        f"residuals {rec.residual_c_rel:.1e}/{rec.residual_a_rel:.1e}"
    )
    # the branch point xi is itself the fixed point of the induced map
    params = sr.MapParams(2, rec.value, c)
    print(f"          multiplier at xi: {sr.multiplier(rec.xi, params):.6f}")

print()
print("=== n = 3: six branches of c given a ===")
for rec in sr.c_from_a(3, 1, 0):
    print(f"branch {rec.k}: xi = {rec.xi:+.4f}, c = {rec.value:+.4f}")

print()
print("=== n = 4 has no closed inversion; the root-finder fills in ===")
for rec in sr.c_from_a_numeric(4, 0.9 - 0.4j, 0.25 + 0.35j)[:3]:
    print(f"branch {rec.k}: c = {rec.value:.6f} (residual {rec.residual_a_rel:.1e})")
print("...")

print()
print("=== special families on the axes ===")
print("a = 0, n = 2: c =", sr.special_a_zero(2, 1.0)[0].value, "(cardioid cusp)")
print("c = 0, n = 2: a =", sr.special_c_zero(2, 0.0)[0].value, "(superattracting)")

print()
print("=== n >= 5: asymptotic branches with validity gates ===")
for rec in sr.approx_a_from_c_large(5, 16, 0):
    print(f"branch {rec.k}: a = {rec.value:.3f}, residual/|c| = {rec.residual_c_rel / 16:.3f}")
try:
    sr.approx_a_from_c_large(5, 0.01, 0)
except sr.ValidityError as exc:
    print(f"c = 0.01 refused by the large-|c| gate (ratio {exc.ratio:.4f})")
rec = sr.approx_a_from_c_small(5, 0.01, 0)
print(f"...but the small-|c| regime applies: a = {rec.value:.3e}")
