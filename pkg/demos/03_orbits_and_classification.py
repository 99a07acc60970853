#!/usr/bin/env python3
"""Fixed points, multipliers and orbits of concrete maps.

Everything here is computed directly from the map itself; no branch
formulas involved.  The fixed-point list comes from the simultaneous
root finder on the cleared fixed-point polynomial.
"""

from stabrange import MapParams, fixed_points, has_attracting_fixed_point, iterate_orbit

print("=== fixed points of z**2 + (1/16)/z**2 ===")
params = MapParams(2, 1 / 16, 0)
for rec in fixed_points(params):
    print(
        f"z = {rec.z:+.6f}  lam = {rec.lam:+.6f}  {rec.classification.value}"
        f"  (|R(z)-z| = {rec.residual_fixed:.1e})"
    )

ok, witness = has_attracting_fixed_point(params)
print(f"\nattracting fixed point: {ok}, witness z = {witness.z}, lam = {witness.lam}")

print("\n=== orbit from z0 = 0.4 walks into the superattracting point ===")
trace = iterate_orbit(0.4, params, max_steps=200, tol=1e-12)
for i, z in enumerate(trace.points[:8]):
    print(f"  z_{i} = {z:.12f}")
print(f"verdict: {trace.verdict.value}, limit = {trace.limit}")

print("\n=== outside the Mandelbrot set the orbit escapes ===")
trace = iterate_orbit(0.0, MapParams(2, 0, 2), max_steps=100, tol=1e-12)
print("orbit:", ", ".join(f"{z:.0f}" for z in trace.points[:6]), "...")
print(f"verdict: {trace.verdict.value} after {len(trace.points) - 1} steps")

print("\n=== multiplier classes ===")
for c in (0.0, 0.2, 0.26, -1.0):
    recs = fixed_points(MapParams(2, 0, c))
    kinds = ", ".join(f"{r.lam:+.3f} {r.classification.value}" for r in recs)
    print(f"z**2 + {c:+.2f}: {kinds}")
