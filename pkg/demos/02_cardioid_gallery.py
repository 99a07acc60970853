#!/usr/bin/env python3
"""The main cardioid, three ways.

With a = 0 and n = 2 the map is the quadratic family z**2 + c, and the
branch map c = (1 - lam/2) * (lam/2) traces the main cardioid of the
Mandelbrot set as lam runs over the unit circle.  This script draws it as
a boundary curve, as a pushforward of the whole multiplier disk, and as an
oracle membership scan, writing P6 pixmaps next to this file.
"""

import pathlib

from stabrange import (
    RenderStyle,
    boundary_locus,
    pushforward_disk,
    region_scan,
    render,
)
from stabrange.formats import atomic_write_bytes, atomic_write_text, locus_csv

OUT = pathlib.Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)

# 1. the boundary: image of the unit circle
(curve,) = boundary_locus(2, "a_zero", samples=4096)
print(f"boundary: {len(curve.samples)} samples, closed={curve.closed}")
print(f"  spot checks: lam=1 -> {curve.samples[0][1]} (cusp at 1/4)")
atomic_write_text(OUT / "cardioid_boundary.csv", locus_csv([curve]))
style = RenderStyle(width=512, height=512, bounds=(-1.0, 0.5, -0.75, 0.75))
atomic_write_bytes(OUT / "cardioid_boundary.ppm", render([curve], style))

# 2. the filled region: image of concentric circles inside the disk
cloud = pushforward_disk(2, "a_zero", rings=48, samples=1024)
print(f"pushforward: {len(cloud)} points")
atomic_write_bytes(OUT / "cardioid_pushforward.ppm", render(cloud, style))

# 3. the same region from the other side: per-pixel fixed-point search
raster = region_scan(2, "c", 0j, (-1.0, 0.5, -0.75, 0.75), 512, 512)
inside = int((raster.cells == 1).sum() + (raster.cells == 2).sum())
print(f"membership scan: {inside} of {512 * 512} pixels inside")
atomic_write_bytes(OUT / "cardioid_scan.ppm", render(raster))

print(f"wrote 3 images + CSV under {OUT}")
