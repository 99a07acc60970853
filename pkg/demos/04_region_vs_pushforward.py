#!/usr/bin/env python3
"""Cross-validating the two views of a stability region.

The pushforward view evaluates the branch maps on the sampled multiplier
disk; the membership view decides per pixel whether the concrete map has
an attracting fixed point.  For exact branch families every pushforward
point must land in an inside cell.
"""

import pathlib

from stabrange import pushforward_disk, region_scan, render
from stabrange.formats import atomic_write_bytes

OUT = pathlib.Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)

# the a-region of z**2 + a/z**2 (c = 0): one branch family
points = [p for p in pushforward_disk(2, "c_zero", rings=24, samples=512) if abs(p[0]) <= 0.95]
values = [v for _lam, v, _k in points]
re = [v.real for v in values]
im = [v.imag for v in values]
pad_re = 0.15 * (max(re) - min(re))
pad_im = 0.15 * (max(im) - min(im))
bounds = (min(re) - pad_re, max(re) + pad_re, min(im) - pad_im, max(im) + pad_im)
print(f"pushforward cloud: {len(points)} points in window {bounds}")

raster = region_scan(2, "a", 0j, bounds, 384, 384)
hits = 0
for v in values:
    col = int((v.real - bounds[0]) / (bounds[1] - bounds[0]) * 384)
    row = int((v.imag - bounds[2]) / (bounds[3] - bounds[2]) * 384)
    if raster.cells[row, col] in (1, 2):
        hits += 1
print(f"membership agreement: {hits}/{len(points)} = {hits / len(points) * 100:.2f}%")

atomic_write_bytes(OUT / "a_region_scan.ppm", render(raster))
atomic_write_bytes(OUT / "a_region_pushforward.ppm", render(points))
print(f"wrote 2 images under {OUT}")
