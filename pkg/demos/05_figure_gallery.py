#!/usr/bin/env python3
"""Regenerate the full stability-range figure set through the CLI.

Each panel fixes one parameter and maps the unit multiplier disk (or its
boundary) to the range of the other parameter:

  panel 1: n = 2 with c = 0 (range of a) and a = 0 (range of c, the
           main cardioid), drawn by oracle membership scan
  panel 2: n = 1, a = sqrt(2)/2 * (1+i), two lobes of c
  panel 3: n = 2, a-range for fixed c and c-range for fixed a
  panel 4: n = 3, likewise (three and six branches)
  panel 5: n = 4, four a-branches
  panel 6: n = 5, asymptotic a-ranges for c = 16 and c = 1/16

Outputs land in demos/out/figures as CSV/JSON plus P6 pixmaps.
"""

import pathlib
import subprocess
import sys

OUT = pathlib.Path(__file__).parent / "out" / "figures"
OUT.mkdir(parents=True, exist_ok=True)

ROOT2 = "0.7071067811865476"

PANELS = [
    ("fig1_a_region", ["scan", "--n", "2", "--free", "a", "--fixed", "0,0",
                       "--window", "-0.2,0.3,-0.2,0.2", "--res", "384x384"]),
    ("fig1_cardioid", ["scan", "--n", "2", "--free", "c", "--fixed", "0,0",
                       "--window", "-2,1,-1.5,1.5", "--res", "384x384"]),
    ("fig2_n1_lobes", ["locus", "--n", "1", "--mode", "c-from-a",
                       "--fixed", f"{ROOT2},{ROOT2}", "--samples", "2048"]),
    ("fig3_n2_a", ["locus", "--n", "2", "--mode", "a-from-c",
                   "--fixed", "-0.5,0.8660254037844386", "--samples", "2048"]),
    ("fig3_n2_c", ["locus", "--n", "2", "--mode", "c-from-a",
                   "--fixed", f"-{ROOT2},{ROOT2}", "--samples", "2048"]),
    ("fig4_n3_a", ["locus", "--n", "3", "--mode", "a-from-c",
                   "--fixed", f"-{ROOT2},{ROOT2}", "--samples", "2048"]),
    ("fig4_n3_c", ["locus", "--n", "3", "--mode", "c-from-a",
                   "--fixed", "-0.5,0.8660254037844386", "--samples", "2048"]),
    ("fig5_n4_a", ["locus", "--n", "4", "--mode", "a-from-c",
                   "--fixed", f"{ROOT2},{ROOT2}", "--samples", "2048"]),
    ("fig6_c16", ["locus", "--n", "5", "--mode", "a-from-c", "--fixed", "16,0",
                  "--samples", "512", "--disk-rings", "24",
                  "--approx", "--regime", "large"]),
    ("fig6_c_sixteenth", ["locus", "--n", "5", "--mode", "a-from-c",
                          "--fixed", "0.0625,0", "--samples", "512",
                          "--disk-rings", "24", "--approx", "--regime", "small"]),
]

for name, tail in PANELS:
    ext = "json" if tail[0] == "scan" else "csv"
    argv = [sys.executable, "-m", "stabrange"] + tail + [
        "--out", str(OUT / f"{name}.{ext}"),
        "--png-like", str(OUT / f"{name}.ppm"),
    ]
    proc = subprocess.run(argv, capture_output=True, text=True)
    status = "ok" if proc.returncode == 0 else f"rc={proc.returncode}"
    print(f"{name:18s} {status:6s} {proc.stdout.strip()}")

print(f"\nfigures under {OUT}")
