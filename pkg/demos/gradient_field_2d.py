"""Fractional gradient fields on a triangulated unit square.

Samples a scalar function at the vertices, applies the half-order
derivative to get a 1-cochain, lifts it to a piecewise-affine vector
field through the Whitney map, and compares barycenter values against
the analytic fractional gradient.  Relative errors peak near the
critical point of the field, where the reference magnitude collapses.

Run:  python3 demos/gradient_field_2d.py
"""

import numpy as np

from fracdec import FracConfig, field_experiment_2d, get_family

config = FracConfig(s=0.5, distance_mode="euclidean")

for name in ("saddle_2d", "shifted_min_2d"):
    family = get_family(name)
    print(f"\n=== {name} ===")
    for n in (4, 8, 16):
        res = field_experiment_2d(n, family, config, normalize="predicted")
        s = res["summary"]
        rel, centers = res["relative_errors"], res["centers"]
        worst = centers[int(np.nanargmax(rel))]
        print(f"  n={n:>2}: rel error mean {s['mean']:.3f} "
              f"(min {s['min']:.3f}, max {s['max']:.3f}), "
              f"worst triangle at ({worst[0]:.3f}, {worst[1]:.3f}), "
              f"{s['flagged']} flagged")

print("\nVector samples for the saddle at n=4 (predicted vs analytic):")
res = field_experiment_2d(4, get_family("saddle_2d"), config)
for i in (0, 10, 20, 30):
    c, p, r = res["centers"][i], res["predicted"][i], res["reference"][i]
    print(f"  ({c[0]:.3f}, {c[1]:.3f}): "
          f"({p[0]:+.3f}, {p[1]:+.3f}) vs ({r[0]:+.3f}, {r[1]:+.3f})")
