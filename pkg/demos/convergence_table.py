"""Mesh-refinement study for the 1D fractional derivative.

Applies the half-order two-sided derivative to vertex samples of
f(x) = -10x^3 + 10x^2 on finer and finer interval meshes and prints the
L2 distance between the piecewise-constant result and the analytic
fractional derivative.  The error decays roughly like h^(1/2): each
doubling of the mesh multiplies it by about 0.707.

Run:  python3 demos/convergence_table.py
"""

from fracdec import FracConfig, convergence_study, get_family

family = get_family("poly_neg10x3_plus_10x2")
config = FracConfig(s=0.5, right_sign="plus")
counts = [2 ** k for k in range(1, 11)]

print(f"f(x) = -10x^3 + 10x^2 on [0, 1], order s = {config.s}")
print(f"{'edges':>6}  {'L2 error':>10}  {'ratio':>7}")
for row in convergence_study(family, config.s, counts, config=config):
    ratio = "" if row["n"] == counts[0] else f"{row['ratio']:7.4f}"
    print(f"{row['n']:>6}  {row['error']:>10.4f}  {ratio:>7}")
print("\nA ratio near 1/sqrt(2) = 0.7071 indicates order-1/2 convergence.")
