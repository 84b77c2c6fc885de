"""
Triangular q-Bernstein basis functions
======================================

Sample a few cubic and quartic basis functions on the parameter triangle
and watch how they change with the shape parameter ``q``. At ``q = 1``
they are the usual triangular Bernstein polynomials.
"""
import pathlib

import numpy as np

from qbezier import basis_eval_all, basis_sample_grid, basis_vector

out_dir = pathlib.Path(__file__).parent / "_output"
out_dir.mkdir(exist_ok=True)

###############################################################################
# Peak value of B^3_003, B^3_012 and B^4_004 for three values of q.
# Lowering q makes the last factors of the product (1 - q^s u - q^s v)
# closer to one, so the functions spread further into the triangle.
for n, idx in [(3, (0, 0, 3)), (3, (0, 1, 2)), (4, (0, 0, 4))]:
    for q in (0.2, 0.5, 1.0):
        samples = basis_sample_grid(n, idx, q, 40)
        mass = np.mean([val for _, _, val in samples])
        print(f"B^{n}_{''.join(map(str, idx))}  q={q:.1f}  mean over grid = {mass:.4f}")

###############################################################################
# Whatever q is, the functions are nonnegative and sum to one.
vals = basis_eval_all(4, (0.2, 0.3), 0.35)
print("sum =", sum(vals.values()), " min =", min(vals.values()))

###############################################################################
# Plot the surfaces (requires matplotlib).
try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    from matplotlib.tri import Triangulation
except ImportError:
    plt = None

if plt is not None:
    m = 30
    pts = np.array([(a / m, b / m) for a in range(m + 1) for b in range(m + 1 - a)])
    tri = Triangulation(pts[:, 0], pts[:, 1])
    fig = plt.figure(figsize=(12, 4))
    for col, q in enumerate((0.2, 0.5, 1.0)):
        ax = fig.add_subplot(1, 3, col + 1, projection="3d")
        z = basis_vector(3, pts[:, 0], pts[:, 1], q)[-1]  # B^3_003, last in canonical order
        ax.plot_trisurf(tri, z, cmap="viridis")
        ax.set_title(f"B^3_003, q={q}")
    fig.savefig(out_dir / "basis_b003.png", dpi=100)
    print("wrote", out_dir / "basis_b003.png")
