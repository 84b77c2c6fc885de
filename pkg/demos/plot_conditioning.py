"""
Conditioning: q-Bernstein versus Bernstein
==========================================

The q-Bernstein functions are nonnegative combinations of the classical
triangular Bernstein functions. As a consequence the classical
representation of any polynomial is at least as well conditioned at every
point of the triangle.
"""
import numpy as np

from qbezier import TriangularNet, compare_conditioning, qbernstein_to_bernstein_matrix

rng = np.random.default_rng(2)
pts = [(a / 6, b / 6) for a in range(7) for b in range(7 - a)]

###############################################################################
# The change of basis matrix is entrywise nonnegative.
for q in (0.3, 0.7, 1.0):
    A = qbernstein_to_bernstein_matrix(4, q).entries
    print(f"q={q}: min entry {A.min():.3g}, row sums in [{A.sum(1).min():.3f}, {A.sum(1).max():.3f}]")

###############################################################################
# Ratio cond(Bernstein) / cond(q-Bernstein) over a grid, for a random net.
for q in (0.1, 0.3, 0.7, 0.95):
    net = TriangularNet(4, rng.uniform(-1, 1, 15))
    report = compare_conditioning(net, q, pts)
    print(
        f"q={q}: mean cond_q {np.mean(report.cond_q):.3f}, "
        f"mean cond_b {np.mean(report.cond_bernstein):.3f}, max ratio {report.max_ratio:.4f}"
    )
