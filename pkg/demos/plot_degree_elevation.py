"""
Degree elevation and the monomial basis
=======================================

Raise the degree of a representation without changing the polynomial,
then build q-Bernstein coefficients for every monomial ``x^a y^b`` on a
triangle. The conversion matrix being nonsingular shows the functions
form a basis.
"""
import numpy as np

from qbezier import TriangleGeometry, TriangularNet, degree_elevate, elevate_to, evaluate, monomial_to_qbernstein
from qbezier.elevation import monomial_conversion_matrix, spanning_margin

rng = np.random.default_rng(1)
q = 0.5
net = TriangularNet(2, rng.uniform(-1, 1, 6))

###############################################################################
# Elevate 2 -> 3 -> 5 and compare values at a few points.
up = degree_elevate(net, q)
up5 = elevate_to(net, 5, q)
for p in [(0.1, 0.1), (0.5, 0.2), (0.0, 0.9)]:
    print(p, evaluate(net, p, q), evaluate(up, p, q), evaluate(up5, p, q))

###############################################################################
# x^2 y on a skewed triangle, in the degree-4 basis.
geom = TriangleGeometry((2.0, 0.0), (0.5, 1.5), (-1.0, -0.5))
c = monomial_to_qbernstein(2, 1, 4, geom, q)
u, v = 0.3, 0.4
x, y = geom.to_cartesian(u, v)
print("x^2 y =", x**2 * y, " from the net:", evaluate(c, (u, v), q))

###############################################################################
# Smallest singular value of the column-normalised conversion matrix.
for n in range(1, 6):
    mat = monomial_conversion_matrix(n, geom, q)
    print(f"n={n}: {mat.shape}, margin {spanning_margin(n, geom, q):.3e}")
