"""
Corner cutting evaluation
=========================

Evaluate a q-Bezier representation with the de Casteljau type algorithm.
Inside the triangle every step is a convex combination, so intermediate
values never leave the range of the coefficients.
"""
import numpy as np

from qbezier import (
    TriangularNet,
    basis_eval_direct,
    convex_weights,
    evaluate,
    evaluate_univariate,
    evaluate_with_tableau,
)

rng = np.random.default_rng(0)
n, q, p = 4, 0.6, (0.25, 0.35)
net = TriangularNet(n, rng.uniform(-1, 1, 15))

###############################################################################
# The tableau shrinks by one level per step until a single value remains.
for r, layer in enumerate(evaluate_with_tableau(net, p, q)):
    vals = np.array(list(layer.values()))
    print(f"layer {r}: {len(layer):2d} entries in [{vals.min():+.4f}, {vals.max():+.4f}]")

###############################################################################
# Same value as summing coefficients against the basis directly.
direct = sum(b * basis_eval_direct(n, t, p, q) for t, b in net.items())
print("corner cutting:", evaluate(net, p, q), " direct sum:", direct)

###############################################################################
# The weights used at level k.
for k in range(n):
    print(f"k={k}: weights", np.round(convex_weights(k, p, q), 4))

###############################################################################
# On the edge v = 0 the algorithm reduces to the univariate q-Bernstein one.
edge = [net[(i, 0, n - i)] for i in range(n + 1)]
print("edge:", evaluate(net, (0.4, 0.0), q), evaluate_univariate(edge, 0.4, q))

###############################################################################
# Many points at once: pass arrays of u and v.
u = np.linspace(0, 1, 5)
print("along u + v = 1:", evaluate(net, (u, 1 - u), q))
