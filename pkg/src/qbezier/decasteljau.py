"""de Casteljau type evaluation of q-Bezier representations.

Each step replaces three neighbouring entries of the net by

    q**k u f[i+1,j,k] + q**k v f[i,j+1,k] + (1 - q**k u - q**k v) f[i,j,k+1]

so inside the parameter triangle every step is a convex combination.
Values may be scalars or points (any trailing shape); ``u`` and ``v`` may
be arrays, in which case all points are evaluated in one sweep.
"""
from __future__ import annotations

import numpy as np

from .net import TriangularNet, triples
from .qcore import check_q


def convex_weights(k: int, p, q) -> tuple[float, float, float]:
    """Weights ``(q**k u, q**k v, 1 - q**k u - q**k v)`` of a level-``k`` step."""
    q = float(check_q(q))
    u, v = p
    qk = q**k
    wu = qk * u
    wv = qk * v
    return wu, wv, 1.0 - qk * u - qk * v


def _powers(q: float, n: int) -> np.ndarray:
    out = np.ones(n + 1)
    for k in range(1, n + 1):
        out[k] = out[k - 1] * q
    return out


def _step(grid: np.ndarray, m: int, qpow: np.ndarray, u, v) -> np.ndarray:
    """Reduce the degree-``m`` layer held in ``grid[:m+1, :m+1]`` to degree ``m-1``.

    ``grid`` has shape ``(n+1, n+1) + pts_shape + value_shape``. Returns the
    new layer in a fresh array of the same shape; entries outside
    ``i + j <= m - 1`` are zero.
    """
    ii, jj = np.meshgrid(np.arange(m), np.arange(m), indexing="ij")
    kk = m - 1 - ii - jj
    valid = kk >= 0
    qk = np.where(valid, qpow[np.clip(kk, 0, None)], 0.0)
    qk = qk.reshape(qk.shape + (1,) * u.ndim)
    wu = qk * u
    wv = qk * v
    ww = np.where(valid.reshape(valid.shape + (1,) * u.ndim), 1.0 - qk * u - qk * v, 0.0)
    extra = (1,) * (grid.ndim - 2 - u.ndim)
    wu = wu.reshape(wu.shape + extra)
    wv = wv.reshape(wv.shape + extra)
    ww = ww.reshape(ww.shape + extra)
    out = np.zeros_like(grid)
    out[:m, :m] = (
        wu * grid[1 : m + 1, :m] + wv * grid[:m, 1 : m + 1] + ww * grid[:m, :m]
    )
    return out


def _initial_grid(net: TriangularNet, u: np.ndarray) -> np.ndarray:
    n = net.degree
    grid = np.zeros((n + 1, n + 1) + u.shape + net.value_shape)
    for (i, j, _), val in net.items():
        grid[i, j] = val
    return grid


def _prepare(net: TriangularNet, p, q):
    q = float(check_q(q))
    u = np.asarray(p[0], dtype=float)
    v = np.asarray(p[1], dtype=float)
    u, v = np.broadcast_arrays(u, v)
    return q, u, v


def evaluate(net: TriangularNet, p, q):
    """Value of ``sum b_ijk B^n_ijk(u, v)`` computed by corner cutting.

    ``p = (u, v)``; with array ``u``/``v`` the result has shape
    ``u.shape + net.value_shape``.
    """
    q, u, v = _prepare(net, p, q)
    n = net.degree
    qpow = _powers(q, n)
    grid = _initial_grid(net, u)
    for m in range(n, 0, -1):
        grid = _step(grid, m, qpow, u, v)
    result = grid[0, 0]
    return float(result) if result.ndim == 0 else result


def evaluate_with_tableau(net: TriangularNet, p, q) -> list[dict]:
    """Run the algorithm at a single point and keep every layer.

    Returns a list whose entry ``r`` maps each triple of degree ``n - r``
    to the intermediate value ``f^(r)_ijk``. The last layer holds
    ``(0, 0, 0)`` only and equals :func:`evaluate` exactly.
    """
    q, u, v = _prepare(net, p, q)
    if u.ndim:
        raise ValueError("evaluate_with_tableau takes a single point")
    n = net.degree
    qpow = _powers(q, n)
    grid = _initial_grid(net, u)
    layers = []
    for m in range(n, -1, -1):
        layer = {}
        for i, j, k in triples(m):
            val = grid[i, j]
            layer[(i, j, k)] = float(val) if val.ndim == 0 else val.copy()
        layers.append(layer)
        if m:
            grid = _step(grid, m, qpow, u, v)
    return layers


def evaluate_univariate(coeffs, t, q):
    """Evaluate ``sum c_i [n choose i]_q t**i prod_{s<n-i} (1 - q**s t)``.

    This is the same corner cutting restricted to the edge ``v = 0``:
    ``f_i <- q**k t f_{i+1} + (1 - q**k t) f_i`` with ``k = m - 1 - i``.
    ``coeffs[i]`` multiplies the function with ``t**i``; entries may be
    points.
    """
    q = float(check_q(q))
    f = np.array(coeffs, dtype=float)
    n = f.shape[0] - 1
    t = float(t)
    for m in range(n, 0, -1):
        new = np.empty((m,) + f.shape[1:])
        for i in range(m):
            qk = q ** (m - 1 - i)
            new[i] = qk * t * f[i + 1] + (1.0 - qk * t) * f[i]
        f = new
    result = f[0]
    return float(result) if result.ndim == 0 else result
