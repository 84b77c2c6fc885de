"""Triangular q-Bernstein basis functions ``B^n_ijk(u, v)``.

``B^n_ijk(u, v) = [n choose k]_q * C(i+j, i) * u**i * v**j *
prod_{s<k} (1 - q**s u - q**s v)``.

Three independent evaluation routes are provided (closed form and two
recurrences) plus a single-pass evaluator for the whole basis. The
functions are polynomials, so any real ``(u, v)`` is accepted;
:func:`in_triangle` tells whether a point lies in the parameter triangle.
"""
from __future__ import annotations

from math import comb

import numpy as np

from .net import check_triple, net_size, triples
from .qcore import check_q, q_binomial


def in_triangle(u: float, v: float, tol: float = 0.0) -> bool:
    """True when ``u, v >= 0`` and ``u + v <= 1`` (up to ``tol``)."""
    return u >= -tol and v >= -tol and u + v <= 1.0 + tol


def basis_eval_direct(n: int, idx, p, q) -> float:
    """Evaluate ``B^n_ijk`` at ``p = (u, v)`` from its closed form."""
    i, j, k = check_triple(idx, n)
    q = check_q(q)
    u, v = p
    prod = 1.0
    qs = 1.0
    for _ in range(k):
        prod *= 1.0 - qs * u - qs * v
        qs *= q
    return q_binomial(n, k, q) * comb(i + j, i) * u**i * v**j * prod


def _recursive(n, idx, p, q, combine):
    u, v = p
    memo: dict = {}

    def b(m, i, j, k):
        if i < 0 or j < 0 or k < 0:
            return 0.0
        if m == 0:
            return 1.0
        key = (i, j, k)
        if key not in memo:
            memo[key] = combine(m, i, j, k, u, v, b)
        return memo[key]

    i, j, k = check_triple(idx, n)
    return b(n, i, j, k)


def basis_eval_rec_a(n: int, idx, p, q) -> float:
    """Evaluate ``B^n_ijk`` by the recurrence

    ``B^n_ijk = u B^{n-1}_{i-1,j,k} + v B^{n-1}_{i,j-1,k}
    + (q**(i+j) - q**(n-1) u - q**(n-1) v) B^{n-1}_{i,j,k-1}``.

    Used as a cross-check only: its weights do not sum to one.
    """
    q = check_q(q)

    def combine(m, i, j, k, u, v, b):
        third = q ** (i + j) - q ** (m - 1) * u - q ** (m - 1) * v
        return (
            u * b(m - 1, i - 1, j, k)
            + v * b(m - 1, i, j - 1, k)
            + third * b(m - 1, i, j, k - 1)
        )

    return _recursive(n, idx, p, q, combine)


def basis_eval_rec_b(n: int, idx, p, q) -> float:
    """Evaluate ``B^n_ijk`` by the recurrence

    ``B^n_ijk = q**k u B^{n-1}_{i-1,j,k} + q**k v B^{n-1}_{i,j-1,k}
    + (1 - q**(k-1) u - q**(k-1) v) B^{n-1}_{i,j,k-1}``.
    """
    q = check_q(q)

    def combine(m, i, j, k, u, v, b):
        qk = q**k
        qk1 = q ** (k - 1) if k > 0 else 0.0  # multiplies B with index k-1 < 0
        return (
            qk * u * b(m - 1, i - 1, j, k)
            + qk * v * b(m - 1, i, j - 1, k)
            + (1.0 - qk1 * u - qk1 * v) * b(m - 1, i, j, k - 1)
        )

    return _recursive(n, idx, p, q, combine)


def basis_vector(n: int, u, v, q) -> np.ndarray:
    """All ``B^n_ijk(u, v)`` in canonical triple order.

    ``u`` and ``v`` may be arrays of equal shape; the result then has shape
    ``(net_size(n),) + u.shape``.
    """
    q = check_q(q)
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    upow = [np.ones_like(u)]
    vpow = [np.ones_like(v)]
    for _ in range(n):
        upow.append(upow[-1] * u)
        vpow.append(vpow[-1] * v)
    # prods[k] = prod_{s<k} (1 - q^s u - q^s v), built one factor per level
    prods = [np.ones_like(u)]
    qs = 1.0
    for _ in range(n):
        prods.append(prods[-1] * (1.0 - qs * u - qs * v))
        qs *= q
    qbin = [q_binomial(n, k, q) for k in range(n + 1)]
    out = np.empty((net_size(n),) + u.shape)
    for pos, (i, j, k) in enumerate(triples(n)):
        out[pos] = qbin[k] * comb(i + j, i) * upow[i] * vpow[j] * prods[k]
    return out


def basis_eval_all(n: int, p, q) -> dict:
    """Map every triple of degree ``n`` to ``B^n_ijk(p)``."""
    values = basis_vector(n, p[0], p[1], q)
    return {t: float(b) for t, b in zip(triples(n), values)}


def grid_points(m: int) -> list[tuple[float, float]]:
    """Uniform barycentric grid ``(a/m, b/m)``, ``a + b <= m``; ``a`` outer."""
    if m < 1:
        raise ValueError(f"grid resolution must be >= 1, got {m}")
    return [(a / m, b / m) for a in range(m + 1) for b in range(m + 1 - a)]


def basis_sample_grid(n: int, idx, q, m: int) -> list[tuple[float, float, float]]:
    """Sample ``B^n_ijk`` on :func:`grid_points` ``(m)`` as ``(u, v, value)``."""
    idx = check_triple(idx, n)
    return [(u, v, basis_eval_direct(n, idx, (u, v), q)) for u, v in grid_points(m)]
