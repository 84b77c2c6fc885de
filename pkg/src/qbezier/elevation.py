"""Degree elevation and monomial to q-Bernstein conversion."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .net import TriangularNet, triples
from .qcore import check_q, q_integer


@dataclass(frozen=True)
class TriangleGeometry:
    """A nondegenerate triangle ``<T1, T2, T3>`` in the plane."""

    T1: tuple[float, float]
    T2: tuple[float, float]
    T3: tuple[float, float]

    def __post_init__(self):
        for name in ("T1", "T2", "T3"):
            object.__setattr__(self, name, tuple(float(c) for c in getattr(self, name)))
        if self.signed_area() == 0.0:
            raise ValueError(f"degenerate triangle {self.T1}, {self.T2}, {self.T3}")

    def signed_area(self) -> float:
        (x1, y1), (x2, y2), (x3, y3) = self.T1, self.T2, self.T3
        return 0.5 * ((x1 - x3) * (y2 - y3) - (x2 - x3) * (y1 - y3))

    def to_cartesian(self, u, v):
        """Point ``u T1 + v T2 + (1 - u - v) T3``."""
        w = 1.0 - u - v
        x = u * self.T1[0] + v * self.T2[0] + w * self.T3[0]
        y = u * self.T1[1] + v * self.T2[1] + w * self.T3[1]
        return x, y


REFERENCE_TRIANGLE = TriangleGeometry((1.0, 0.0), (0.0, 1.0), (0.0, 0.0))


def _elevation_step(net: TriangularNet, q: float, wu, wv, ww) -> TriangularNet:
    """Shared degree ``n -> n+1`` step.

    The target entry ``(i, j, k)`` is
    ``[n+1-k]/[n+1] * (i/(i+j) * wu(k) * b[i-1,j,k] + j/(i+j) * wv(k) * b[i,j-1,k])
    + [k]/[n+1] * ww * b[i,j,k-1]``. Plain elevation uses ``wu = wv = q**k``,
    ``ww = 1``.
    """
    n = net.degree
    src = net.values
    pos = {t: p for p, t in enumerate(triples(n))}
    qint = [q_integer(r, q) for r in range(n + 2)]
    out = np.zeros((len(triples(n + 1)),) + net.value_shape)
    for p, (i, j, k) in enumerate(triples(n + 1)):
        acc = 0.0
        side = qint[n + 1 - k] / qint[n + 1]
        if i > 0:
            acc = acc + side * (i / (i + j)) * wu(k) * src[pos[(i - 1, j, k)]]
        if j > 0:
            acc = acc + side * (j / (i + j)) * wv(k) * src[pos[(i, j - 1, k)]]
        if k > 0:
            acc = acc + (qint[k] / qint[n + 1]) * ww * src[pos[(i, j, k - 1)]]
        out[p] = acc
    return TriangularNet(n + 1, out)


def degree_elevate(net: TriangularNet, q) -> TriangularNet:
    """Represent the same polynomial in the degree ``n + 1`` basis."""
    q = float(check_q(q))
    return _elevation_step(net, q, lambda k: q**k, lambda k: q**k, 1.0)


def elevate_to(net: TriangularNet, m: int, q) -> TriangularNet:
    """Elevate step by step to degree ``m``; ``m < net.degree`` is an error."""
    if m < net.degree:
        raise ValueError(f"cannot elevate degree {net.degree} down to {m}")
    for _ in range(m - net.degree):
        net = degree_elevate(net, q)
    return net


def elevation_weight_sum(n: int, k: int, q) -> float:
    """``([n+1-k] q**k + [k]) / [n+1]``, identically one."""
    q = float(check_q(q))
    return (q_integer(n + 1 - k, q) * q**k + q_integer(k, q)) / q_integer(n + 1, q)


def multiply_by_linear(net: TriangularNet, c1: float, c2: float, c3: float, q) -> TriangularNet:
    """Multiply a representation by ``c1 u + c2 v + c3 (1 - u - v)``.

    The linear form is regrouped per term as
    ``(c1 - c3 + q**k c3) u + (c2 - c3 + q**k c3) v + c3 (1 - q**k u - q**k v)``
    so that each product lands in the degree ``n + 1`` basis.
    """
    q = float(check_q(q))
    return _elevation_step(
        net,
        q,
        lambda k: c1 - c3 + q**k * c3,
        lambda k: c2 - c3 + q**k * c3,
        c3,
    )


def monomial_to_qbernstein(
    alpha: int, beta: int, n: int, geom: TriangleGeometry, q
) -> TriangularNet:
    """Coefficients of ``x**alpha * y**beta`` in the degree ``n`` q-Bernstein basis.

    ``(x, y)`` is the Cartesian point with barycentric coordinates
    ``(u, v, 1-u-v)`` relative to ``geom``. x-factors are applied first,
    then y-factors, then the result is elevated to degree ``n``.
    """
    if alpha < 0 or beta < 0:
        raise ValueError("monomial exponents must be nonnegative")
    if alpha + beta > n:
        raise ValueError(f"x^{alpha} y^{beta} does not fit in degree {n}")
    if not isinstance(geom, TriangleGeometry):
        geom = TriangleGeometry(*geom)
    xs = [t[0] for t in (geom.T1, geom.T2, geom.T3)]
    ys = [t[1] for t in (geom.T1, geom.T2, geom.T3)]
    net = TriangularNet.constant(0, 1.0)
    for _ in range(alpha):
        net = multiply_by_linear(net, *xs, q)
    for _ in range(beta):
        net = multiply_by_linear(net, *ys, q)
    return elevate_to(net, n, q)


def monomial_exponents(n: int) -> list[tuple[int, int]]:
    """All ``(alpha, beta)`` with ``alpha + beta <= n``, by total degree."""
    return [(d - b, b) for d in range(n + 1) for b in range(d + 1)]


def monomial_conversion_matrix(n: int, geom: TriangleGeometry, q) -> np.ndarray:
    """Square matrix whose columns are the nets of every monomial of degree ``<= n``."""
    cols = [monomial_to_qbernstein(a, b, n, geom, q).values for a, b in monomial_exponents(n)]
    return np.column_stack(cols)


def spanning_margin(n: int, geom: TriangleGeometry, q) -> float:
    """Smallest singular value of the column-normalised conversion matrix.

    A positive margin shows the degree ``n`` basis spans every monomial,
    i.e. it is a basis of the polynomials of total degree ``<= n``.
    """
    mat = monomial_conversion_matrix(n, geom, q)
    mat = mat / np.linalg.norm(mat, axis=0)
    return float(np.linalg.svd(mat, compute_uv=False).min())
