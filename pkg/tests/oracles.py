"""Reference implementations kept independent of the library code paths.

Everything here is written from the defining formulas: exact rational
arithmetic where cheap, the classical (q = 1) triangular Bernstein basis
and de Casteljau algorithm, and the univariate q-Bernstein basis.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

import numpy as np

SWEEP_Q = (0.1, 0.5, 0.9, 1.0)


def exact_q_integer(r, q: Fraction) -> Fraction:
    # closed quotient, deliberately not the summation used by the library
    if q == 1:
        return Fraction(r)
    return (1 - q**r) / (1 - q)


def exact_q_binomial(i, j, q: Fraction) -> Fraction:
    if j < 0 or i < j:
        return Fraction(0)
    num = Fraction(1)
    for s in range(i - j + 1, i + 1):
        num *= exact_q_integer(s, q)
    den = Fraction(1)
    for s in range(1, j + 1):
        den *= exact_q_integer(s, q)
    return num / den


def exact_basis(n, idx, u, v, q) -> Fraction:
    i, j, k = idx
    u, v, q = Fraction(u), Fraction(v), Fraction(q)
    prod = Fraction(1)
    for s in range(k):
        prod *= 1 - q**s * u - q**s * v
    return exact_q_binomial(n, k, q) * comb(i + j, i) * u**i * v**j * prod


def all_triples(n):
    return [(i, j, n - i - j) for i in range(n + 1) for j in range(n + 1 - i)]


def classical_bernstein(n, idx, u, v) -> float:
    i, j, k = idx
    w = 1.0 - u - v
    return factorial(n) / (factorial(i) * factorial(j) * factorial(k)) * u**i * v**j * w**k


def classical_de_casteljau(coeffs: dict, n, u, v) -> list[dict]:
    """Classical triangular de Casteljau tableau (weights u, v, w)."""
    w = 1.0 - u - v
    layers = [{t: np.asarray(coeffs[t], dtype=float) for t in all_triples(n)}]
    for r in range(1, n + 1):
        prev = layers[-1]
        layers.append(
            {
                (i, j, k): u * prev[(i + 1, j, k)] + v * prev[(i, j + 1, k)] + w * prev[(i, j, k + 1)]
                for i, j, k in all_triples(n - r)
            }
        )
    return layers


def classical_elevate(coeffs: dict, n) -> dict:
    """Classical triangular degree elevation (i b_{i-1} + j b_{j-1} + k b_{k-1}) / (n+1)."""
    out = {}
    for i, j, k in all_triples(n + 1):
        acc = 0.0
        if i:
            acc += i * coeffs[(i - 1, j, k)]
        if j:
            acc += j * coeffs[(i, j - 1, k)]
        if k:
            acc += k * coeffs[(i, j, k - 1)]
        out[(i, j, k)] = acc / (n + 1)
    return out


def phillips_basis(n, i, t, q) -> float:
    """Univariate q-Bernstein function ``[n choose i] t^i prod_{s<n-i} (1 - q^s t)``."""
    qb = float(exact_q_binomial(n, i, Fraction(q).limit_denominator(10**12)))
    prod = 1.0
    for s in range(n - i):
        prod *= 1.0 - q**s * t
    return qb * t**i * prod


def phillips_sum(coeffs, t, q):
    n = len(coeffs) - 1
    return sum(np.asarray(c, dtype=float) * phillips_basis(n, i, t, q) for i, c in enumerate(coeffs))


def exactly_in_triangle(p) -> bool:
    """``u, v >= 0`` and ``u + v <= 1`` in exact arithmetic (float sums can round down)."""
    return p[0] >= 0 and p[1] >= 0 and Fraction(p[0]) + Fraction(p[1]) <= 1


def in_triangle_points():
    from hypothesis import strategies as st

    return st.tuples(st.floats(0, 1), st.floats(0, 1)).filter(exactly_in_triangle)


def random_triangle_points(rng, count):
    """Uniform points of the parameter triangle (reflection sampling)."""
    pts = rng.random((count, 2))
    flip = pts.sum(axis=1) > 1.0
    pts[flip] = 1.0 - pts[flip]
    return [(float(u), float(v)) for u, v in pts]
