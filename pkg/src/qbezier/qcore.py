"""q-integers, q-factorials and q-binomial (Gaussian) coefficients.

All functions accept either a float ``q`` or a :class:`fractions.Fraction`.
With a ``Fraction`` the arithmetic stays exact, which is what the test
oracles rely on; with a float the usual double precision rules apply.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational

#: Largest degree the floating point factorial path accepts.
MAX_FLOAT_DEGREE = 60


class QParam(float):
    """Shape parameter ``q`` restricted to the interval ``(0, 1]``.

    A thin ``float`` subclass, so it can be passed anywhere a float is
    expected once validated.
    """

    def __new__(cls, q):
        q = float(q)
        if not (0.0 < q <= 1.0):
            raise ValueError(f"q must lie in (0, 1], got {q!r}")
        return super().__new__(cls, q)


def check_q(q):
    """Validate ``q`` and return it unchanged in kind (float or Fraction)."""
    if isinstance(q, Rational) and not isinstance(q, int):
        if not (0 < q <= 1):
            raise ValueError(f"q must lie in (0, 1], got {q!r}")
        return Fraction(q)
    return QParam(q)


def _is_exact(q) -> bool:
    return isinstance(q, Fraction)


def q_integer(r: int, q) -> float:
    """Return ``[r] = 1 + q + ... + q**(r-1)``.

    Computed by direct summation so that ``q == 1`` gives ``r`` without a
    0/0 quotient. ``[0] == 0``.
    """
    if r < 0:
        raise ValueError(f"r must be nonnegative, got {r}")
    q = check_q(q)
    one = Fraction(1) if _is_exact(q) else 1.0
    total = 0 * one
    power = one
    for _ in range(r):
        total += power
        power *= q
    return total


def q_factorial(r: int, q) -> float:
    """Return ``[r]! = [r][r-1]...[1]`` with ``[0]! == 1``.

    Raises ``OverflowError`` for ``r > MAX_FLOAT_DEGREE`` on the float
    path; the exact path has no cap.
    """
    if r < 0:
        raise ValueError(f"r must be nonnegative, got {r}")
    q = check_q(q)
    if not _is_exact(q) and r > MAX_FLOAT_DEGREE:
        raise OverflowError(
            f"q-factorial degree {r} exceeds the float limit {MAX_FLOAT_DEGREE}"
        )
    result = Fraction(1) if _is_exact(q) else 1.0
    for s in range(1, r + 1):
        result *= q_integer(s, q)
    return result


def q_binomial(i: int, j: int, q) -> float:
    """Gaussian binomial ``[i]! / ([j]! [i-j]!)``; zero unless ``i >= j >= 0``."""
    q = check_q(q)
    if j < 0 or i < j:
        return Fraction(0) if _is_exact(q) else 0.0
    return q_factorial(i, q) / (q_factorial(j, q) * q_factorial(i - j, q))


def q_binomial_row(n: int, q) -> list:
    """All ``q_binomial(n, k, q)`` for ``k = 0..n``."""
    return [q_binomial(n, k, q) for k in range(n + 1)]
