"""Change of basis to the classical triangular Bernstein basis and conditioning.

The q-Bernstein functions expand with nonnegative coefficients in the
classical Bernstein basis, which makes the classical basis the better
conditioned of the two at every point of the triangle.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, factorial

import numpy as np

from .decasteljau import evaluate
from .net import TriangularNet, net_size, triple_positions, triples
from .qcore import check_q, q_binomial
from .tribasis import basis_vector, grid_points

#: Default grid resolution for the sup-norm surrogate.
SUP_NORM_RESOLUTION = 64


class SingularConversionError(np.linalg.LinAlgError):
    def __init__(self, cond: float):
        super().__init__(f"change of basis is numerically singular (cond ~ {cond:.3e})")
        self.cond = cond


def product_expansion(r: int, q) -> dict:
    """Coefficients ``c^r_ijk`` with
    ``prod_{s<r} (1 - q**s u - q**s v) = sum c^r_ijk u**i v**j (1-u-v)**k``.

    Built level by level from
    ``1 - q**t u - q**t v = (1-u-v) + (1-q**t) u + (1-q**t) v``;
    only nonnegative quantities are ever added, so the result is
    nonnegative to the last bit for ``0 < q <= 1``.
    """
    if r < 0:
        raise ValueError(f"order must be nonnegative, got {r}")
    q = float(check_q(q))
    coeffs = {(0, 0, 0): 1.0}
    qt = 1.0
    for t in range(r):
        d = 1.0 - qt
        nxt = {}
        for i, j, k in triples(t + 1):
            val = coeffs.get((i, j, k - 1), 0.0)
            val += d * coeffs.get((i - 1, j, k), 0.0)
            val += d * coeffs.get((i, j - 1, k), 0.0)
            nxt[(i, j, k)] = val
        coeffs = nxt
        qt *= q
    return coeffs


def bernstein_vector(n: int, u, v) -> np.ndarray:
    """Classical triangular Bernstein values ``n!/(i!j!k!) u**i v**j w**k``."""
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    w = 1.0 - u - v
    # incremental powers, same rounding as basis_vector at q = 1
    upow, vpow, wpow = [np.ones_like(u)], [np.ones_like(v)], [np.ones_like(w)]
    for _ in range(n):
        upow.append(upow[-1] * u)
        vpow.append(vpow[-1] * v)
        wpow.append(wpow[-1] * w)
    out = np.empty((net_size(n),) + u.shape)
    for pos, (i, j, k) in enumerate(triples(n)):
        out[pos] = float(multinomial(n, i, j, k)) * upow[i] * vpow[j] * wpow[k]
    return out


def multinomial(n: int, i: int, j: int, k: int) -> int:
    return factorial(n) // (factorial(i) * factorial(j) * factorial(k))


@dataclass(frozen=True)
class BasisMatrix:
    """Change of basis ``A`` with ``B^n_col = sum_row A[row, col] b^n_row``.

    Rows index classical Bernstein functions, columns q-Bernstein ones,
    both in canonical triple order. Rows sum to one.
    """

    degree: int
    entries: np.ndarray

    @property
    def index(self):
        return triples(self.degree)


def qbernstein_to_bernstein_matrix(n: int, q) -> BasisMatrix:
    q = float(check_q(q))
    pos = triple_positions(n)
    size = net_size(n)
    A = np.zeros((size, size))
    expansions = [product_expansion(k, q) for k in range(n + 1)]
    for col, (i, j, k) in enumerate(triples(n)):
        scale = q_binomial(n, k, q) * comb(i + j, i)
        for (r, s, t), c in expansions[k].items():
            row = pos[(i + r, j + s, t)]
            A[row, col] = c * scale / multinomial(n, i + r, j + s, t)
    return BasisMatrix(n, A)


def to_bernstein(net: TriangularNet, q) -> TriangularNet:
    """Classical Bernstein coefficients of the q-Bernstein representation ``net``."""
    A = qbernstein_to_bernstein_matrix(net.degree, q).entries
    return TriangularNet(net.degree, np.tensordot(A, net.values, axes=(1, 0)))


def to_qbernstein(net: TriangularNet, q, max_cond: float = 1e12) -> TriangularNet:
    """Inverse of :func:`to_bernstein`: solve ``A c = d`` for ``c``."""
    A = qbernstein_to_bernstein_matrix(net.degree, q).entries
    cond = float(np.linalg.cond(A))
    if not np.isfinite(cond) or cond > max_cond:
        raise SingularConversionError(cond)
    return TriangularNet(net.degree, np.linalg.solve(A, net.values))


def condition_number(basis_values, coeffs, sup_norm_f: float) -> float:
    """``sum_i |c_i| u_i(x) / ||f||_inf`` for nonnegative basis values ``u_i(x)``.

    ``basis_values`` and ``coeffs`` are matching sequences or mappings.
    """
    if not sup_norm_f > 0:
        raise ValueError(f"sup norm must be positive, got {sup_norm_f}")
    if isinstance(basis_values, dict):
        total = sum(abs(coeffs[key]) * val for key, val in basis_values.items())
    else:
        total = float(np.sum(np.abs(np.asarray(coeffs)) * np.asarray(basis_values)))
    return total / sup_norm_f


def sup_norm_estimate(net: TriangularNet, basis: str, q, m: int = SUP_NORM_RESOLUTION) -> float:
    """Max of ``|f|`` over the barycentric grid of resolution ``m``.

    ``basis`` is ``"classical"`` or ``"q"``. This is a lower bound of the
    true sup norm.
    """
    if basis == "classical":
        q = 1.0
    elif basis != "q":
        raise ValueError(f"basis must be 'classical' or 'q', got {basis!r}")
    pts = np.array(grid_points(m))
    vals = evaluate(net, (pts[:, 0], pts[:, 1]), q)
    return float(np.max(np.abs(vals)))


@dataclass
class ConditioningReport:
    """Per-point condition numbers in both bases.

    ``ratios`` holds ``cond_bernstein / cond_q``; a point where both are
    zero gets ratio 1. ``defined`` is False for the zero function, in which
    case the per-point lists are filled with ``nan``.
    """

    points: list
    cond_bernstein: list = field(default_factory=list)
    cond_q: list = field(default_factory=list)
    ratios: list = field(default_factory=list)
    sup_norm: float = 0.0
    defined: bool = True
    tol: float = 1e-10

    @property
    def max_ratio(self) -> float:
        return max(self.ratios) if self.defined and self.ratios else float("nan")

    @property
    def holds(self) -> bool:
        """Classical conditioning no worse than q conditioning at every point."""
        return self.defined and all(r <= 1.0 + self.tol for r in self.ratios)


def compare_conditioning(
    net: TriangularNet, q, points, m: int = SUP_NORM_RESOLUTION, tol: float = 1e-10
) -> ConditioningReport:
    """Compare conditioning of ``net`` (q-Bernstein) and its classical form."""
    if net.is_points:
        raise ValueError("conditioning is defined for scalar nets")
    q = float(check_q(q))
    points = [(float(u), float(v)) for u, v in points]
    report = ConditioningReport(points=points, tol=tol)
    classical = to_bernstein(net, q)
    sup = sup_norm_estimate(net, "q", q, m)
    report.sup_norm = sup
    if sup == 0.0:
        report.defined = False
        nan = float("nan")
        report.cond_bernstein = [nan] * len(points)
        report.cond_q = [nan] * len(points)
        report.ratios = [nan] * len(points)
        return report
    for u, v in points:
        cb = condition_number(bernstein_vector(net.degree, u, v), classical.values, sup)
        cq = condition_number(basis_vector(net.degree, u, v, q), net.values, sup)
        report.cond_bernstein.append(cb)
        report.cond_q.append(cq)
        report.ratios.append(cb / cq if cq > 0 else 1.0)
    return report
