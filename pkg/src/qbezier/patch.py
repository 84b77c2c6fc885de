"""q-Bezier triangular patches: evaluation, boundary curves and tessellation."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.spatial import ConvexHull, QhullError

from .decasteljau import evaluate
from .elevation import TriangleGeometry
from .net import TriangularNet
from .tribasis import grid_points

EDGES = ("v=0", "u=0", "w=0")

#: Control points of the two cubic example patches, keyed by (i, j, k).
FIGURE4_POINTS = {
    (3, 0, 0): (0.0, 0.0, 0.0),
    (2, 1, 0): (0.0, 1 / 3, 0.0),
    (1, 2, 0): (0.0, 2 / 3, 0.5),
    (0, 3, 0): (0.0, 1.0, 1.0),
    (2, 0, 1): (1 / 3, 0.0, 0.0),
    (1, 1, 1): (1 / 3, 1 / 3, 0.0),
    (0, 2, 1): (1 / 3, 2 / 3, 0.0),
    (1, 0, 2): (2 / 3, 0.0, 0.5),
    (0, 1, 2): (2 / 3, 1 / 3, 0.0),
    (0, 0, 3): (1.0, 0.0, 1.0),
}

FIGURE5_POINTS = {
    (3, 0, 0): (0.0, 0.0, 0.0),
    (2, 1, 0): (0.0, 1 / 3, 1.0),
    (1, 2, 0): (0.0, 2 / 3, 0.0),
    (0, 3, 0): (0.0, 1.0, 1.0),
    (2, 0, 1): (1 / 3, 0.0, 1.0),
    (1, 1, 1): (1 / 3, 1 / 3, 0.0),
    (0, 2, 1): (1 / 3, 2 / 3, 2.0),
    (1, 0, 2): (2 / 3, 0.0, 0.0),
    (0, 1, 2): (2 / 3, 1 / 3, 0.0),
    (0, 0, 3): (1.0, 0.0, 1.0),
}


def figure4_net() -> TriangularNet:
    return TriangularNet.from_mapping(3, FIGURE4_POINTS)


def figure5_net() -> TriangularNet:
    return TriangularNet.from_mapping(3, FIGURE5_POINTS)


def barycentric_from_cartesian(geom: TriangleGeometry, P) -> tuple[float, float]:
    """``(u, v)`` with ``P = u T1 + v T2 + (1 - u - v) T3``."""
    if not isinstance(geom, TriangleGeometry):
        geom = TriangleGeometry(*geom)
    (x1, y1), (x2, y2), (x3, y3) = geom.T1, geom.T2, geom.T3
    mat = np.array([[x1 - x3, x2 - x3], [y1 - y3, y2 - y3]])
    rhs = np.array([P[0] - x3, P[1] - y3])
    u, v = np.linalg.solve(mat, rhs)
    return float(u), float(v)


def patch_eval(net: TriangularNet, p, q) -> np.ndarray:
    """Point of the patch at parameter ``p = (u, v)``, evaluated componentwise."""
    if net.value_shape != (3,):
        raise ValueError(f"expected a 3D control net, got value shape {net.value_shape}")
    return evaluate(net, p, q)


def boundary_curve(net: TriangularNet, edge: str, t: float, q) -> np.ndarray:
    """Patch restricted to an edge of the parameter triangle.

    ``"v=0"`` runs ``(t, 0)``, ``"u=0"`` runs ``(0, t)`` and ``"w=0"`` runs
    ``(t, 1 - t)``.
    """
    if edge == "v=0":
        p = (t, 0.0)
    elif edge == "u=0":
        p = (0.0, t)
    elif edge == "w=0":
        p = (t, 1.0 - t)
    else:
        raise ValueError(f"unknown edge {edge!r}; expected one of {EDGES}")
    return patch_eval(net, p, q)


@dataclass
class TessellationMesh:
    vertices: np.ndarray  # (V, 3)
    faces: np.ndarray  # (F, 3), 0-based
    params: np.ndarray  # (V, 2), the (u, v) of each vertex

    def to_obj(self) -> str:
        lines = [f"v {x:.17g} {y:.17g} {z:.17g}" for x, y, z in self.vertices]
        lines += [f"f {a + 1} {b + 1} {c + 1}" for a, b, c in self.faces]
        return "\n".join(lines) + "\n"


def grid_faces(m: int) -> np.ndarray:
    """Triangles of the resolution-``m`` barycentric grid, ``m**2`` in total."""
    index = {}
    for a in range(m + 1):
        for b in range(m + 1 - a):
            index[(a, b)] = len(index)
    faces = []
    for a in range(m):
        for b in range(m - a):
            faces.append((index[(a, b)], index[(a + 1, b)], index[(a, b + 1)]))
            if a + b <= m - 2:
                faces.append((index[(a + 1, b)], index[(a + 1, b + 1)], index[(a, b + 1)]))
    return np.array(faces, dtype=int).reshape(-1, 3)


def tessellate(net: TriangularNet, q, m: int) -> TessellationMesh:
    """Evaluate the patch on the uniform grid and triangulate it."""
    params = np.array(grid_points(m))
    vertices = patch_eval(net, (params[:, 0], params[:, 1]), q)
    return TessellationMesh(vertices=vertices, faces=grid_faces(m), params=params)


def convex_hull_contains(hull_points, points, tol: float = 1e-12) -> np.ndarray:
    """Boolean mask: which ``points`` lie in the convex hull of ``hull_points``.

    Works for degenerate (flat, collinear) hulls by reducing to the affine
    span first; points off that span by more than ``tol`` are outside.
    """
    hull_points = np.asarray(hull_points, dtype=float)
    points = np.atleast_2d(np.asarray(points, dtype=float))
    origin = hull_points.mean(axis=0)
    centred = hull_points - origin
    _, sing, vt = np.linalg.svd(centred, full_matrices=False)
    scale = max(1.0, float(np.abs(hull_points).max()))
    rank = int(np.sum(sing > 1e-12 * scale))
    basis = vt[:rank]
    rel = points - origin
    inside = np.linalg.norm(rel - (rel @ basis.T) @ basis, axis=1) <= tol * scale
    if rank == 0:
        return inside
    hp = centred @ basis.T
    pp = rel @ basis.T
    if rank == 1:
        lo, hi = hp[:, 0].min(), hp[:, 0].max()
        return inside & (pp[:, 0] >= lo - tol * scale) & (pp[:, 0] <= hi + tol * scale)
    try:
        hull = ConvexHull(hp)
    except QhullError:
        hull = ConvexHull(hp, qhull_options="QJ")
    normals, offsets = hull.equations[:, :-1], hull.equations[:, -1]
    dist = pp @ normals.T + offsets
    return inside & np.all(dist <= tol * scale, axis=1)
