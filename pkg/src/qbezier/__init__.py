"""Triangular q-Bernstein bases and q-Bezier triangular patches."""
from .decasteljau import convex_weights, evaluate, evaluate_univariate, evaluate_with_tableau
from .elevation import (
    REFERENCE_TRIANGLE,
    TriangleGeometry,
    degree_elevate,
    elevate_to,
    monomial_to_qbernstein,
)
from .net import CoefficientNet, ControlNet3D, TriangularNet, net_size, triples
from .patch import (
    TessellationMesh,
    barycentric_from_cartesian,
    boundary_curve,
    figure4_net,
    figure5_net,
    patch_eval,
    tessellate,
)
from .qcore import QParam, q_binomial, q_factorial, q_integer
from .stability import (
    compare_conditioning,
    condition_number,
    product_expansion,
    qbernstein_to_bernstein_matrix,
    sup_norm_estimate,
    to_bernstein,
    to_qbernstein,
)
from .tribasis import (
    basis_eval_all,
    basis_eval_direct,
    basis_eval_rec_a,
    basis_eval_rec_b,
    basis_sample_grid,
    basis_vector,
    in_triangle,
)

__version__ = "0.1.0"
