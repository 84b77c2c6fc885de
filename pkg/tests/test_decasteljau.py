import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from qbezier.decasteljau import convex_weights, evaluate, evaluate_univariate, evaluate_with_tableau
from qbezier.net import TriangularNet, net_size, triples
from qbezier.tribasis import basis_eval_direct

from oracles import SWEEP_Q, classical_de_casteljau, in_triangle_points, phillips_sum, random_triangle_points

in_tri = in_triangle_points()
qs = st.floats(0.01, 1.0)


def random_net(rng, n, shape=()):
    return TriangularNet(n, rng.uniform(-1, 1, (net_size(n),) + shape))


def direct_sum(net, p, q):
    return sum(b * basis_eval_direct(net.degree, t, p, q) for t, b in net.items())


def abs_sum(net, p, q):
    return sum(abs(b) * basis_eval_direct(net.degree, t, p, q) for t, b in net.items())


class TestExamples:
    @pytest.mark.parametrize("n", [0, 1, 5, 9])
    def test_all_ones(self, n):
        assert evaluate(TriangularNet.constant(n), (0.2, 0.3), 0.37) == pytest.approx(1.0, abs=1e-15)

    def test_degree_one(self):
        net = TriangularNet.from_mapping(1, {(1, 0, 0): 2.0, (0, 1, 0): -3.0, (0, 0, 1): 5.0})
        assert evaluate(net, (0.3, 0.2), 0.6) == pytest.approx(0.3 * 2 - 0.2 * 3 + 0.5 * 5)

    def test_degree_three_random(self):
        net = random_net(np.random.default_rng(11), 3)
        assert evaluate(net, (0.2, 0.3), 0.5) == pytest.approx(direct_sum(net, (0.2, 0.3), 0.5), abs=1e-12)


class TestConvexWeights:
    def test_examples(self):
        assert convex_weights(0, (0.3, 0.2), 0.77) == pytest.approx((0.3, 0.2, 0.5))
        assert convex_weights(2, (0.4, 0.4), 0.5) == pytest.approx((0.1, 0.1, 0.8))
        assert convex_weights(1, (1.0, 0.0), 0.5) == (0.5, 0.0, 0.5)

    @given(in_tri, qs, st.integers(0, 12))
    def test_convex_in_triangle(self, p, q, k):
        w = convex_weights(k, p, q)
        assert min(w) >= 0.0
        assert abs(sum(w) - 1.0) <= 1e-15


class TestTableau:
    def test_degree_one(self):
        net = TriangularNet.from_mapping(1, {(1, 0, 0): 2.0, (0, 1, 0): 3.0, (0, 0, 1): 4.0})
        layers = evaluate_with_tableau(net, (0.1, 0.6), 0.5)
        assert list(layers[1]) == [(0, 0, 0)]
        assert layers[1][(0, 0, 0)] == pytest.approx(0.1 * 2 + 0.6 * 3 + 0.3 * 4)

    def test_all_ones_layers(self):
        for layer in evaluate_with_tableau(TriangularNet.constant(5), (0.25, 0.5), 0.3):
            for val in layer.values():
                assert val == pytest.approx(1.0, abs=1e-15)

    def test_shape_and_final_entry_exact(self):
        rng = np.random.default_rng(5)
        net = random_net(rng, 6)
        layers = evaluate_with_tableau(net, (0.3, 0.45), 0.6)
        assert len(layers) == 7
        for r, layer in enumerate(layers):
            assert list(layer) == list(triples(6 - r))
        assert layers[0] == net.to_dict()
        assert layers[-1][(0, 0, 0)] == evaluate(net, (0.3, 0.45), 0.6)

    @pytest.mark.parametrize("n", [2, 5, 8])
    def test_q_one_matches_classical(self, n):
        rng = np.random.default_rng(n)
        net = random_net(rng, n)
        for p in random_triangle_points(rng, 10):
            ours = evaluate_with_tableau(net, p, 1.0)
            ref = classical_de_casteljau(net.to_dict(), n, *p)
            for layer, ref_layer in zip(ours, ref):
                for t, val in layer.items():
                    assert abs(val - ref_layer[t]) <= 1e-13

    def test_rejects_array_points(self):
        with pytest.raises(ValueError):
            evaluate_with_tableau(TriangularNet.constant(2), (np.zeros(3), np.zeros(3)), 0.5)


@pytest.mark.parametrize("q", SWEEP_Q)
def test_oracle_equivalence(q):
    rng = np.random.default_rng(int(q * 100))
    for n in range(9):
        net = random_net(rng, n)
        for p in random_triangle_points(rng, 50):
            scale = abs_sum(net, p, q)
            assert abs(evaluate(net, p, q) - direct_sum(net, p, q)) <= 1e-12 * max(scale, 1e-300) + 1e-300


@given(in_tri, qs, st.integers(0, 8), st.integers(0, 2**32 - 1))
def test_range_bound_and_affine_invariance(p, q, n, seed):
    net = random_net(np.random.default_rng(seed), n)
    val = evaluate(net, p, q)
    lo, hi = net.values.min(), net.values.max()
    spread = hi - lo
    assert lo - 1e-12 * spread <= val <= hi + 1e-12 * spread
    alpha, beta = -2.5, 0.75
    assert evaluate(net.map(lambda x: alpha * x + beta), p, q) == pytest.approx(alpha * val + beta, abs=1e-12)


@pytest.mark.parametrize("q", [0.05, 0.5, 1.0])
def test_corner_interpolation(q):
    rng = np.random.default_rng(2)
    for n in range(1, 9):
        net = random_net(rng, n)
        assert abs(evaluate(net, (1.0, 0.0), q) - net[(n, 0, 0)]) <= 1e-13
        assert abs(evaluate(net, (0.0, 1.0), q) - net[(0, n, 0)]) <= 1e-13
        assert abs(evaluate(net, (0.0, 0.0), q) - net[(0, 0, n)]) <= 1e-13


def test_point_valued_and_vectorised():
    rng = np.random.default_rng(9)
    net = random_net(rng, 4, (3,))
    pts = random_triangle_points(rng, 6)
    u = np.array([p[0] for p in pts])
    v = np.array([p[1] for p in pts])
    batch = evaluate(net, (u, v), 0.4)
    assert batch.shape == (6, 3)
    for c, p in enumerate(pts):
        single = evaluate(net, p, 0.4)
        np.testing.assert_array_equal(batch[c], single)
        for axis in range(3):
            comp = TriangularNet(4, net.values[:, axis])
            assert single[axis] == evaluate(comp, p, 0.4)


def test_outside_triangle_matches_polynomial():
    net = random_net(np.random.default_rng(4), 4)
    p = (1.3, -0.6)
    assert evaluate(net, p, 0.5) == pytest.approx(direct_sum(net, p, 0.5), abs=1e-11)


class TestUnivariate:
    def test_all_ones(self):
        assert evaluate_univariate([1.0] * 6, 0.35, 0.4) == pytest.approx(1.0, abs=1e-15)

    def test_degree_one(self):
        assert evaluate_univariate([2.0, 7.0], 0.25, 0.3) == pytest.approx(0.25 * 7 + 0.75 * 2)

    def test_degree_three(self):
        coeffs = np.random.default_rng(1).uniform(-1, 1, 4)
        assert abs(evaluate_univariate(coeffs, 0.4, 0.6) - phillips_sum(coeffs, 0.4, 0.6)) <= 1e-12

    @pytest.mark.parametrize("q", SWEEP_Q)
    def test_matches_edge_of_triangle(self, q):
        rng = np.random.default_rng(6)
        for n in range(9):
            net = random_net(rng, n)
            coeffs = [net[(i, 0, n - i)] for i in range(n + 1)]
            for t in rng.random(10):
                edge = evaluate(net, (t, 0.0), q)
                assert abs(evaluate_univariate(coeffs, t, q) - edge) <= 1e-12
                assert abs(phillips_sum(coeffs, t, q) - edge) <= 1e-12
