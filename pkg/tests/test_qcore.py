from fractions import Fraction
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qbezier.qcore import MAX_FLOAT_DEGREE, QParam, q_binomial, q_factorial, q_integer

from oracles import exact_q_binomial, exact_q_integer

RECURRENCE_Q = (0.1, 0.5, 0.9, 1.0)


def rel_close(a, b, rtol):
    return abs(a - b) <= rtol * max(abs(a), abs(b))


class TestQParam:
    @pytest.mark.parametrize("q", [0.0, -0.5, 1.0000001, 2.0, float("nan")])
    def test_rejects_outside_unit_interval(self, q):
        with pytest.raises(ValueError):
            QParam(q)

    @pytest.mark.parametrize("q", [1e-9, 0.5, 1.0])
    def test_accepts(self, q):
        assert QParam(q) == q

    def test_functions_validate(self):
        with pytest.raises(ValueError):
            q_integer(3, 1.5)
        with pytest.raises(ValueError):
            q_binomial(3, 1, 0)


def test_q_integer_examples():
    assert q_integer(5, 1.0) == 5
    assert q_integer(0, 0.5) == 0
    assert q_integer(3, 0.5) == 1.75


def test_q_factorial_examples():
    assert q_factorial(4, 1.0) == 24
    assert q_factorial(0, 0.3) == 1
    assert q_factorial(3, 0.5) == 2.625


def test_q_binomial_examples():
    assert q_binomial(4, 2, 1.0) == 6
    assert q_binomial(2, 3, 0.5) == 0
    assert q_binomial(3, 1, 0.5) == 1.75
    # exact oracle values
    assert q_binomial(5, 2, 0.5) == pytest.approx(155 / 64, rel=1e-15)
    assert q_binomial(6, 3, 1 / 3) == pytest.approx(33880 / 19683, rel=1e-14)


@pytest.mark.parametrize("i,j", [(-1, 0), (0, -1), (-3, -5), (3, 4)])
def test_q_binomial_out_of_range_is_zero(i, j):
    assert q_binomial(i, j, 0.7) == 0.0


def test_exact_path_matches_closed_quotient():
    for q in (Fraction(1, 3), Fraction(1, 2), Fraction(9, 10), Fraction(1)):
        for i in range(13):
            assert q_integer(i, q) == exact_q_integer(i, q)
            for j in range(i + 1):
                assert q_binomial(i, j, q) == exact_q_binomial(i, j, q)


@given(st.integers(0, 40), st.floats(0.01, 0.99))
def test_summation_agrees_with_closed_form(r, q):
    assert q_integer(r, q) == pytest.approx((1 - q**r) / (1 - q), rel=1e-13)


@pytest.mark.parametrize("q", RECURRENCE_Q)
def test_recurrences(q):
    for i in range(1, 21):
        for j in range(i + 1):
            lhs = q_binomial(i, j, q)
            first = q_binomial(i - 1, j - 1, q) + q**j * q_binomial(i - 1, j, q)
            second = q ** (i - j) * q_binomial(i - 1, j - 1, q) + q_binomial(i - 1, j, q)
            assert rel_close(lhs, first, 1e-13)
            assert rel_close(lhs, second, 1e-13)


@pytest.mark.parametrize("q", RECURRENCE_Q)
def test_symmetry_and_positivity(q):
    for i in range(21):
        for j in range(i + 1):
            val = q_binomial(i, j, q)
            assert val > 0
            assert rel_close(val, q_binomial(i, i - j, q), 1e-13)


def test_q_one_is_classical_binomial_exactly():
    for i in range(21):
        for j in range(i + 1):
            assert q_binomial(i, j, 1.0) == comb(i, j)


def test_float_degree_cap():
    q_factorial(MAX_FLOAT_DEGREE, 0.9)
    with pytest.raises(OverflowError):
        q_factorial(MAX_FLOAT_DEGREE + 1, 0.9)
    with pytest.raises(OverflowError):
        q_binomial(MAX_FLOAT_DEGREE + 5, 2, 1.0)
    # the exact path has no cap
    assert q_factorial(MAX_FLOAT_DEGREE + 1, Fraction(1)) > 0
