import itertools

import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from sepball.designs import (
    SUPPORTED_ORDERS,
    OrthogonalDesign,
    UnsupportedOrderError,
    all_passed,
    evaluate,
    make_design,
    verify_design,
)


def displayed_design4():
    x1, x2, x3, x4 = xs = sympy.symbols("x1:5")
    X = sympy.Matrix([
        [x4, -x3, x2, -x1],
        [x3, x4, -x1, -x2],
        [-x2, x1, x4, -x3],
        [x1, x2, x3, x4],
    ])
    return [np.array(X.diff(x), dtype=np.int64) for x in xs]


def test_design4_matches_displayed_matrix():
    d = make_design(4)
    for got, expected in zip(d.matrices, displayed_design4()):
        np.testing.assert_array_equal(got, expected)
    np.testing.assert_array_equal(d.matrices[3], np.eye(4))
    np.testing.assert_array_equal(d.matrices[0][:, 0], [0, 0, 0, 1])


def test_design1_and_design2():
    assert [m.tolist() for m in make_design(1).matrices] == [[[1]]]
    d2 = make_design(2)
    assert d2.matrices[0].tolist() == [[0, -1], [1, 0]]
    assert d2.matrices[1].tolist() == [[1, 0], [0, 1]]


@pytest.mark.parametrize("n", [0, 3, 5, 6, 16, -1])
def test_unsupported_order(n):
    with pytest.raises(UnsupportedOrderError):
        make_design(n)


@pytest.mark.parametrize("n", SUPPORTED_ORDERS)
def test_all_checks_pass(n):
    d = make_design(n)
    report = verify_design(d)
    assert all_passed(report), [c for c in report if not c.passed]
    assert d.rate == 1
    if n > 1:
        np.testing.assert_array_equal(d.matrices[-1], np.eye(n))


@pytest.mark.parametrize("n", SUPPORTED_ORDERS)
def test_similarity_random_vectors(n, rng):
    d = make_design(n)
    for _ in range(100):
        v = rng.standard_normal(n)
        u = evaluate(d, v)
        np.testing.assert_allclose(u.T @ u, (v @ v) * np.eye(n), atol=1e-12)


@pytest.mark.parametrize("n", SUPPORTED_ORDERS)
def test_unit_vectors_give_isometries(n, rng):
    d = make_design(n)
    for _ in range(1000):
        v = rng.standard_normal(n)
        v /= np.linalg.norm(v)
        w = rng.standard_normal(n)
        assert abs(np.linalg.norm(evaluate(d, v) @ w) - np.linalg.norm(w)) <= 1e-12 * max(1, np.linalg.norm(w))


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(-50, 50), min_size=8, max_size=8))
def test_similarity_exact_integer_vectors(v):
    d = make_design(8)
    u = evaluate(d, np.array(v, dtype=object))
    np.testing.assert_array_equal(u.T.dot(u), sum(x * x for x in v) * np.eye(8, dtype=np.int64))


def test_evaluate_basis_and_zero():
    d = make_design(4)
    np.testing.assert_array_equal(evaluate(d, [0, 0, 0, 1]), np.eye(4))
    np.testing.assert_array_equal(evaluate(d, np.zeros(4)), np.zeros((4, 4)))


def test_evaluate_half_sum_exact():
    d = make_design(4)
    u = evaluate(d, np.array([1, 1, 0, 0], dtype=object))
    # U(v)^T U(v) = |v|^2 I = 2 I, i.e. I after the 1/sqrt(2) scaling
    np.testing.assert_array_equal(u.T.dot(u), 2 * np.eye(4, dtype=np.int64))


def test_evaluate_dimension_mismatch():
    with pytest.raises(ValueError):
        evaluate(make_design(4), [1, 0, 0])


def test_quaternion_relations():
    U = make_design(4).matrices
    I = np.eye(4, dtype=np.int64)
    for k, l in itertools.permutations(range(3), 2):
        np.testing.assert_array_equal(U[k] @ U[l], -(U[l] @ U[k]))
    for k in range(3):
        np.testing.assert_array_equal(U[k] @ U[k], -I)
    for k1, k2, k3 in [(0, 1, 2), (1, 2, 0), (2, 0, 1)]:
        np.testing.assert_array_equal(U[k1] @ U[k2], U[k3])


@pytest.mark.parametrize("n", SUPPORTED_ORDERS)
def test_total_nonzero_count(n):
    assert sum(np.count_nonzero(m) for m in make_design(n).matrices) == n * n


def _failed(report):
    return {c.name for c in report if not c.passed}


def test_entry_range_violation_detected():
    d = make_design(4)
    mats = [m.copy() for m in d.matrices]
    mats[0][3, 0] = 2
    assert "entry_range" in _failed(verify_design(OrthogonalDesign(4, 4, tuple(mats))))


def test_duplicate_matrix_breaks_similarity():
    d = make_design(8)
    mats = list(d.matrices)
    mats[1] = mats[0].copy()
    bad = OrthogonalDesign(8, 8, tuple(mats))
    assert "similarity" in _failed(verify_design(bad))
    v = np.zeros(8)
    v[0], v[1] = 1, -1
    np.testing.assert_array_equal(evaluate(bad, v), np.zeros((8, 8)))
