import math
from fractions import Fraction

import numpy as np
import pytest

from oracles import lapack_min_eigenvalue, pauli_sum_dense, product_state_dense
from sepball.bounds import upper_bound
from sepball.cone import (
    DecompositionTerm,
    LiftedElement,
    ProductDecomposition,
    boundary_element,
    origin_element,
    separable_decomposition,
    witness_element,
)
from sepball.quantum import (
    HermitianMatrix,
    NonConvergenceError,
    ProductState,
    build_state,
    expectation,
    frobenius_distance,
    isometry_lift,
    jacobi_eigenvalues,
    maximally_mixed,
    min_eigenvalue,
    min_product_expectation,
    pauli,
    random_product_state,
    reconstruct_from_decomposition,
    trace_product,
    witness_operator,
)
from sepball.tensors import ResourceLimitError, closed_form_norm_sq


def test_pauli_matrices():
    np.testing.assert_array_equal(pauli(0), np.eye(2))
    np.testing.assert_array_equal(pauli(1), [[0, 1], [1, 0]])
    np.testing.assert_array_equal(pauli(2), [[0, -1j], [1j, 0]])
    np.testing.assert_array_equal(pauli(3), [[1, 0], [0, -1]])
    for k in range(4):
        for l in range(4):
            assert np.trace(pauli(k) @ pauli(l)) == 2 * (k == l)
    with pytest.raises(ValueError):
        pauli(4)


@pytest.mark.parametrize("m", range(1, 5))
def test_isometry_lift_matches_kron_oracle(m, rng):
    nums = rng.integers(-5, 6, size=(4,) * m)
    t = LiftedElement(nums, 7)
    got = isometry_lift(t).to_numpy()
    np.testing.assert_allclose(got, pauli_sum_dense(nums / 7) / 2 ** m, atol=1e-14)


@pytest.mark.parametrize("m", range(1, 5))
def test_isometry_preserves_norm(m, rng):
    for _ in range(5):
        nums = rng.integers(-20, 21, size=(4,) * m)
        t = LiftedElement(nums, 3)
        h = isometry_lift(t).to_numpy()
        assert abs(np.linalg.norm(h) - 2 ** (-m / 2) * math.sqrt(t.norm_sq())) <= 1e-13


def test_origin_lifts_to_maximally_mixed():
    for m in (1, 3, 5):
        assert isometry_lift(origin_element(m)) == maximally_mixed(m)


def test_state_four_matches_published_matrix(golden_rho4):
    rho = build_state(4)
    re, im = rho.common_denominator(168)
    np.testing.assert_array_equal(re, golden_rho4)
    assert not im.any()
    assert rho.reduced().denominator == 168


def test_state_one_is_projector():
    rho = build_state(1)
    assert rho == HermitianMatrix(np.array([[1, -1], [-1, 1]]), np.zeros((2, 2), dtype=np.int64), 2)
    np.testing.assert_allclose(rho.to_numpy() @ rho.to_numpy(), rho.to_numpy())


def test_distances_state_four():
    rho = build_state(4)
    assert abs(frobenius_distance(rho, maximally_mixed(4)) - math.sqrt(1 / 336)) <= 1e-14
    scaled = rho.scale(Fraction(168, 11))
    assert abs(frobenius_distance(scaled, HermitianMatrix.identity(16)) - math.sqrt(8 / 11)) <= 1e-12
    assert frobenius_distance(rho, rho) == 0
    assert frobenius_distance(rho.to_numpy(), rho.to_numpy()) == 0


def test_distance_dimension_mismatch():
    with pytest.raises(ValueError):
        frobenius_distance(build_state(2), build_state(3))


@pytest.mark.parametrize("m", range(1, 7))
def test_state_validity(m):
    rho = build_state(m)
    assert rho.is_hermitian()
    assert rho.trace() == 1
    assert min_eigenvalue(rho) >= -1e-9
    d = frobenius_distance(rho, maximally_mixed(m))
    assert abs(d * math.sqrt(closed_form_norm_sq(m)) * 2 ** (m / 2) - 1) <= 1e-12
    assert abs(d - upper_bound(m)) <= 1e-12


@pytest.mark.parametrize("m", range(1, 7))
def test_isometry_distance_relation(m):
    b = boundary_element(m)
    diff = LiftedElement(b.numerators - origin_element(m).numerators * b.denominator, b.denominator)
    d_lift = math.sqrt(diff.norm_sq())
    d_mat = frobenius_distance(build_state(m), maximally_mixed(m))
    assert abs(d_mat - 2 ** (-m / 2) * d_lift) <= 1e-14


def test_witness_one():
    w = witness_operator(1)
    np.testing.assert_array_equal(w.to_numpy(), np.eye(2) + pauli(1))
    assert abs(min_eigenvalue(w)) <= 1e-14


def test_witness_two_is_twice_swap():
    swap = np.eye(4)[[0, 2, 1, 3]]
    np.testing.assert_array_equal(witness_operator(2).to_numpy(), 2 * swap)


@pytest.mark.parametrize("m", range(1, 7))
def test_witness_certificate(m):
    w, rho = witness_operator(m), build_state(m)
    assert trace_product(w, rho) == 0
    assert trace_product(w, maximally_mixed(m)) == 1
    if m >= 2:
        assert min_eigenvalue(w) < -1e-6


@pytest.mark.parametrize("m", range(2, 6))
def test_witness_detects_entangled_state(m):
    w = witness_operator(m).to_numpy()
    vals, vecs = np.linalg.eigh(w)
    tau = np.outer(vecs[:, 0], vecs[:, 0].conj())
    assert np.real(np.trace(w @ tau)) < 0


@pytest.mark.parametrize("m", range(1, 5))
def test_witness_product_sampling(m):
    assert min_product_expectation(witness_operator(m), m, 2000, seed=11) >= -1e-10


def test_expectation_matches_dense_oracle(rng):
    h = rng.standard_normal((8, 8)) + 1j * rng.standard_normal((8, 8))
    h = h + h.conj().T
    p = random_product_state(rng, 3)
    assert abs(expectation(h, p) - np.real(np.trace(h @ product_state_dense(p.bloch)))) <= 1e-12
    np.testing.assert_allclose(p.matrix(), product_state_dense(p.bloch), atol=1e-15)


def test_product_state_examples():
    p = ProductState((np.array([0.0, 0.0, 1.0]),))
    np.testing.assert_array_equal(p.matrix(), [[1, 0], [0, 0]])
    p = random_product_state(5, 4)
    for f in p.factors:
        assert abs(np.trace(f) - 1) <= 1e-15
        assert lapack_min_eigenvalue(f) >= -1e-14


def test_random_product_state_seeded():
    a = random_product_state(3, 2)
    b = random_product_state(3, 2)
    for u, v in zip(a.bloch, b.bloch):
        np.testing.assert_array_equal(u, v)


@pytest.mark.parametrize("m", range(1, 6))
def test_reconstruction_is_exact(m):
    assert reconstruct_from_decomposition(separable_decomposition(m)) == build_state(m)


def test_reconstruction_trivial_decomposition():
    d = ProductDecomposition(3, (DecompositionTerm(Fraction(1), (0, 0, 0)),))
    assert reconstruct_from_decomposition(d) == maximally_mixed(3)


@pytest.mark.parametrize("s", [1, -1, 2, -2, 3, -3])
def test_lifted_factors_are_pure_states(s):
    d = ProductDecomposition(1, (DecompositionTerm(Fraction(1), (s,)),))
    f = reconstruct_from_decomposition(d).to_numpy()
    assert abs(np.trace(f) - 1) <= 1e-15
    np.testing.assert_allclose(np.linalg.eigvalsh(f), [0, 1], atol=1e-15)


def test_qubit_limit():
    with pytest.raises(ResourceLimitError):
        build_state(9)
    with pytest.raises(ResourceLimitError):
        witness_operator(3, max_qubits=2)


@pytest.mark.parametrize("dim", [1, 2, 5, 16, 40])
def test_jacobi_matches_lapack(dim, rng):
    a = rng.standard_normal((dim, dim))
    a = a + a.T
    np.testing.assert_allclose(jacobi_eigenvalues(a), np.linalg.eigvalsh(a), atol=1e-10)


def test_min_eigenvalue_complex(rng):
    h = rng.standard_normal((6, 6)) + 1j * rng.standard_normal((6, 6))
    h = h + h.conj().T
    assert abs(min_eigenvalue(h) - lapack_min_eigenvalue(h)) <= 1e-10 * np.linalg.norm(h)


def test_min_eigenvalue_identity_and_state():
    assert abs(min_eigenvalue(np.eye(16)) - 1) <= 1e-12
    rho = build_state(4)
    assert abs(min_eigenvalue(rho) - lapack_min_eigenvalue(rho.to_numpy())) <= 1e-12


def test_jacobi_iteration_cap(rng):
    a = rng.standard_normal((10, 10))
    with pytest.raises(NonConvergenceError):
        jacobi_eigenvalues(a + a.T, max_sweeps=1)


def test_min_eigenvalue_rejects_non_square():
    with pytest.raises(ValueError):
        min_eigenvalue(np.zeros((2, 3)))
