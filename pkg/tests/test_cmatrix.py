"""
稠密复矩阵运算测试
"""

import numpy as np
import pytest
import scipy.linalg
from hypothesis import given, settings
from hypothesis import strategies as st

from src.core.errors import BadShapeError, NonFiniteError, NonHermitianError
from src.core.linalg import (
    adjoint,
    cmatrix,
    commutator,
    expm,
    frobenius_inner,
    herm_eig,
    kernel_basis,
    numerical_rank,
    random_complex,
    random_unitary,
    trace,
)


def _random_hermitian(n, rng):
    X = np.asarray(random_complex((n, n), rng))
    return X + adjoint(X)


def _assert_eigen_residuals(H, result=None):
    """重构残差与逐对残差都在 1e-10·‖H‖ 以内"""
    if result is None:
        result = herm_eig(H)
    V = np.asarray(result.vectors)
    bound = 1e-10 * np.linalg.norm(H)
    assert np.linalg.norm((V * result.values) @ adjoint(V) - H) <= bound
    assert max(np.linalg.norm(H @ V[:, k] - result.values[k] * V[:, k]) for k in range(H.shape[0])) <= bound
    assert np.linalg.norm(adjoint(V) @ V - np.eye(H.shape[0])) <= 1e-10


class TestConstruction:
    def test_read_only(self):
        M = cmatrix([[1, 2], [3, 4]])
        assert M.dtype == np.complex128
        with pytest.raises(ValueError):
            M[0, 0] = 5

    def test_rejects_nan(self):
        with pytest.raises(NonFiniteError):
            cmatrix([[1.0, np.nan], [0.0, 1.0]])

    def test_rejects_vector(self):
        with pytest.raises(BadShapeError):
            cmatrix([1.0, 2.0])


class TestHermEig:
    @pytest.mark.parametrize('n', [1, 2, 5, 8])
    def test_matches_numpy(self, n, rng):
        H = _random_hermitian(n, rng)
        result = herm_eig(H)
        np.testing.assert_allclose(result.values, np.linalg.eigh(H)[0], atol=1e-10)
        V = np.asarray(result.vectors)
        assert np.linalg.norm(H @ V - V * result.values) <= 1e-10 * np.linalg.norm(H)
        assert np.linalg.norm(adjoint(V) @ V - np.eye(n)) <= 1e-10

    def test_values_ascending(self, rng):
        values = herm_eig(_random_hermitian(6, rng)).values
        assert np.all(np.diff(values) >= 0)

    def test_repeated_eigenvalues(self, rng):
        U = np.asarray(random_unitary(4, rng))
        H = U @ np.diag([1.0, 1.0, 3.0, 3.0]) @ adjoint(U)
        np.testing.assert_allclose(herm_eig(H).values, [1.0, 1.0, 3.0, 3.0], atol=1e-10)

    def test_rejects_non_hermitian(self):
        with pytest.raises(NonHermitianError):
            herm_eig(np.array([[0.0, 1.0], [0.0, 0.0]]))

    def test_zero_matrix(self):
        result = herm_eig(np.zeros((3, 3)))
        np.testing.assert_array_equal(result.values, np.zeros(3))

    @pytest.mark.parametrize('n', [16, 32, 72])
    def test_residual_bound_large(self, n):
        _assert_eigen_residuals(_random_hermitian(n, np.random.default_rng(n)))

    def test_tiny_off_diagonal(self):
        H = np.array([[1.0, 1e-310j], [-1e-310j, 2.0]])
        result = herm_eig(H)
        assert np.all(np.isfinite(result.values))
        np.testing.assert_allclose(result.values, [1.0, 2.0], atol=1e-15)
        np.testing.assert_allclose(np.abs(np.asarray(result.vectors)), np.eye(2), atol=1e-15)

    def test_tiny_entries_in_structured_matrix(self):
        H = np.diag([3.0, 3.0, 1.0, 0.0, 5.0]).astype(complex)
        H[0, 1] = H[1, 0] = 1e-320
        H[2, 4] = 4e-300
        H[4, 2] = np.conj(H[2, 4])
        H[1, 2] = 0.5
        H[2, 1] = 0.5
        result = herm_eig(H)
        assert np.all(np.isfinite(result.values))
        _assert_eigen_residuals(H, result)


@settings(max_examples=50, deadline=None)
@given(st.integers(min_value=1, max_value=12), st.integers(min_value=0, max_value=2**32 - 1))
def test_eigen_residual_property(n, seed):
    _assert_eigen_residuals(_random_hermitian(n, np.random.default_rng(seed)))


class TestExpm:
    @pytest.mark.parametrize('scale', [0.1, 1.0, 5.0])
    def test_matches_scipy(self, scale, rng):
        M = scale * np.asarray(random_complex((5, 5), rng))
        expected = scipy.linalg.expm(M)
        assert np.linalg.norm(np.asarray(expm(M)) - expected) <= 1e-10 * np.linalg.norm(expected)

    def test_skew_hermitian_gives_unitary(self, rng):
        X = np.asarray(random_complex((4, 4), rng))
        U = np.asarray(expm(X - adjoint(X)))
        assert np.linalg.norm(adjoint(U) @ U - np.eye(4)) <= 1e-12

    def test_zero(self):
        np.testing.assert_allclose(expm(np.zeros((3, 3))), np.eye(3))


class TestHelpers:
    def test_kernel_of_projection(self):
        P = np.diag([1.0, 0.0, 1.0, 0.0])
        K = kernel_basis(P)
        assert K.shape == (4, 2)
        assert np.linalg.norm(P @ K) <= 1e-12

    def test_numerical_rank(self, rng):
        x = np.asarray(random_complex((5, 1), rng))
        y = np.asarray(random_complex((1, 4), rng))
        assert numerical_rank(x @ y) == 1
        assert numerical_rank(np.asarray(random_complex((5, 4), rng))) == 4

    def test_commutator_traceless(self, rng):
        A = random_complex((4, 4), rng)
        B = random_complex((4, 4), rng)
        assert abs(trace(commutator(A, B))) <= 1e-12

    def test_inner_product_is_frobenius(self, rng):
        A = np.asarray(random_complex((3, 2), rng))
        assert abs(frobenius_inner(A, A) - np.linalg.norm(A) ** 2) <= 1e-12


@settings(max_examples=50, deadline=None)
@given(st.integers(min_value=1, max_value=6), st.integers(min_value=0, max_value=2**32 - 1))
def test_trace_cyclicity(n, seed):
    rng = np.random.default_rng(seed)
    A = np.asarray(random_complex((n, n), rng))
    B = np.asarray(random_complex((n, n), rng))
    assert abs(trace(A @ B) - trace(B @ A)) <= 1e-10 * (1 + np.linalg.norm(A) * np.linalg.norm(B))
