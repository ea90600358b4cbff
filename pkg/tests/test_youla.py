"""
Youla 分解测试
"""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.core.errors import NotSkewError, PairingFailureError
from src.core.linalg import (
    adjoint,
    canonical_block_form,
    numerical_rank,
    paired_eigenvalues,
    random_complex,
    random_unitary,
    skew_residual,
    youla_decompose,
)
from src.utils import retry


def _random_skew(n, rng):
    X = np.asarray(random_complex((n, n), rng))
    return X - X.T


def _assert_decomposes(A):
    result = youla_decompose(A)
    U = np.asarray(result.U)
    n = A.shape[0]
    target = np.asarray(canonical_block_form(result.sigmas, n))
    assert np.linalg.norm(U.T @ A @ U - target) <= 1e-10 * max(np.linalg.norm(A), 1.0)
    assert np.linalg.norm(adjoint(U) @ U - np.eye(n)) <= 1e-10
    assert all(s > 0 for s in result.sigmas)
    if result.sigmas:
        assert np.all(np.diff(result.sigmas) <= 1e-10 * result.sigmas[0])
    return result


@pytest.mark.parametrize('n', [2, 3, 4, 5, 6, 7])
def test_random_skew(n, rng):
    A = _random_skew(n, rng)
    result = _assert_decomposes(A)
    assert result.block_count == numerical_rank(A) // 2
    assert result.residual <= 1e-10


def test_block_example():
    A = np.array([[0, 2, 0], [-2, 0, 0], [0, 0, 0]], dtype=complex)
    result = _assert_decomposes(A)
    assert result.sigmas == pytest.approx((2.0,), abs=1e-12)


def test_zero_matrix():
    result = youla_decompose(np.zeros((4, 4)))
    assert result.sigmas == ()
    np.testing.assert_allclose(result.U, np.eye(4))


def test_repeated_moduli(rng):
    U = np.asarray(random_unitary(6, rng))
    A = U.T @ np.asarray(canonical_block_form((1.5, 1.5, 1.5), 6)) @ U
    result = _assert_decomposes(A)
    assert result.sigmas == pytest.approx((1.5, 1.5, 1.5), abs=1e-10)


def test_rank_deficient(rng):
    U = np.asarray(random_unitary(6, rng))
    A = U.T @ np.asarray(canonical_block_form((2.0, 0.5), 6)) @ U
    result = _assert_decomposes(A)
    assert result.block_count == 2


def test_rejects_non_skew():
    with pytest.raises(NotSkewError):
        youla_decompose(np.eye(3))
    with pytest.raises(NotSkewError):
        youla_decompose(np.zeros((2, 3)))


def test_skew_residual(rng):
    assert skew_residual(_random_skew(4, rng)) <= 1e-15
    assert skew_residual(np.eye(2)) == pytest.approx(2.0)


class TestPairing:
    def test_pairs_for_random_skew(self, rng):
        A = _random_skew(5, rng)
        values = paired_eigenvalues(A)
        assert len(values) == 5
        assert values[4] == 0.0
        assert values[0] == pytest.approx(values[1])
        assert values[2] == pytest.approx(values[3])
        reference = np.sort(np.linalg.eigvalsh(adjoint(A) @ A))[::-1]
        np.testing.assert_allclose(values, reference, atol=1e-8 * reference[0])

    def test_failure_on_tight_tolerance_escalates(self, rng):
        """舍入误差下极严容差配对失败，容差递增后成功"""
        A = _random_skew(4, rng)
        with pytest.raises(PairingFailureError):
            paired_eigenvalues(A, tol=1e-30)

        calls = []
        escalating = retry(max_attempts=40, exceptions=(PairingFailureError,),
                           on_retry=lambda attempt, e: calls.append(attempt))(paired_eigenvalues)
        values = escalating(A, tol=1e-30)
        assert len(values) == 4
        assert calls


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=2, max_value=7), st.integers(min_value=0, max_value=2**32 - 1))
def test_reconstruction_property(n, seed):
    rng = np.random.default_rng(seed)
    _assert_decomposes(_random_skew(n, rng))
