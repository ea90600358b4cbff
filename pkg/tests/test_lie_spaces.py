"""
对称空间参数化与曲率测试
"""

import math

import numpy as np
import pytest

from src.core.errors import BadFamilyError, PayloadShapeError, ZeroTangentError
from src.core.linalg import adjoint, commutator
from src.core.spaces import (
    FamilyKind,
    HermitianFamily,
    TangentParam,
    center_matrix,
    curvature_bounds,
    embed_tangent,
    extract_payload,
    locus_witness,
    normalized_curvature_bounds,
    project_holomorphic,
    random_tangent,
    rank_one_witness,
    sectional_curvature,
    symplectic_unit,
)


def _curvature(family, payload):
    return sectional_curvature(TangentParam(family, np.asarray(payload, dtype=complex)))


class TestFamily:
    @pytest.mark.parametrize('text, label', [
        ('su:3,2', 'SU(3,2)'),
        ('sp:3', 'Sp(6)'),
        ('so:5,2', 'SO(5,2)'),
        ('so:5', 'SO(5,2)'),
        ('sostar:4', 'SO*(8)'),
    ])
    def test_parse(self, text, label):
        fam = HermitianFamily.parse(text)
        assert fam.label == label
        assert HermitianFamily.parse(fam.token) == fam

    @pytest.mark.parametrize('text', ['su:3', 'xx:3', 'so:5,3', 'sp:2,2', 'su:2,3', 'sp:0'])
    def test_parse_rejects(self, text):
        with pytest.raises(BadFamilyError):
            HermitianFamily.parse(text)

    def test_real_rank(self):
        assert HermitianFamily.su(4, 2).real_rank == 2
        assert HermitianFamily.sp(3).real_rank == 3
        assert HermitianFamily.so(5).real_rank == 2
        assert HermitianFamily.sostar(5).real_rank == 2


class TestEmbedding:
    def test_su_example(self):
        fam = HermitianFamily.su(2, 1)
        M = np.asarray(embed_tangent(TangentParam(fam, np.array([[1.0], [0.0]]))))
        expected = np.zeros((3, 3))
        expected[0, 2] = 1.0
        np.testing.assert_allclose(M, expected)

    def test_sp_example(self):
        fam = HermitianFamily.sp(2)
        M = np.asarray(embed_tangent(TangentParam(fam, np.eye(2))))
        I = np.eye(2)
        np.testing.assert_allclose(M, np.block([[I, 1j * I], [1j * I, -I]]))

    def test_so_example(self):
        fam = HermitianFamily.so(3)
        M = np.asarray(embed_tangent(TangentParam(fam, np.array([1.0, 0.0, 0.0]))))
        A = np.zeros((3, 2), dtype=complex)
        A[0] = [1.0, 1j]
        expected = np.block([[np.zeros((3, 3)), A], [A.T, np.zeros((2, 2))]])
        np.testing.assert_allclose(M, expected)

    def test_shape_mismatch(self):
        with pytest.raises(PayloadShapeError):
            TangentParam(HermitianFamily.su(3, 2), np.zeros((2, 3)))

    def test_sp_requires_symmetric(self):
        with pytest.raises(PayloadShapeError):
            TangentParam(HermitianFamily.sp(2), np.array([[0.0, 1.0], [0.0, 0.0]]))

    def test_sostar_requires_skew(self):
        with pytest.raises(PayloadShapeError):
            TangentParam(HermitianFamily.sostar(2), np.eye(2))

    def test_ad_z_acts_by_i(self, family, rng):
        """embed_tangent 的像是 ad(Z) 的 i 特征向量"""
        M = np.asarray(embed_tangent(random_tangent(family, rng)))
        Z = np.asarray(center_matrix(family))
        assert np.linalg.norm(commutator(Z, M) - 1j * M) <= 1e-12

    def test_projection_round_trip(self, family, rng):
        t = random_tangent(family, rng)
        M = np.asarray(embed_tangent(t))
        X = M - adjoint(M)
        recovered = extract_payload(family, project_holomorphic(family, X))
        np.testing.assert_allclose(recovered.payload, t.payload, atol=1e-12)


class TestCurvature:
    def test_su_rank_one(self):
        A = np.zeros((3, 2))
        A[0, 0] = 1.0
        assert _curvature(HermitianFamily.su(3, 2), A) == pytest.approx(-2.0, abs=1e-12)

    def test_su_identity(self):
        assert _curvature(HermitianFamily.su(2, 2), np.eye(2)) == pytest.approx(-1.0, abs=1e-12)

    def test_so_isotropic_and_real(self):
        fam = HermitianFamily.so(4)
        assert _curvature(fam, np.array([1.0, 1j, 0.0, 0.0]) / math.sqrt(2)) == pytest.approx(-1.0, abs=1e-12)
        assert _curvature(fam, np.array([1.0, 0.0, 0.0, 0.0])) == pytest.approx(-0.5, abs=1e-12)

    @pytest.mark.parametrize('n', [1, 2, 3, 4])
    def test_sp_identity(self, n):
        assert _curvature(HermitianFamily.sp(n), np.eye(n)) == pytest.approx(-2.0 / n, abs=1e-12)

    @pytest.mark.parametrize('n', [2, 4, 6])
    def test_sostar_symplectic_unit(self, n):
        fam = HermitianFamily.sostar(n)
        assert _curvature(fam, symplectic_unit(n)) == pytest.approx(-1.0 / (n // 2), abs=1e-12)

    def test_scale_invariance(self, family, rng):
        t = random_tangent(family, rng)
        assert sectional_curvature(t.scaled(3.0 - 2.0j)) == pytest.approx(sectional_curvature(t), abs=1e-12)

    def test_zero_tangent(self):
        with pytest.raises(ZeroTangentError):
            _curvature(HermitianFamily.su(3, 2), np.zeros((3, 2)))

    def test_random_within_bounds(self, family, rng):
        bounds = curvature_bounds(family)
        for _ in range(500):
            assert bounds.contains(sectional_curvature(random_tangent(family, rng)), slack=1e-9)

    def test_witnesses_attain_bounds(self, family, rng):
        bounds = curvature_bounds(family)
        for _ in range(20):
            assert sectional_curvature(locus_witness(family, rng)) == pytest.approx(bounds.upper, abs=1e-10)
            assert sectional_curvature(rank_one_witness(family, rng)) == pytest.approx(bounds.lower, abs=1e-10)


class TestBounds:
    @pytest.mark.parametrize('text, expected', [
        ('su:3,2', (-2.0, -1.0)),
        ('sostar:5', (-1.0, -0.5)),
        ('so:7,2', (-1.0, -0.5)),
        ('sp:3', (-2.0, -2.0 / 3)),
    ])
    def test_table_values(self, text, expected):
        bounds = curvature_bounds(HermitianFamily.parse(text))
        assert (bounds.lower, bounds.upper) == pytest.approx(expected)

    def test_normalized(self, family):
        bounds = normalized_curvature_bounds(family)
        assert bounds.lower == pytest.approx(-1.0)
        assert bounds.upper == pytest.approx(-1.0 / family.real_rank)

    def test_odd_sostar_rank(self):
        fam = HermitianFamily.parse('sostar:5')
        assert fam.kind == FamilyKind.SOSTAR_2N
        assert fam.real_rank == 2
