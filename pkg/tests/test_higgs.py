"""
Higgs 场纤维代数测试
"""

import math

import numpy as np
import pytest

from src.core.errors import BadSignError, EigenspaceViolationError
from src.core.higgs import (
    CenterElement,
    HiggsElement,
    center_generator,
    cross_pairings,
    energy_density,
    holomorphic_part,
    milnor_wood_bound,
    milnor_wood_bound_for,
    random_higgs,
    toledo_density,
    verify_higgs_identities,
    verify_milnor_wood_arithmetic,
)
from src.core.linalg import adjoint, frobenius_norm
from src.core.spaces import HermitianFamily, embed_tangent, random_tangent


class TestCenter:
    def test_generator(self, family):
        center = center_generator(family)
        Z = np.asarray(center.Z)
        np.testing.assert_allclose(Z, -adjoint(Z), atol=1e-15)

    def test_su_formula(self):
        Z = np.asarray(center_generator(HermitianFamily.su(3, 2)).Z)
        np.testing.assert_allclose(np.diag(Z), 1j * np.array([0.4, 0.4, 0.4, -0.6, -0.6]))

    def test_wrong_scale_rejected(self):
        fam = HermitianFamily.su(3, 2)
        with pytest.raises(EigenspaceViolationError):
            CenterElement(fam, 2.0 * np.asarray(center_generator(fam).Z))


class TestHiggsElement:
    def test_toledo_identity(self, family, rng):
        for _ in range(100):
            h = random_higgs(family, rng)
            expected = frobenius_norm(h.phi_plus) ** 2 - frobenius_norm(h.phi_minus) ** 2
            assert toledo_density(h) == pytest.approx(expected, abs=1e-10 * energy_density(h))

    def test_energy_dominates(self, family, rng):
        for _ in range(100):
            h = random_higgs(family, rng)
            assert energy_density(h) >= abs(toledo_density(h)) - 1e-12

    @pytest.mark.parametrize('side, sign', [('plus', 1.0), ('minus', -1.0)])
    def test_one_sided_equality(self, family, rng, side, sign):
        h = random_higgs(family, rng, one_sided=side)
        assert sign * toledo_density(h) == pytest.approx(energy_density(h), rel=1e-12)

    def test_cross_pairings_vanish(self, family, rng):
        h = random_higgs(family, rng)
        for value in cross_pairings(h):
            assert abs(value) <= 1e-10 * energy_density(h)

    def test_holomorphic_part(self, family, rng):
        h = random_higgs(family, rng)
        np.testing.assert_allclose(holomorphic_part(h), h.phi_plus, atol=1e-12)

    def test_rejects_wrong_eigenspace(self, rng):
        fam = HermitianFamily.su(3, 2)
        M = np.asarray(embed_tangent(random_tangent(fam, rng)))
        with pytest.raises(EigenspaceViolationError):
            HiggsElement(fam, adjoint(M), np.zeros_like(M))

    def test_rejects_bad_side(self, rng):
        with pytest.raises(ValueError):
            random_higgs(HermitianFamily.sp(2), rng, one_sided='both')


class TestMilnorWood:
    def test_disc_example(self):
        assert milnor_wood_bound(-2.0, 1, 1, 2.0 * math.pi) == pytest.approx(4.0 * math.pi)

    def test_zero_curvature(self):
        assert milnor_wood_bound(0.0, 3, 2, 5.0) == 0.0

    def test_normalized_curvature(self):
        fam = HermitianFamily.sp(3)
        assert milnor_wood_bound_for(fam, -2.0, 3, 1.5) == pytest.approx(3 * 1.5)

    def test_positive_curvature_rejected(self):
        with pytest.raises(BadSignError):
            milnor_wood_bound(0.5, 1, 1, 1.0)

    @pytest.mark.parametrize('n, rank, vol', [(0, 1, 1.0), (1, 0, 1.0), (1, 1, 0.0)])
    def test_bad_arguments(self, n, rank, vol):
        with pytest.raises(ValueError):
            milnor_wood_bound(-1.0, n, rank, vol)


class TestVerification:
    def test_identities_pass(self, family):
        report = verify_higgs_identities(family, samples=200, seed=42)
        assert report.passed, report.failed_subchecks
        assert report.check_name == f'higgs:{family.token}'

    def test_arithmetic_passes(self, family):
        report = verify_milnor_wood_arithmetic(family, seed=42)
        assert report.passed, report.failed_subchecks
        assert report.samples == 1
