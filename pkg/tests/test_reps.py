"""
典范表示、中心化子与可迁性测试
"""

import numpy as np
import pytest

from src.core.errors import BadFamilyError, NoClosedFormError, NotInGroupError
from src.core.linalg import expm, frobenius_norm, random_unitary
from src.core.reps import (
    K0,
    P1,
    P2,
    RealForm,
    Sl2Element,
    adjoint_transitivity_check,
    canonical_rep,
    centralizer,
    check_centralizer,
    expected_centralizer_dimension,
    f_star,
    group_element,
    group_residual,
    lie_algebra_residual,
    printed_so_rho_tot,
    printed_su_f_star,
    random_sl2,
    rho_tot,
    so_star_k_split,
    so_transport,
    sp_adjoint_residual,
    su11_parameters,
    su_transport,
    table_centralizer_dimension,
    unitary_symmetric_log,
    verify_canonical_rep,
)
from src.core.spaces import HermitianFamily, locus_witness


class TestSl2:
    def test_basis_in_su11(self):
        for X in (K0, P1, P2):
            Sl2Element(X, RealForm.SU11)

    def test_rejects_trace(self):
        with pytest.raises(ValueError):
            Sl2Element(np.eye(2), RealForm.SU11)

    def test_rejects_wrong_form(self):
        with pytest.raises(ValueError):
            Sl2Element(K0, RealForm.SL2R)

    def test_cayley_round_trip(self, rng):
        for _ in range(20):
            x = random_sl2(rng)
            back = x.to_form(RealForm.SL2R).to_form(RealForm.SU11)
            np.testing.assert_allclose(back.matrix, x.matrix, atol=1e-12)

    def test_coordinates(self):
        x = Sl2Element.from_coordinates(0.3, -1.2, 0.7)
        assert x.coordinates() == pytest.approx((0.3, -1.2, 0.7))
        assert x.to_form(RealForm.SL2R).coordinates() == pytest.approx((0.3, -1.2, 0.7))

    def test_bracket_stays_in_form(self, rng):
        x = random_sl2(rng, RealForm.SL2R)
        y = random_sl2(rng)
        z = x.bracket(y)
        assert z.form == RealForm.SL2R
        assert np.linalg.norm(np.imag(np.asarray(z.matrix))) <= 1e-12

    def test_su11_parameters(self, rng):
        g = np.asarray(group_element(random_sl2(rng)))
        alpha, beta = su11_parameters(g)
        assert abs(alpha) ** 2 - abs(beta) ** 2 == pytest.approx(1.0, abs=1e-10)

    def test_su11_parameters_rejects(self):
        with pytest.raises(NotInGroupError):
            su11_parameters(2.0 * np.eye(2))


class TestCanonicalRep:
    def test_verify_passes(self, family):
        report = verify_canonical_rep(family, samples=50, seed=42, tol=1e-8)
        assert report.passed, report.failed_subchecks
        assert report.check_name == f'reps:canonical:{family.token}'

    def test_sostar_skips_intertwining(self):
        report = verify_canonical_rep(HermitianFamily.sostar(4), samples=10, seed=3, tol=1e-8)
        names = {s.name for s in report.details}
        assert 'intertwining' not in names
        assert 'group_membership' in names

    def test_images_in_algebra(self, family):
        rep = canonical_rep(family)
        for X in rep.f_star_images:
            assert lie_algebra_residual(family, X) <= 1e-12

    def test_su_block_layout(self):
        fam = HermitianFamily.su(4, 2)
        M = np.asarray(f_star(fam, Sl2Element(K0, RealForm.SU11)))
        np.testing.assert_allclose(np.diag(M), [1j, 1j, 0, 0, -1j, -1j])

    def test_rho_tot_in_group(self, rng):
        for text in ('su:3,2', 'sp:3', 'so:5,2'):
            fam = HermitianFamily.parse(text)
            x = random_sl2(rng)
            rep = canonical_rep(fam)
            assert group_residual(fam, rep.group_image(x)) <= 1e-10

    def test_rho_tot_rejects_non_group(self):
        with pytest.raises(NotInGroupError):
            rho_tot(HermitianFamily.su(3, 2), 2.0 * np.eye(2))

    def test_sostar_has_no_closed_form(self):
        with pytest.raises(NoClosedFormError):
            rho_tot(HermitianFamily.sostar(4), np.eye(2))

    def test_printed_su_variant_fails(self):
        report = verify_canonical_rep(HermitianFamily.su(3, 2), samples=10, seed=1, tol=1e-8, f=printed_su_f_star)
        assert not report.passed
        assert 'membership' in {s.name for s in report.failed_subchecks}

    def test_printed_so_variant_fails(self):
        report = verify_canonical_rep(HermitianFamily.so(5), samples=10, seed=1, tol=1e-8, rho=printed_so_rho_tot)
        assert not report.passed
        failed = {s.name for s in report.failed_subchecks}
        assert 'intertwining' in failed or 'multiplicative' in failed

    def test_printed_variants_reject_other_families(self):
        with pytest.raises(BadFamilyError):
            printed_su_f_star(HermitianFamily.sp(3), Sl2Element(K0, RealForm.SU11))


class TestCentralizer:
    @pytest.mark.parametrize('text, expected', [
        ('su:3,2', 4),
        ('su:4,2', 7),
        ('sp:3', 3),
        ('so:5,2', 6),
        ('sostar:4', 10),
    ])
    def test_dimension(self, text, expected):
        fam = HermitianFamily.parse(text)
        result = centralizer(fam)
        assert result.dimension == expected
        assert result.dimension == expected_centralizer_dimension(fam)

    def test_su_pp_disagrees_with_table(self):
        result = centralizer(HermitianFamily.su(3, 3))
        assert result.dimension == 8
        assert result.table_dimension == 9
        assert not result.agrees_with_table

    def test_table_values(self):
        assert table_centralizer_dimension(HermitianFamily.sostar(4)) == 36
        assert table_centralizer_dimension(HermitianFamily.su(4, 2)) == 7

    def test_odd_sostar_has_no_expected_value(self):
        assert expected_centralizer_dimension(HermitianFamily.sostar(5)) is None

    def test_check_passes(self, family):
        report = check_centralizer(family, samples=20, seed=42)
        assert report.passed, report.failed_subchecks
        dimension = next(s for s in report.details if s.name == 'dimension')
        assert '表中维数' in dimension.note

    def test_sostar_first_factor(self):
        report = check_centralizer(HermitianFamily.sostar(4), samples=5, seed=7)
        assert 'first_factor' in {s.name for s in report.details}

    def test_k_split_sums_back(self, rng):
        result = centralizer(HermitianFamily.sostar(4))
        for Z in result.basis:
            first, second = so_star_k_split(Z)
            assert frobenius_norm(np.asarray(first) + np.asarray(second) - np.asarray(Z)) <= 1e-12

    def test_k_split_rejects_odd(self):
        with pytest.raises(BadFamilyError):
            so_star_k_split(np.zeros((10, 10)))


class TestTransitivity:
    def test_sp_adjoint_formula(self, rng):
        for _ in range(20):
            G = rng.standard_normal((3, 3))
            assert sp_adjoint_residual(0.5 * (G + G.T)) <= 1e-8

    def test_unitary_symmetric_log(self, rng):
        for n in (1, 2, 3, 5):
            U = np.asarray(random_unitary(n, rng))
            S = U @ U.T
            C = unitary_symmetric_log(S)
            np.testing.assert_allclose(C, C.T, atol=1e-12)
            np.testing.assert_allclose(np.imag(C), 0.0)
            assert frobenius_norm(np.asarray(expm(2j * C)) - S) <= 1e-6

    def test_log_rejects_non_symmetric(self, rng):
        with pytest.raises(NotInGroupError):
            unitary_symmetric_log(np.asarray(random_unitary(3, rng)) @ np.diag([1.0, 1j, -1.0]) + 0.1)

    @pytest.mark.parametrize('text', ['su:3,2', 'su:5,2', 'su:3,3'])
    def test_su_transport(self, text, rng):
        fam = HermitianFamily.parse(text)
        for _ in range(10):
            _, residual = su_transport(fam, np.asarray(locus_witness(fam, rng).payload))
            assert residual <= 1e-8

    def test_so_transport(self, rng):
        fam = HermitianFamily.so(5)
        for _ in range(10):
            _, residual = so_transport(fam, np.asarray(locus_witness(fam, rng).payload))
            assert residual <= 1e-8

    @pytest.mark.parametrize('text', ['sp:3', 'su:3,2', 'so:5,2'])
    def test_check_passes(self, text):
        report = adjoint_transitivity_check(HermitianFamily.parse(text), trials=8, seed=42)
        assert report.passed, report.failed_subchecks

    @pytest.mark.slow
    def test_sostar_orbit(self):
        report = adjoint_transitivity_check(HermitianFamily.sostar(4), trials=2, seed=42)
        assert report.passed, report.failed_subchecks

    def test_odd_sostar_unsupported(self):
        with pytest.raises(BadFamilyError):
            adjoint_transitivity_check(HermitianFamily.sostar(5), trials=1, seed=1)

    def test_rejects_zero_trials(self):
        with pytest.raises(ValueError):
            adjoint_transitivity_check(HermitianFamily.sp(2), trials=0, seed=1)
