"""
纤维上的 Higgs 场代数

Φ = Φ⁺ + Φ⁻ 为 ad(Z) 的 ±i 特征分解；
Toledo 密度 Re⟨Φ, [Φ, iZ]⟩ = ‖Φ⁺‖² − ‖Φ⁻‖²，能量密度 ‖Φ⁺‖² + ‖Φ⁻‖²
"""

import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from src.core.errors import BadSignError, EigenspaceViolationError
from src.core.linalg.cmatrix import (
    ComplexMatrix,
    adjoint,
    cmatrix,
    commutator,
    frobenius_inner,
    frobenius_norm,
)
from src.core.report import LemmaReport, SubCheck
from src.core.reps.canonical import lie_algebra_residual
from src.core.spaces.extremizer import coordinate_directions
from src.core.spaces.lie_spaces import (
    HermitianFamily,
    TangentParam,
    center_matrix,
    embed_tangent,
    random_tangent,
)
from src.utils import LoggerFactory

logger = LoggerFactory.get_logger(__name__)

EIGEN_TOL = 1e-12
IDENTITY_TOL = 1e-10
CROSS_TOL = 1e-12
ONE_SIDED_TOL = 1e-6


@dataclass(frozen=True)
class CenterElement:
    """𝔨 中心的生成元，ad(Z) 在 p^{1,0} 上为 i"""
    family: HermitianFamily
    Z: ComplexMatrix

    def __post_init__(self):
        Z = np.asarray(self.Z)
        if frobenius_norm(Z + adjoint(Z)) > EIGEN_TOL or lie_algebra_residual(self.family, Z) > EIGEN_TOL:
            raise EigenspaceViolationError("Z 不在 𝔨 中", {'family': self.family.label})
        worst = 0.0
        for D in coordinate_directions(self.family):
            M = np.asarray(embed_tangent(TangentParam(self.family, D)))
            worst = max(worst, frobenius_norm(commutator(Z, M) - 1j * M) / frobenius_norm(M))
        if worst > EIGEN_TOL:
            raise EigenspaceViolationError("ad(Z) 在 p^{1,0} 上不是 i", {'residual': worst})


def center_generator(fam: HermitianFamily) -> CenterElement:
    """
    构造并校验 Z

    SU(p,q): i·diag(q/(p+q)·I_p, −p/(p+q)·I_q)；Sp、SO*: Ω/2；SO(p,2): e_{p,p+1} − e_{p+1,p}
    """
    return CenterElement(fam, center_matrix(fam))


def _eigen_residual(Z: np.ndarray, X: np.ndarray, eigenvalue: complex) -> float:
    norm = frobenius_norm(X)
    if norm == 0.0:
        return 0.0
    return frobenius_norm(commutator(Z, X) - eigenvalue * X) / norm


@dataclass(frozen=True)
class HiggsElement:
    """
    纤维上的 Higgs 场

    Attributes:
        family: 群族
        phi_plus: p^{1,0} 分量
        phi_minus: p^{0,1} 分量
    """
    family: HermitianFamily
    phi_plus: ComplexMatrix
    phi_minus: ComplexMatrix

    def __post_init__(self):
        Z = np.asarray(center_matrix(self.family))
        plus = np.asarray(self.phi_plus, dtype=np.complex128)
        minus = np.asarray(self.phi_minus, dtype=np.complex128)
        residual_plus = _eigen_residual(Z, plus, 1j)
        residual_minus = _eigen_residual(Z, minus, -1j)
        if residual_plus > EIGEN_TOL or residual_minus > EIGEN_TOL:
            raise EigenspaceViolationError(
                "Higgs 分量不在 ad(Z) 的 ±i 特征空间中",
                {'plus': residual_plus, 'minus': residual_minus}
            )
        scale = max(1.0, frobenius_norm(plus) * frobenius_norm(minus))
        overlap = abs(frobenius_inner(plus, minus)) / scale
        if overlap > EIGEN_TOL:
            raise EigenspaceViolationError("Φ⁺ 与 Φ⁻ 不正交", {'overlap': overlap})
        object.__setattr__(self, 'phi_plus', cmatrix(plus))
        object.__setattr__(self, 'phi_minus', cmatrix(minus))

    @classmethod
    def from_tangents(
        cls,
        plus: Optional[TangentParam],
        minus: Optional[TangentParam]
    ) -> 'HiggsElement':
        """Φ⁺ = embed(plus)，Φ⁻ = embed(minus)*；缺省分量取零"""
        family = (plus or minus).family
        N = family.matrix_size
        phi_plus = embed_tangent(plus) if plus is not None else np.zeros((N, N), dtype=np.complex128)
        phi_minus = adjoint(embed_tangent(minus)) if minus is not None else np.zeros((N, N), dtype=np.complex128)
        return cls(family, phi_plus, phi_minus)

    @property
    def phi(self) -> ComplexMatrix:
        return cmatrix(np.asarray(self.phi_plus) + np.asarray(self.phi_minus), copy=False)


def holomorphic_part(h: HiggsElement) -> ComplexMatrix:
    """Φ 的 p^{1,0} 分量 ½(Φ − i[Z, Φ])"""
    Z = np.asarray(center_matrix(h.family))
    phi = np.asarray(h.phi)
    return cmatrix(0.5 * (phi - 1j * commutator(Z, phi)), copy=False)


def toledo_density(h: HiggsElement) -> float:
    """
    Re⟨Φ, [Φ, iZ]⟩，同时按 ‖Φ⁺‖² − ‖Φ⁻‖² 计算并比对

    Raises:
        EigenspaceViolationError: 两种算法不一致
    """
    Z = np.asarray(center_matrix(h.family))
    phi = np.asarray(h.phi)
    direct = float(np.real(frobenius_inner(phi, commutator(phi, 1j * Z))))
    split = frobenius_norm(h.phi_plus) ** 2 - frobenius_norm(h.phi_minus) ** 2
    scale = max(1.0, energy_density(h))
    if abs(direct - split) > IDENTITY_TOL * scale:
        raise EigenspaceViolationError(
            "Toledo 密度两种算法不一致",
            {'direct': direct, 'split': split}
        )
    return direct


def energy_density(h: HiggsElement) -> float:
    return frobenius_norm(h.phi_plus) ** 2 + frobenius_norm(h.phi_minus) ** 2


def cross_pairings(h: HiggsElement) -> Tuple[complex, complex]:
    """⟨[Z, Φ⁺], iΦ⁻⟩ 与 ⟨[Z, Φ⁻], iΦ⁺⟩，两者都为零"""
    Z = np.asarray(center_matrix(h.family))
    plus = np.asarray(h.phi_plus)
    minus = np.asarray(h.phi_minus)
    return (
        frobenius_inner(commutator(Z, plus), 1j * minus),
        frobenius_inner(commutator(Z, minus), 1j * plus),
    )


def random_higgs(fam: HermitianFamily, rng: np.random.Generator, one_sided: Optional[str] = None) -> HiggsElement:
    """
    随机 Higgs 元素

    Args:
        fam: 群族
        rng: 随机数生成器
        one_sided: None / 'plus' / 'minus'，指定时另一分量为零
    """
    if one_sided not in (None, 'plus', 'minus'):
        raise ValueError(f"one_sided 只能是 None、'plus' 或 'minus': {one_sided}")
    plus = None if one_sided == 'minus' else random_tangent(fam, rng).scaled(0.5 + rng.random())
    minus = None if one_sided == 'plus' else random_tangent(fam, rng).scaled(0.5 + rng.random())
    return HiggsElement.from_tangents(plus, minus)


def milnor_wood_bound(k: float, n: int, rank: int, vol: float) -> float:
    """
    τ_max = (−2k/(n+1))·rank·vol

    Args:
        k: 曲率常数 (≤ 0)
        n: 复维数 (≥ 1)
        rank: 实秩 (≥ 1)
        vol: 体积 (> 0)

    Raises:
        BadSignError: k > 0
    """
    if k > 0:
        raise BadSignError("曲率常数必须 ≤ 0", {'k': k})
    if n < 1 or rank < 1 or vol <= 0:
        raise ValueError(f"需要 n ≥ 1, rank ≥ 1, vol > 0: n={n}, rank={rank}, vol={vol}")
    return (-2.0 * k / (n + 1)) * rank * vol


def milnor_wood_bound_for(fam: HermitianFamily, k: float, n: int, vol: float) -> float:
    return milnor_wood_bound(k, n, fam.real_rank, vol)


def verify_higgs_identities(fam: HermitianFamily, samples: int, seed: int) -> LemmaReport:
    """
    随机 Higgs 元素上的恒等式与不等式

    Toledo 恒等式、能量 ≥ |Toledo|（单侧元素取等）、交叉项为零、ad(Z)² = −id
    """
    rng = np.random.default_rng(seed)
    center = center_generator(fam)
    Z = np.asarray(center.Z)
    checks: List[SubCheck] = []

    identity = inequality = cross = 0.0
    for _ in range(samples):
        h = random_higgs(fam, rng)
        Z_phi = commutator(h.phi, 1j * Z)
        direct = float(np.real(frobenius_inner(h.phi, Z_phi)))
        split = frobenius_norm(h.phi_plus) ** 2 - frobenius_norm(h.phi_minus) ** 2
        energy = energy_density(h)
        identity = max(identity, abs(direct - split) / energy)
        gap = energy - abs(split)
        expected_gap = 2.0 * min(frobenius_norm(h.phi_plus) ** 2, frobenius_norm(h.phi_minus) ** 2)
        inequality = max(inequality, abs(gap - expected_gap) / energy, max(-gap, 0.0))
        cross = max(cross, *(abs(value) / energy for value in cross_pairings(h)))
    checks.append(SubCheck.measure('toledo_identity', identity, IDENTITY_TOL))
    checks.append(SubCheck.measure('energy_inequality', inequality, IDENTITY_TOL))
    checks.append(SubCheck.measure('cross_pairings', cross, CROSS_TOL * 100))

    equality = 0.0
    for side in ('plus', 'minus'):
        for _ in range(max(1, samples // 10)):
            h = random_higgs(fam, rng, one_sided=side)
            equality = max(equality, abs(energy_density(h) - abs(toledo_density(h))) / energy_density(h))
    checks.append(SubCheck.measure('one_sided_equality', equality, CROSS_TOL * 100))

    ad_square = 0.0
    for _ in range(10):
        M = np.asarray(embed_tangent(random_tangent(fam, rng)))
        X = M - adjoint(M)
        ad_square = max(ad_square, frobenius_norm(commutator(Z, commutator(Z, X)) + X) / frobenius_norm(X))
    checks.append(SubCheck.measure('ad_z_squared', ad_square, EIGEN_TOL * 100))

    claim = f'{fam.label}: Re⟨Φ,[Φ,iZ]⟩ = ‖Φ⁺‖² − ‖Φ⁻‖² 且能量 ≥ |Toledo|，单侧元素取等'
    report = LemmaReport.from_subchecks(f'higgs:{fam.token}', claim, checks, samples, seed)
    logger.info(f"{fam.label} Higgs 恒等式: {report.status.value}, max_residual={report.max_residual:.3e}")
    return report


def verify_milnor_wood_arithmetic(fam: HermitianFamily, seed: int) -> LemmaReport:
    """Milnor–Wood 上界的算术：k = 0 给 0，k = −(n+1)/2 给 rank·vol，(n, k, rank, vol) = (1, −2, 1, 2π) 给 4π"""
    rng = np.random.default_rng(seed)
    n = int(rng.integers(1, 6))
    vol = 0.5 + float(rng.random()) * 10.0
    rank = fam.real_rank
    checks = [
        SubCheck.measure('zero_curvature', abs(milnor_wood_bound_for(fam, 0.0, n, vol)), 0.0),
        SubCheck.measure(
            'normalized_curvature',
            abs(milnor_wood_bound_for(fam, -(n + 1) / 2.0, n, vol) - rank * vol) / (rank * vol),
            1e-15
        ),
        SubCheck.measure('disc_example', abs(milnor_wood_bound(-2.0, 1, 1, 2.0 * math.pi) - 4.0 * math.pi), 1e-12),
    ]
    try:
        milnor_wood_bound(1.0, n, rank, vol)
        checks.append(SubCheck.failure('positive_curvature_rejected', '正曲率未被拒绝'))
    except BadSignError:
        checks.append(SubCheck.measure('positive_curvature_rejected', 0.0, 0.0))

    claim = f'{fam.label}: Milnor–Wood 上界 (−2k/(n+1))·rank·vol 的算术，rank = {rank}'
    return LemmaReport.from_subchecks(f'higgs:milnor_wood:{fam.token}', claim, checks, 1, seed)
