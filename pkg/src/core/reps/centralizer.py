"""
典范 sl₂ 像在 g 中的中心化子

未知量 Z = X + iY 共 2N² 个实变量；约束为 Z ∈ g 与 [Z, f_*(基)] = 0，
对约束矩阵 C 的 CᵀC 做特征分解取零空间
"""

from dataclasses import dataclass, field
from typing import Callable, List, Optional, Tuple

import numpy as np

from src.core.errors import BadFamilyError
from src.core.linalg.cmatrix import (
    ComplexMatrix,
    adjoint,
    cmatrix,
    commutator,
    expm,
    frobenius_norm,
    herm_eig,
    random_unitary,
)
from src.core.report import LemmaReport, SubCheck
from src.core.reps.canonical import (
    canonical_rep,
    defining_form,
    group_residual,
    lie_algebra_residual,
)
from src.core.reps.sl2 import random_sl2
from src.core.spaces.lie_spaces import FamilyKind, HermitianFamily, symplectic_unit
from src.utils import LoggerFactory

logger = LoggerFactory.get_logger(__name__)

NULLSPACE_TOL = 1e-8
COMMUTE_TOL = 1e-10
EXP_TOL = 1e-9
SPLIT_TOL = 1e-9


@dataclass(frozen=True)
class CentralizerResult:
    """
    中心化子

    Attributes:
        family: 群族
        dimension: 计算得到的实维数
        basis: 零空间的一组基（N×N 矩阵）
        table_dimension: 表中给出的维数
    """
    family: HermitianFamily
    dimension: int
    basis: List[ComplexMatrix] = field(default_factory=list)
    table_dimension: Optional[int] = None

    @property
    def agrees_with_table(self) -> bool:
        return self.table_dimension is None or self.table_dimension == self.dimension


def table_centralizer_dimension(fam: HermitianFamily) -> int:
    """
    表中列出的维数

    SU(p,q), p > q: q² + (p−q)² − 1；SU(p,p): p²；Sp(2n): n(n−1)/2；
    SO₀(n,2): (n−1)(n−2)/2；SO*(2n): n(2n+1)
    """
    n = fam.p
    if fam.kind == FamilyKind.SU_PQ:
        q = fam.q
        if fam.p == q:
            return q * q
        return q * q + (fam.p - q) ** 2 - 1
    if fam.kind == FamilyKind.SP_2N:
        return n * (n - 1) // 2
    if fam.kind == FamilyKind.SO_P2:
        return (n - 1) * (n - 2) // 2
    return n * (2 * n + 1)


def expected_centralizer_dimension(fam: HermitianFamily) -> Optional[int]:
    """
    由中心化子群的结构算出的维数；奇数 n 的 SO* 不给出

    SU(p,p) 为 p² − 1（行列式条件去掉一维）；SO*(2n), n = 2m 为 m(2m+1)
    """
    if fam.kind == FamilyKind.SU_PQ and fam.p == fam.q:
        return fam.p ** 2 - 1
    if fam.kind == FamilyKind.SOSTAR_2N:
        if fam.p % 2 == 1:
            return None
        m = fam.p // 2
        return m * (2 * m + 1)
    return table_centralizer_dimension(fam)


def _constraints(fam: HermitianFamily, images: Tuple[ComplexMatrix, ...]) -> Callable[[np.ndarray], np.ndarray]:
    F = np.asarray(defining_form(fam))

    def apply(Z: np.ndarray) -> np.ndarray:
        parts = [adjoint(Z) @ F + F @ Z]
        if fam.kind == FamilyKind.SU_PQ:
            parts.append(np.array([[np.trace(Z)]]))
        elif fam.kind == FamilyKind.SOSTAR_2N:
            parts.append(Z + Z.T)
        else:
            parts.append(1j * np.imag(Z))
        parts.extend(commutator(Z, np.asarray(X)) for X in images)
        flat = np.concatenate([np.asarray(P).reshape(-1) for P in parts])
        return np.concatenate([np.real(flat), np.imag(flat)])

    return apply


def centralizer(fam: HermitianFamily, tol: float = NULLSPACE_TOL) -> CentralizerResult:
    """
    求中心化子的李代数

    Args:
        fam: 群族
        tol: 零特征值阈值（相对最大特征值）

    Returns:
        CentralizerResult，dimension 为计算值，table_dimension 为表中值
    """
    N = fam.matrix_size
    rep = canonical_rep(fam)
    apply = _constraints(fam, rep.f_star_images)

    columns = []
    units = []
    for part in (1.0, 1j):
        for r in range(N):
            for c in range(N):
                E = np.zeros((N, N), dtype=np.complex128)
                E[r, c] = part
                units.append(E)
                columns.append(apply(E))
    C = np.column_stack(columns)
    normal = C.T @ C

    eig = herm_eig(normal, tol=1e-12)
    values = eig.values
    top = float(np.max(np.abs(values)))
    mask = values <= tol * top
    vectors = np.real(np.asarray(eig.vectors)[:, mask])

    basis = []
    for k in range(vectors.shape[1]):
        Z = sum(weight * E for weight, E in zip(vectors[:, k], units))
        basis.append(cmatrix(Z, copy=False))

    result = CentralizerResult(
        family=fam,
        dimension=len(basis),
        basis=basis,
        table_dimension=table_centralizer_dimension(fam)
    )
    if not result.agrees_with_table:
        logger.warning(
            f"{fam.label} 中心化子维数与表不符: 计算 {result.dimension}, 表 {result.table_dimension}"
        )
    return result


def _unit_determinant(U: np.ndarray) -> np.ndarray:
    """把 U 乘以相位使 det U = 1"""
    det = np.linalg.det(U)
    return U * np.exp(-1j * np.angle(det) / U.shape[0])


def centralizer_group_sample(
    fam: HermitianFamily,
    rng: np.random.Generator,
    basis: Optional[List[ComplexMatrix]] = None
) -> ComplexMatrix:
    """
    中心化子群中的随机元素

    SU(p,q), p > q: diag(U, F, U)，det(U)²·det F = 1；SU(p,p): diag(U, U)，det U = ±1；
    Sp(2n): diag(Q, Q)，Q ∈ O(n)；SO₀(n,2): diag(det P, P, det P, det P)，P ∈ O(n−1)；
    SO*(2n): 零空间基的随机组合取指数

    Raises:
        BadFamilyError: SO* 未提供零空间基
    """
    if fam.kind == FamilyKind.SU_PQ:
        p, q = fam.p, fam.q
        U = np.asarray(random_unitary(q, rng))
        if p == q:
            U = _unit_determinant(U)
            if rng.random() < 0.5:
                U[:, 0] = -U[:, 0]
            g = np.zeros((2 * q, 2 * q), dtype=np.complex128)
            g[:q, :q] = U
            g[q:, q:] = U
            return cmatrix(g, copy=False)
        F = np.asarray(random_unitary(p - q, rng))
        total = np.linalg.det(U) ** 2 * np.linalg.det(F)
        F = F * np.exp(-1j * np.angle(total) / (p - q))
        g = np.zeros((p + q, p + q), dtype=np.complex128)
        g[:q, :q] = U
        g[q:p, q:p] = F
        g[p:, p:] = U
        return cmatrix(g, copy=False)

    if fam.kind == FamilyKind.SP_2N:
        n = fam.p
        Q, _ = np.linalg.qr(rng.standard_normal((n, n)))
        g = np.zeros((2 * n, 2 * n), dtype=np.complex128)
        g[:n, :n] = Q
        g[n:, n:] = Q
        return cmatrix(g, copy=False)

    if fam.kind == FamilyKind.SO_P2:
        n = fam.p
        P, _ = np.linalg.qr(rng.standard_normal((n - 1, n - 1)))
        sign = float(np.sign(np.linalg.det(P)))
        g = np.eye(n + 2, dtype=np.complex128)
        g[0, 0] = sign
        g[1:n, 1:n] = P
        g[n, n] = sign
        g[n + 1, n + 1] = sign
        return cmatrix(g, copy=False)

    if not basis:
        raise BadFamilyError("SO* 的中心化子群样本需要零空间基", {'family': str(fam)})
    weights = rng.standard_normal(len(basis))
    X = sum(w * np.asarray(B) for w, B in zip(weights, basis))
    return expm(X / max(1.0, frobenius_norm(X)))


def so_star_k_split(X: ComplexMatrix) -> Tuple[ComplexMatrix, ComplexMatrix]:
    """
    SO*(2n)（n 偶数）中 𝔨 元素 [[B', C'], [−C', B']] 在两个直和因子上的投影

    第一因子：B' 与 J 交换、C' 与 J 反交换；第二因子：B' 反交换、C' 交换

    Raises:
        BadFamilyError: n 为奇数
    """
    X = np.asarray(X, dtype=np.complex128)
    n = X.shape[0] // 2
    if n % 2 == 1:
        raise BadFamilyError("只支持偶数 n 的 SO*(2n)", {'n': n})
    J = np.asarray(symplectic_unit(n))
    B = X[:n, :n]
    C = X[:n, n:]

    def commuting(Y: np.ndarray) -> np.ndarray:
        return 0.5 * (Y - J @ Y @ J)

    def anticommuting(Y: np.ndarray) -> np.ndarray:
        return 0.5 * (Y + J @ Y @ J)

    def assemble(B_part: np.ndarray, C_part: np.ndarray) -> ComplexMatrix:
        return cmatrix(np.block([[B_part, C_part], [-C_part, B_part]]), copy=False)

    first = assemble(commuting(B), anticommuting(C))
    second = assemble(anticommuting(B), commuting(C))
    return first, second


def check_centralizer(fam: HermitianFamily, samples: int, seed: int) -> LemmaReport:
    """
    校验中心化子

    零空间元素与 f_* 像交换且取指数后保持不变形式；维数与群结构给出的值一致；
    中心化子群的随机元素与 ρ_tot 的像交换；SO* 时零空间落在 𝔨 的第一个因子中。
    与表中维数的差异只记录在说明里
    """
    rng = np.random.default_rng(seed)
    result = centralizer(fam)
    rep = canonical_rep(fam)
    checks: List[SubCheck] = []

    commute = 0.0
    exp_defect = 0.0
    membership = 0.0
    for Z in result.basis:
        for X in rep.f_star_images:
            commute = max(commute, frobenius_norm(commutator(Z, X)))
        membership = max(membership, lie_algebra_residual(fam, Z))
        exp_defect = max(exp_defect, group_residual(fam, expm(Z)))
    checks.append(SubCheck.measure('basis_commutes', commute, COMMUTE_TOL))
    checks.append(SubCheck.measure('basis_in_algebra', membership, COMMUTE_TOL))
    checks.append(SubCheck.measure('basis_exponentiates', exp_defect, EXP_TOL))

    expected = expected_centralizer_dimension(fam)
    table_note = f'表中维数 {result.table_dimension}' + ('' if result.agrees_with_table else '（与计算值不符）')
    if expected is not None:
        checks.append(SubCheck.measure(
            'dimension', abs(result.dimension - expected), 0.0,
            note=f'计算 {result.dimension}, 期望 {expected}; {table_note}'
        ))
    else:
        checks.append(SubCheck.measure('dimension', 0.0, 0.0, note=f'计算 {result.dimension}; {table_note}'))

    group_commute = 0.0
    group_form = 0.0
    for _ in range(samples):
        h = np.asarray(centralizer_group_sample(fam, rng, result.basis))
        g = np.asarray(rep.group_image(random_sl2(rng)))
        group_commute = max(group_commute, frobenius_norm(h @ g - g @ h) / max(1.0, frobenius_norm(g)))
        group_form = max(group_form, group_residual(fam, h))
    checks.append(SubCheck.measure('group_sample_commutes', group_commute, EXP_TOL))
    checks.append(SubCheck.measure('group_sample_in_group', group_form, EXP_TOL))

    if fam.kind == FamilyKind.SOSTAR_2N and fam.p % 2 == 0:
        leak = max((frobenius_norm(so_star_k_split(Z)[1]) for Z in result.basis), default=0.0)
        checks.append(SubCheck.measure('first_factor', leak, SPLIT_TOL))

    claim = f'{fam.label} 中典范 sl₂ 像的中心化子维数为 {result.dimension}，其元素与表示的像交换'
    report = LemmaReport.from_subchecks(f'reps:centralizer:{fam.token}', claim, checks, samples, seed)
    logger.info(f"{fam.label} 中心化子: dim={result.dimension}, {report.status.value}")
    return report
