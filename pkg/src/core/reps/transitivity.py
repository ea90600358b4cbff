"""
K 在最大曲率轨迹上的可迁性

Sp(2n): k = [[0, C], [−C, 0]]，Ad_{exp k}·M(I) = M(e^{2iC})，并用酉对称矩阵的对数证明满射；
SO*(2n): 用 𝔨 第二因子的指数做轨道下降，逼近随机轨迹点；
SU(p,q): A ↦ PAQ*，由 SVD 构造；SO₀(n,2): v ↦ e^{−iφ}·Ov，由 Householder 反射构造
"""

import math
from typing import List, Tuple

import numpy as np
from scipy.optimize import minimize

from src.core.errors import BadFamilyError, NotInGroupError
from src.core.linalg.cmatrix import (
    ComplexMatrix,
    adjoint,
    cmatrix,
    expm,
    frobenius_norm,
    herm_eig,
    random_unitary,
)
from src.core.report import LemmaReport, SubCheck
from src.core.reps.canonical import group_residual
from src.core.reps.centralizer import so_star_k_split
from src.core.spaces.lie_spaces import (
    FamilyKind,
    HermitianFamily,
    TangentParam,
    embed_tangent,
    locus_witness,
    symplectic_unit,
)
from src.utils import LoggerFactory

logger = LoggerFactory.get_logger(__name__)

AD_TOL = 1e-8
LOG_TOL = 1e-6
ORBIT_TOL = 1e-4
UNITARY_TOL = 1e-10
JOINT_MIX = 0.7548776662466927
DEFAULT_RESTARTS = 8


def _ad(g: np.ndarray, M: np.ndarray) -> np.ndarray:
    return g @ M @ np.linalg.inv(g)


def sp_base_tangent(n: int) -> ComplexMatrix:
    return embed_tangent(TangentParam(HermitianFamily.sp(n), np.eye(n)))


def sp_k_element(C: np.ndarray) -> ComplexMatrix:
    n = C.shape[0]
    k = np.zeros((2 * n, 2 * n), dtype=np.complex128)
    k[:n, n:] = C
    k[n:, :n] = -C
    return cmatrix(k, copy=False)


def sp_adjoint_residual(C: np.ndarray) -> float:
    """‖Ad_{exp k}·M(I) − M(e^{2iC})‖ / ‖M(I)‖"""
    C = np.asarray(C, dtype=np.float64)
    n = C.shape[0]
    family = HermitianFamily.sp(n)
    moved = _ad(np.asarray(expm(sp_k_element(C))), np.asarray(sp_base_tangent(n)))
    S = np.asarray(expm(2j * C))
    target = np.asarray(embed_tangent(TangentParam(family, 0.5 * (S + S.T))))
    return frobenius_norm(moved - target) / frobenius_norm(sp_base_tangent(n))


def unitary_symmetric_log(S: ComplexMatrix) -> np.ndarray:
    """
    酉对称矩阵 S 的对数：实对称 C 使 exp(2iC) = S

    S = X + iY 中 X、Y 为可交换的实对称矩阵，
    对 X + γY 做特征分解得到公共的正交基 O，再取 C = O·diag(θ/2)·Oᵗ

    Raises:
        NotInGroupError: S 不是酉对称矩阵
    """
    S = np.asarray(S, dtype=np.complex128)
    n = S.shape[0]
    defect = frobenius_norm(adjoint(S) @ S - np.eye(n)) + frobenius_norm(S - S.T)
    if defect > 1e-8:
        raise NotInGroupError("不是酉对称矩阵", {'defect': defect})
    X = np.real(0.5 * (S + S.T))
    Y = np.imag(0.5 * (S + S.T))
    eig = herm_eig(X + JOINT_MIX * Y)
    O = np.real(np.asarray(eig.vectors))
    phases = np.angle(np.diag(O.T @ S @ O))
    return O @ np.diag(0.5 * phases) @ O.T


def _so_star_second_factor_basis(n: int) -> List[np.ndarray]:
    """𝔨 第二因子的一组正交基（实参数化）"""
    raw = []
    for r in range(n):
        for s in range(n):
            if r < s:
                B = np.zeros((n, n))
                B[r, s], B[s, r] = 1.0, -1.0
                raw.append(np.block([[B, np.zeros((n, n))], [np.zeros((n, n)), B]]))
            if r <= s:
                C = np.zeros((n, n))
                C[r, s] = C[s, r] = 1.0
                raw.append(np.block([[np.zeros((n, n)), C], [-C, np.zeros((n, n))]]))
    projected = np.column_stack([np.real(np.asarray(so_star_k_split(K)[1])).reshape(-1) for K in raw])
    U, sigma, _ = np.linalg.svd(projected, full_matrices=False)
    rank = int(np.sum(sigma > 1e-10 * sigma[0]))
    return [U[:, j].reshape(2 * n, 2 * n) for j in range(rank)]


def so_star_orbit_distance(
    n: int,
    target: np.ndarray,
    rng: np.random.Generator,
    restarts: int = DEFAULT_RESTARTS
) -> float:
    """
    从 J 方向出发沿第二因子的轨道到目标的距离

    目标函数 1 − |⟨Ad M₀, M_t⟩| / (‖Ad M₀‖·‖M_t‖)，BFGS + 随机重启；
    返回 √(2·min) 即相位对齐后单位向量之间的距离
    """
    family = HermitianFamily.sostar(n)
    M0 = np.asarray(embed_tangent(TangentParam(family, np.asarray(symplectic_unit(n)))))
    basis = _so_star_second_factor_basis(n)
    target = np.asarray(target)
    target_norm = frobenius_norm(target)

    def objective(theta: np.ndarray) -> float:
        k = sum(t * K for t, K in zip(theta, basis))
        moved = _ad(np.asarray(expm(k)), M0)
        overlap = abs(np.vdot(moved, target)) / (frobenius_norm(moved) * target_norm)
        return 1.0 - overlap

    best = math.inf
    for _ in range(restarts):
        start = rng.standard_normal(len(basis))
        result = minimize(objective, start, method='BFGS', options={'gtol': 1e-12, 'maxiter': 500})
        best = min(best, float(result.fun))
        if best < 1e-12:
            break
    return math.sqrt(2.0 * max(best, 0.0))


def su_transport(fam: HermitianFamily, target: np.ndarray) -> Tuple[ComplexMatrix, float]:
    """
    k = diag(P, Q) ∈ S(U(p)×U(q))，使 Ad_k 把 [I_q; 0] 方向送到 target（target*target = λI）

    Returns:
        (k, 相对残差)
    """
    p, q = fam.p, fam.q
    target = np.asarray(target)
    scale = frobenius_norm(target) / math.sqrt(q)
    W, _, Vh = np.linalg.svd(target / scale)
    P = W
    Q = adjoint(Vh)
    # Ad_k 不受公共相位影响，用它把总行列式调成 1
    det = np.linalg.det(P) * np.linalg.det(Q)
    phase = np.exp(-1j * np.angle(det) / (p + q))
    k = np.zeros((p + q, p + q), dtype=np.complex128)
    k[:p, :p] = P * phase
    k[p:, p:] = Q * phase

    base = np.zeros((p, q), dtype=np.complex128)
    base[:q, :q] = np.eye(q)
    moved = _ad(k, np.asarray(embed_tangent(TangentParam(fam, base * scale))))
    expected = np.asarray(embed_tangent(TangentParam(fam, target)))
    residual = frobenius_norm(moved - expected) / frobenius_norm(expected)
    return cmatrix(k, copy=False), residual + group_residual(fam, k)


def so_transport(fam: HermitianFamily, target: np.ndarray) -> Tuple[ComplexMatrix, float]:
    """
    k = diag(O, R_φ)，O ∈ SO(n)，使 Ad_k 把 e₀ 方向送到 target = e^{iθ}·u（u 实单位向量）

    O 取把 e₀ 映到 u 的 Householder 反射，再翻转一列使 det O = 1
    """
    n = fam.p
    v = np.asarray(target).reshape(-1)
    scale = float(np.linalg.norm(v))
    idx = int(np.argmax(np.abs(v)))
    theta = float(np.angle(v[idx]))
    u = np.real(v * np.exp(-1j * theta)) / scale

    e0 = np.zeros(n)
    e0[0] = 1.0
    w = e0 - u
    if np.linalg.norm(w) < 1e-14:
        O = np.eye(n)
    else:
        w = w / np.linalg.norm(w)
        O = np.eye(n) - 2.0 * np.outer(w, w)
        O[:, 1] = -O[:, 1]

    phi = -theta
    R = np.array([[math.cos(phi), -math.sin(phi)], [math.sin(phi), math.cos(phi)]])
    k = np.zeros((n + 2, n + 2), dtype=np.complex128)
    k[:n, :n] = O
    k[n:, n:] = R

    base = np.zeros((n, 1), dtype=np.complex128)
    base[0, 0] = scale
    moved = _ad(k, np.asarray(embed_tangent(TangentParam(fam, base))))
    expected = np.asarray(embed_tangent(TangentParam(fam, v.reshape(-1, 1))))
    residual = frobenius_norm(moved - expected) / frobenius_norm(expected)
    return cmatrix(k, copy=False), residual + group_residual(fam, k)


def adjoint_transitivity_check(
    fam: HermitianFamily,
    trials: int,
    seed: int,
    restarts: int = DEFAULT_RESTARTS
) -> LemmaReport:
    """
    K 在最大曲率轨迹上可迁的数值证据

    Args:
        fam: 群族（SO* 只支持偶数 n）
        trials: 随机目标个数 (≥ 1)
        seed: 随机种子
        restarts: SO* 轨道下降的重启次数

    Returns:
        LemmaReport

    Raises:
        BadFamilyError: 奇数 n 的 SO*(2n)
    """
    if trials < 1:
        raise ValueError("trials 必须 ≥ 1")
    rng = np.random.default_rng(seed)
    checks: List[SubCheck] = []

    if fam.kind == FamilyKind.SP_2N:
        n = fam.p
        checks.append(SubCheck.measure('fixed_point', sp_adjoint_residual(np.zeros((n, n))), AD_TOL))
        ad_worst = 0.0
        for _ in range(trials):
            G = rng.standard_normal((n, n))
            ad_worst = max(ad_worst, sp_adjoint_residual(0.5 * (G + G.T)))
        checks.append(SubCheck.measure('adjoint_formula', ad_worst, AD_TOL))

        log_worst = 0.0
        reach_worst = 0.0
        for _ in range(trials):
            U = np.asarray(random_unitary(n, rng))
            S = U @ U.T
            C = unitary_symmetric_log(S)
            log_worst = max(log_worst, frobenius_norm(np.asarray(expm(2j * C)) - S))
            reach_worst = max(reach_worst, sp_adjoint_residual(C))
        checks.append(SubCheck.measure('log_round_trip', log_worst, LOG_TOL))
        checks.append(SubCheck.measure('reaches_targets', reach_worst, AD_TOL))
        claim = f'{fam.label}: exp(𝔨) 的伴随作用把基点方向送到每个酉对称矩阵对应的方向'

    elif fam.kind == FamilyKind.SOSTAR_2N:
        if fam.p % 2 == 1:
            raise BadFamilyError("SO*(2n) 可迁性只支持偶数 n", {'n': fam.p})
        worst = 0.0
        for _ in range(trials):
            target = np.asarray(embed_tangent(locus_witness(fam, rng)))
            worst = max(worst, so_star_orbit_distance(fam.p, target, rng, restarts))
        checks.append(SubCheck.measure('orbit_distance', worst, ORBIT_TOL))
        claim = f'{fam.label}: 𝔨 第二因子的指数轨道到达最大曲率轨迹上的随机方向'

    elif fam.kind == FamilyKind.SU_PQ:
        worst = 0.0
        for _ in range(trials):
            worst = max(worst, su_transport(fam, np.asarray(locus_witness(fam, rng).payload))[1])
        checks.append(SubCheck.measure('transport', worst, AD_TOL))
        claim = f'{fam.label}: S(U(p)×U(q)) 把基点方向送到每个等距方向'

    else:
        worst = 0.0
        for _ in range(trials):
            worst = max(worst, so_transport(fam, np.asarray(locus_witness(fam, rng).payload))[1])
        checks.append(SubCheck.measure('transport', worst, AD_TOL))
        claim = f'{fam.label}: SO(n)×SO(2) 把基点方向送到每个 e^{{iθ}}·实向量方向'

    report = LemmaReport.from_subchecks(f'reps:transitivity:{fam.token}', claim, checks, trials, seed)
    logger.info(f"{fam.label} 可迁性校验: {report.status.value}, max_residual={report.max_residual:.3e}")
    return report
