"""
迹比不等式与平坦族

trace_ratio(A) = tr((A*A)²) / (tr A*A)² ∈ [1/q, 1]，
最大曲率轨迹的判定、标准平坦族以及两两正交化构造
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Sequence, Tuple

import numpy as np

from src.core.errors import (
    BadShapeError,
    NotNormalizedError,
    NotScalarError,
    ZeroMatrixError,
    ZeroTangentError,
)
from src.core.linalg.cmatrix import (
    ComplexMatrix,
    adjoint,
    cmatrix,
    frobenius_norm,
    herm_eig,
    numerical_rank,
    random_complex,
    random_unitary,
)
from src.core.spaces.lie_spaces import (
    FamilyKind,
    HermitianFamily,
    TangentParam,
    ZERO_TANGENT,
    locus_witness,
    project_payload,
)
from src.utils import LoggerFactory

logger = LoggerFactory.get_logger(__name__)

FLAT_TOL = 1e-10
DEPENDENT_TOL = 1e-10
NORMALIZED_TOL = 1e-10
NOT_SCALAR_TOL = 1e-6
DEFAULT_RESTARTS = 64


@dataclass(frozen=True)
class FlatFamily:
    """p×q 矩阵的平坦族：任意非零组合 C 满足 C*C = Σ|t_j|²·I_q"""
    p: int
    q: int
    members: Tuple[ComplexMatrix, ...]

    @property
    def dimension(self) -> int:
        return len(self.members)


class PairStatus(str, Enum):
    MODIFIED = 'modified'
    DEPENDENT = 'dependent'


@dataclass(frozen=True)
class PairResult:
    """
    orthonormalize_pair 的结果

    Attributes:
        status: modified / dependent
        b_prime: B' = B − κA（dependent 时为 None）
        coefficient: κ = ½(λ − 2 + i(2 − μ))
        lam: (A+B)*(A+B) = λI 中的 λ
        mu: (A+iB)*(A+iB) = μI 中的 μ
    """
    status: PairStatus
    b_prime: Optional[ComplexMatrix]
    coefficient: complex
    lam: float
    mu: float

    @property
    def normalized(self) -> Optional[ComplexMatrix]:
        """把 B' 重新归一为 B'*B' = I_q"""
        if self.b_prime is None:
            return None
        q = self.b_prime.shape[1]
        return cmatrix(self.b_prime * math.sqrt(q) / frobenius_norm(self.b_prime), copy=False)


def trace_ratio(A: ComplexMatrix) -> float:
    """
    tr((A*A)²) / (tr A*A)²

    Raises:
        ZeroMatrixError: A = 0
    """
    A = np.asarray(A, dtype=np.complex128)
    gram = adjoint(A) @ A
    total = float(np.real(np.trace(gram)))
    if total <= 0.0:
        raise ZeroMatrixError("迹比要求非零矩阵", {'shape': A.shape})
    return float(np.real(np.trace(gram @ gram)) / total ** 2)


def trace_ratio_from_eigenvalues(A: ComplexMatrix) -> float:
    """Σλ²/(Σλ)²，λ 取 A*A 的特征值"""
    A = np.asarray(A, dtype=np.complex128)
    values = herm_eig(adjoint(A) @ A).values
    total = float(np.sum(values))
    if total <= 0.0:
        raise ZeroMatrixError("迹比要求非零矩阵", {'shape': A.shape})
    return float(np.sum(values ** 2) / total ** 2)


def skew_ratio_bounds(n: int) -> Tuple[float, float]:
    """n 阶反对称矩阵的迹比范围 (1/(2⌊n/2⌋), 1/2)"""
    return 1.0 / (2 * (n // 2)), 0.5


def vector_defect(v: ComplexMatrix) -> float:
    """‖v‖⁴ − |vᵗv|²，满足 0 ≤ defect ≤ ‖v‖⁴"""
    v = np.asarray(v, dtype=np.complex128).reshape(-1)
    norm_sq = float(np.real(np.vdot(v, v)))
    return norm_sq ** 2 - abs(complex(v @ v)) ** 2


def equality_locus_residual(family: HermitianFamily, t: TangentParam) -> float:
    """
    到最大曲率轨迹的残差，在轨迹上为 0

    SU/Sp/SO*(偶数): ‖A*A − (tr A*A / q)·I‖ / tr A*A
    SO(p,2): (‖v‖⁴ − |vᵗv|²) / ‖v‖⁴
    SO*(奇数): (前 n−1 个特征值与其均值的偏差 + 最小特征值) / tr A*A

    Raises:
        ZeroTangentError: 参数为零
    """
    payload = np.asarray(t.payload)
    norm = frobenius_norm(payload)
    if norm <= ZERO_TANGENT:
        raise ZeroTangentError("切向量为零", {'family': family.label})

    if family.kind == FamilyKind.SO_P2:
        return vector_defect(payload) / norm ** 4

    gram = adjoint(payload) @ payload
    total = float(np.real(np.trace(gram)))
    q = gram.shape[0]

    if family.kind == FamilyKind.SOSTAR_2N and family.n % 2 == 1:
        values = herm_eig(gram).values
        top = values[1:]
        return float((np.sum(np.abs(top - np.mean(top))) + abs(values[0])) / total)

    return frobenius_norm(gram - (total / q) * np.eye(q)) / total


def standard_flat_family(p: int, q: int) -> FlatFamily:
    """
    m = ⌊p/q⌋ 个堆叠单位阵：A_j 在第 (j−1)q+1 … jq 行放 I_q，其余为零

    Raises:
        BadShapeError: p < q
    """
    if q < 1 or p < q:
        raise BadShapeError("标准平坦族要求 p ≥ q ≥ 1", {'p': p, 'q': q})
    members = []
    for j in range(p // q):
        A = np.zeros((p, q), dtype=np.complex128)
        A[j * q:(j + 1) * q, :] = np.eye(q)
        members.append(cmatrix(A, copy=False))
    return FlatFamily(p=p, q=q, members=tuple(members))


def combination(members: Sequence[ComplexMatrix], coefficients: Sequence[complex]) -> np.ndarray:
    return sum(c * np.asarray(A) for c, A in zip(coefficients, members))


def flat_family_residual(members: Sequence[ComplexMatrix], rng: np.random.Generator, tuples: int = 100) -> float:
    """随机系数组下组合恒等式 C*C = Σ|t|²·I 的最大相对残差"""
    worst = 0.0
    q = np.asarray(members[0]).shape[1]
    for _ in range(tuples):
        t = np.asarray(random_complex((1, len(members)), rng))[0]
        C = combination(members, t)
        weight = float(np.sum(np.abs(t) ** 2))
        residual = frobenius_norm(adjoint(C) @ C - weight * np.eye(q)) / weight
        worst = max(worst, residual)
    return worst


def is_flat_family(members: Sequence[ComplexMatrix], rng: np.random.Generator, tuples: int = 100) -> bool:
    """成员线性无关且组合恒等式在 FLAT_TOL 内成立"""
    stacked = np.column_stack([np.asarray(A).reshape(-1) for A in members])
    if numerical_rank(stacked, tol=1e-8) < len(members):
        return False
    return flat_family_residual(members, rng, tuples) <= FLAT_TOL


def stacked_column_rank(members: Sequence[ComplexMatrix]) -> int:
    """(A_1, …, A_k) 横向拼接后的列秩"""
    return numerical_rank(np.hstack([np.asarray(A) for A in members]))


def _scalar_part(G: np.ndarray) -> Tuple[float, float]:
    """G ≈ cI 时返回 (c, ‖G − cI‖)"""
    q = G.shape[0]
    c = float(np.real(np.trace(G))) / q
    return c, frobenius_norm(G - c * np.eye(q))


def orthonormalize_pair(A: ComplexMatrix, B: ComplexMatrix) -> PairResult:
    """
    两两正交化：B' = B − ½(λ − 2 + i(2 − μ))·A，B' = 0 或 B'*A = 0

    Args:
        A: 满足 A*A = I_q
        B: 满足 B*B = I_q

    Raises:
        NotNormalizedError: A 或 B 未归一
        NotScalarError: (A+B)*(A+B) 不是数量矩阵
    """
    A = np.asarray(A, dtype=np.complex128)
    B = np.asarray(B, dtype=np.complex128)
    q = A.shape[1]
    identity_q = np.eye(q)
    for name, X in (('A', A), ('B', B)):
        defect = frobenius_norm(adjoint(X) @ X - identity_q)
        if defect > NORMALIZED_TOL:
            raise NotNormalizedError(f"{name}*{name} 不是单位阵", {'defect': defect})

    S = A + B
    lam, lam_defect = _scalar_part(adjoint(S) @ S)
    if lam_defect > NOT_SCALAR_TOL:
        raise NotScalarError("(A+B)*(A+B) 不是数量矩阵", {'defect': lam_defect})
    T = A + 1j * B
    mu, mu_defect = _scalar_part(adjoint(T) @ T)
    if mu_defect > NOT_SCALAR_TOL:
        raise NotScalarError("(A+iB)*(A+iB) 不是数量矩阵", {'defect': mu_defect})

    coefficient = 0.5 * complex(lam - 2.0, 2.0 - mu)
    b_prime = B - coefficient * A
    if frobenius_norm(b_prime) <= DEPENDENT_TOL:
        return PairResult(PairStatus.DEPENDENT, None, coefficient, lam, mu)
    return PairResult(PairStatus.MODIFIED, cmatrix(b_prime, copy=False), coefficient, lam, mu)


def _normalize(family: HermitianFamily, X: np.ndarray) -> np.ndarray:
    if family.kind == FamilyKind.SO_P2:
        return X / np.linalg.norm(X)
    q = X.shape[1]
    return X * math.sqrt(q) / frobenius_norm(X)


def _candidate(family: HermitianFamily, members: List[np.ndarray], rng: np.random.Generator) -> np.ndarray:
    """
    随机候选：已有成员的随机组合加上一个新的轨迹点。
    SU 的新点取自已有列的正交补（维数足够时），其余族直接取随机轨迹点
    """
    if family.kind == FamilyKind.SU_PQ:
        p, q = family.p, family.q
        used = np.hstack(members)
        free = p - used.shape[1]
        U = np.asarray(random_unitary(p, rng))
        if free >= q:
            projector = np.eye(p) - used @ adjoint(used)
            basis, _, _ = np.linalg.svd(projector @ U)
            fresh = basis[:, :free] @ np.asarray(random_unitary(free, rng))[:, :q]
        else:
            fresh = U[:, :q]
    else:
        fresh = np.asarray(locus_witness(family, rng).payload)
    mix = np.asarray(random_complex((1, len(members)), rng))[0] * 0.5
    candidate = combination(members, mix) + _normalize(family, fresh)
    return _normalize(family, project_payload(family, candidate))


def _residual_of_span(family: HermitianFamily, members: List[np.ndarray], rng: np.random.Generator) -> float:
    worst = 0.0
    for _ in range(32):
        t = np.asarray(random_complex((1, len(members)), rng))[0]
        C = project_payload(family, combination(members, t))
        worst = max(worst, equality_locus_residual(family, TangentParam(family, C)))
    return worst


def max_flat_dimension_search(
    family: HermitianFamily,
    trials: int,
    seed: int,
    restarts: int = DEFAULT_RESTARTS
) -> int:
    """
    贪心扩展随机轨迹点，返回找到的最大平坦子空间维数

    每一步生成 trials 个候选；SU 族逐个与已有成员做 orthonormalize_pair
    剥离分量，其它族直接检验扩张后的张成是否仍在轨迹上。
    维数尝试上限为 ⌊p/q⌋ + 2（SU）或 3（其它族）

    Args:
        family: 群族
        trials: 每步候选数 (≥ 1)
        seed: 随机种子
        restarts: 独立重启次数

    Returns:
        找到的最大维数（构造性下界）
    """
    if trials < 1:
        raise ValueError("trials 必须 ≥ 1")
    rng = np.random.default_rng(seed)
    cap = family.p // family.q + 2 if family.kind == FamilyKind.SU_PQ else 3
    best = 0

    for _ in range(restarts):
        members = [_normalize(family, np.asarray(locus_witness(family, rng).payload))]
        extended = True
        while extended and len(members) < cap:
            extended = False
            for _ in range(trials):
                candidate = _candidate(family, members, rng)
                if family.kind == FamilyKind.SU_PQ:
                    accepted = _strip_against(members, candidate)
                    if accepted is None:
                        continue
                    candidate = accepted
                if _independent(members, candidate) and \
                        _residual_of_span(family, members + [candidate], rng) <= FLAT_TOL:
                    members.append(candidate)
                    extended = True
                    break
        best = max(best, len(members))
        if best >= cap:
            break

    logger.debug(f"{family.label} 平坦子空间搜索完成: dim={best}")
    return best


def _strip_against(members: List[np.ndarray], candidate: np.ndarray) -> Optional[np.ndarray]:
    """依次对每个成员做 orthonormalize_pair；不满足假设或线性相关时返回 None"""
    current = candidate
    for A in members:
        try:
            result = orthonormalize_pair(A, current)
        except (NotScalarError, NotNormalizedError):
            return None
        if result.status == PairStatus.DEPENDENT:
            return None
        current = np.asarray(result.normalized)
    return current


def _independent(members: List[np.ndarray], candidate: np.ndarray) -> bool:
    stacked = np.column_stack([np.asarray(X).reshape(-1) for X in members + [candidate]])
    return numerical_rank(stacked, tol=1e-8) == stacked.shape[1]
