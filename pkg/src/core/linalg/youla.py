"""
复反对称矩阵的 Youla 分解

在酉合同 A ↦ UᵗAU 下，把反对称矩阵化为 2×2 实反对称块
[[0, σ], [−σ, 0]] 的块对角形式（奇数阶时补一个零）。

构造方式：对 A*A 做 Hermite 特征分解；取特征值 σ² 的单位特征向量 u，
其伙伴 w = −conj(Au)/σ 位于同一特征空间、与 u 正交且 uᵗAw = σ，
span(u, w) 的正交补在 A 下解耦，因此可以逐对贪心构造
"""

from dataclasses import dataclass
from typing import List, Tuple

import numpy as np
from numpy.typing import NDArray

from src.core.errors import NotSkewError, PairingFailureError
from src.core.linalg.cmatrix import (
    ComplexMatrix,
    DEFAULT_TOL,
    adjoint,
    cmatrix,
    frobenius_norm,
    herm_eig,
)
from src.utils import LoggerFactory

logger = LoggerFactory.get_logger(__name__)

PAIRING_TOL = 1e-8
CLUSTER_TOL = 1e-8


@dataclass(frozen=True)
class YoulaDecomposition:
    """
    Youla 分解结果

    Attributes:
        U: 酉矩阵，UᵗAU 为规范块对角形
        sigmas: 块的模，降序且全部为正
        residual: ‖UᵗAU − 规范形‖ / ‖A‖
    """
    U: ComplexMatrix
    sigmas: Tuple[float, ...]
    residual: float

    @property
    def block_count(self) -> int:
        return len(self.sigmas)


def skew_residual(A: ComplexMatrix) -> float:
    """‖A + Aᵗ‖ / ‖A‖（零矩阵返回 0）"""
    norm = frobenius_norm(A)
    if norm == 0.0:
        return 0.0
    return frobenius_norm(A + A.T) / norm


def _require_skew(A: ComplexMatrix, tol: float) -> NDArray:
    A = np.asarray(A, dtype=np.complex128)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise NotSkewError("反对称矩阵必须是方阵", {'shape': A.shape})
    residual = skew_residual(A)
    if residual > tol:
        raise NotSkewError("矩阵不是反对称的", {'residual': residual, 'tol': tol})
    return 0.5 * (A - A.T)


def canonical_block_form(sigmas: Tuple[float, ...], n: int) -> ComplexMatrix:
    """由 σ 列表构造 n×n 的规范块对角矩阵"""
    C = np.zeros((n, n), dtype=np.complex128)
    for j, sigma in enumerate(sigmas):
        C[2 * j, 2 * j + 1] = sigma
        C[2 * j + 1, 2 * j] = -sigma
    return cmatrix(C, copy=False)


def _clusters(values: NDArray, scale: float) -> List[List[int]]:
    """把降序排列的特征值按相对间隙分簇"""
    clusters: List[List[int]] = []
    for idx in range(len(values)):
        if clusters and abs(values[clusters[-1][-1]] - values[idx]) <= CLUSTER_TOL * scale:
            clusters[-1].append(idx)
        else:
            clusters.append([idx])
    return clusters


def _project_out(v: NDArray, basis: List[NDArray]) -> NDArray:
    for _ in range(2):
        for b in basis:
            v = v - b * np.vdot(b, v)
    return v


def youla_decompose(A: ComplexMatrix, tol: float = DEFAULT_TOL) -> YoulaDecomposition:
    """
    Youla 分解

    Args:
        A: 复反对称矩阵
        tol: 反对称性与特征分解的相对容差

    Returns:
        YoulaDecomposition

    Raises:
        NotSkewError: ‖A + Aᵗ‖ > tol·‖A‖
        NoConvergenceError: 特征分解未收敛
    """
    A = _require_skew(A, tol)
    n = A.shape[0]
    norm = frobenius_norm(A)
    if norm == 0.0:
        return YoulaDecomposition(U=cmatrix(np.eye(n)), sigmas=(), residual=0.0)

    eig = herm_eig(adjoint(A) @ A, tol=tol)
    order = np.argsort(-eig.values, kind='stable')
    values = eig.values[order]
    vectors = np.asarray(eig.vectors)[:, order]
    top = float(values[0])
    zero_threshold = max(tol, 1e-14) * top

    basis: List[NDArray] = []
    sigmas: List[float] = []
    positive = [i for i in range(n) if values[i] > zero_threshold]

    for cluster in _clusters(values[positive], top):
        members = [vectors[:, positive[i]] for i in cluster]
        start = len(basis)
        while len(basis) - start < len(members):
            # 取剩余投影最长的向量，避免在简并空间里放大误差
            projected = [_project_out(v, basis) for v in members]
            lengths = [np.linalg.norm(v) for v in projected]
            best = int(np.argmax(lengths))
            if lengths[best] < 0.5:
                break
            u = projected[best] / lengths[best]
            w = A @ u
            sigma = float(np.linalg.norm(w))
            partner = _project_out(-np.conj(w) / sigma, basis + [u])
            partner = partner / np.linalg.norm(partner)
            basis.extend([u, partner])
            sigmas.append(float(np.real(u @ A @ partner)))

    # 零空间：A*A 的核向量
    for idx in range(n):
        if len(basis) == n:
            break
        v = _project_out(vectors[:, idx], basis)
        length = np.linalg.norm(v)
        if length > 0.5:
            basis.append(v / length)

    U = np.column_stack(basis)
    canonical = canonical_block_form(tuple(sigmas), n)
    residual = frobenius_norm(U.T @ A @ U - canonical) / norm
    logger.debug(f"Youla 分解完成: n={n}, blocks={len(sigmas)}, residual={residual:.2e}")
    return YoulaDecomposition(U=cmatrix(U, copy=False), sigmas=tuple(sigmas), residual=residual)


def paired_eigenvalues(A: ComplexMatrix, tol: float = PAIRING_TOL) -> List[float]:
    """
    A*A 的特征值按 (λ, λ) 成对返回，降序，奇数阶末尾补 0

    Args:
        A: 复反对称矩阵
        tol: 配对容差（相对最大特征值）

    Raises:
        NotSkewError: 不是反对称矩阵
        PairingFailureError: 非零特征值无法两两配对
    """
    A = _require_skew(A, max(tol, DEFAULT_TOL))
    n = A.shape[0]
    values = np.sort(herm_eig(adjoint(A) @ A).values)[::-1]
    top = float(values[0]) if n else 0.0
    if top <= 0.0:
        return [0.0] * n

    zero_threshold = max(tol, 1e-14) * top
    positive = [float(v) for v in values if v > zero_threshold]
    if len(positive) % 2 == 1:
        raise PairingFailureError(
            "非零特征值个数为奇数",
            {'count': len(positive), 'tol': tol}
        )

    paired: List[float] = []
    for j in range(0, len(positive), 2):
        gap = abs(positive[j] - positive[j + 1])
        if gap > tol * top:
            raise PairingFailureError(
                "特征值无法配对",
                {'gap': gap / top, 'tol': tol, 'index': j}
            )
        mean = 0.5 * (positive[j] + positive[j + 1])
        paired.extend([mean, mean])
    paired.extend([0.0] * (n - len(paired)))
    return paired
