"""
稠密复矩阵运算

ComplexMatrix 即只读的二维 complex128 numpy 数组。
Hermite 特征分解采用循环 Jacobi 方法，矩阵指数采用缩放平方 + Taylor 级数，
两者都不依赖 numpy.linalg 的求解器（测试里才拿它们做对照）
"""

import math
from dataclasses import dataclass
from typing import Any, Tuple

import numpy as np
from numpy.typing import NDArray
from scipy.stats import unitary_group

from src.core.errors import (
    BadShapeError,
    NoConvergenceError,
    NonFiniteError,
    NonHermitianError,
    ShapeMismatchError,
)
from src.utils import LoggerFactory

logger = LoggerFactory.get_logger(__name__)

ComplexMatrix = NDArray[np.complex128]

DEFAULT_TOL = 1e-10
MAX_SWEEPS = 100
KERNEL_FLOOR = 1e-12
_EPS = np.finfo(np.float64).eps


@dataclass(frozen=True)
class EigenResult:
    """Hermite 特征分解结果，values 升序，vectors 的列为对应特征向量"""
    values: NDArray[np.float64]
    vectors: ComplexMatrix
    sweeps: int = 0


def cmatrix(data: Any, copy: bool = True) -> ComplexMatrix:
    """
    构造只读复矩阵

    Args:
        data: 任意可转为二维数组的数据
        copy: 是否复制

    Returns:
        complex128 只读数组

    Raises:
        BadShapeError: 不是非空二维数组
        NonFiniteError: 含 NaN/Inf
    """
    arr = np.array(data, dtype=np.complex128, copy=copy)
    if arr.ndim != 2 or arr.shape[0] == 0 or arr.shape[1] == 0:
        raise BadShapeError("需要非空二维矩阵", {'shape': arr.shape})
    if not np.all(np.isfinite(arr)):
        raise NonFiniteError("矩阵含有非有限元素", {'shape': arr.shape})
    arr.setflags(write=False)
    return arr


def identity(n: int) -> ComplexMatrix:
    return cmatrix(np.eye(n))


def zeros(rows: int, cols: int) -> ComplexMatrix:
    return cmatrix(np.zeros((rows, cols)))


def adjoint(A: ComplexMatrix) -> ComplexMatrix:
    return np.conj(A).T


def trace(A: ComplexMatrix) -> complex:
    return complex(np.trace(A))


def commutator(A: ComplexMatrix, B: ComplexMatrix) -> ComplexMatrix:
    """[A, B] = AB − BA"""
    return A @ B - B @ A


def frobenius_norm(A: ComplexMatrix) -> float:
    return float(np.linalg.norm(A))


def frobenius_inner(A: ComplexMatrix, B: ComplexMatrix) -> complex:
    """
    不变度量 g(A, B) = tr(A B*)

    Raises:
        ShapeMismatchError: 形状不同
    """
    A = np.asarray(A)
    B = np.asarray(B)
    if A.shape != B.shape:
        raise ShapeMismatchError("内积两侧形状不同", {'left': A.shape, 'right': B.shape})
    return complex(np.sum(A * np.conj(B)))


def hermitian_residual(H: ComplexMatrix) -> float:
    """‖H − H*‖ / max(‖H‖, 1e-300)"""
    norm = frobenius_norm(H)
    if norm == 0.0:
        return 0.0
    return frobenius_norm(H - adjoint(H)) / norm


def _require_square(M: ComplexMatrix, what: str) -> None:
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise BadShapeError(f"{what} 需要方阵", {'shape': M.shape})


def _off_norm(H: NDArray) -> float:
    """非对角部分的 Frobenius 范数（直接求和，不用 ‖H‖² − Σ|h_ii|²）"""
    return float(np.linalg.norm(H - np.diag(np.diag(H))))


def _jacobi_rotation(H: NDArray, V: NDArray, p: int, q: int, floor: float = 0.0) -> None:
    """
    消去 H[p, q]（原地）：先用相位把 b 变为实数，再做实 Jacobi 旋转

    |b| ≤ eps·sqrt(|a·d|) 或 |b| ≤ floor 时直接置零，不做旋转
    """
    b = H[p, q]
    abs_b = abs(b)
    a = H[p, p].real
    d = H[q, q].real
    if abs_b <= floor or abs_b <= _EPS * math.sqrt(abs(a * d)):
        H[p, q] = 0.0
        H[q, p] = 0.0
        return
    phase = b / abs_b

    tau = (d - a) / (2.0 * abs_b)
    if abs(tau) > 1e150:
        t = 0.5 / tau
    else:
        t = math.copysign(1.0, tau) / (abs(tau) + math.sqrt(1.0 + tau * tau))
    c = 1.0 / math.sqrt(1.0 + t * t)
    s = t * c

    # G = diag(1, conj(phase)) · [[c, s], [-s, c]]
    G = np.array([[c, s], [-s * np.conj(phase), c * np.conj(phase)]])
    idx = [p, q]
    H[:, idx] = H[:, idx] @ G
    H[idx, :] = np.conj(G).T @ H[idx, :]
    H[p, q] = 0.0
    H[q, p] = 0.0
    H[p, p] = H[p, p].real
    H[q, q] = H[q, q].real
    V[:, idx] = V[:, idx] @ G


def herm_eig(H: ComplexMatrix, tol: float = DEFAULT_TOL, max_sweeps: int = MAX_SWEEPS) -> EigenResult:
    """
    Hermite 矩阵特征分解（循环 Jacobi）

    Args:
        H: Hermite 方阵
        tol: 相对容差，控制对称性检查和残差 ‖Hv − λv‖ ≤ tol·‖H‖
        max_sweeps: 最大扫描次数

    Returns:
        EigenResult，特征值升序

    Raises:
        NonHermitianError: ‖H − H*‖ > tol·‖H‖
        NoConvergenceError: 扫描次数用尽
    """
    H = np.asarray(H, dtype=np.complex128)
    _require_square(H, "herm_eig")
    n = H.shape[0]

    residual = hermitian_residual(H)
    if residual > tol:
        raise NonHermitianError("输入不是 Hermite 矩阵", {'residual': residual, 'tol': tol})

    work = 0.5 * (H + adjoint(H))
    vectors = np.eye(n, dtype=np.complex128)
    norm = frobenius_norm(work)
    if norm == 0.0 or n == 1:
        values = np.real(np.diag(work)).copy()
        return EigenResult(values=values, vectors=cmatrix(vectors), sweeps=0)

    threshold = max(1e-3 * tol, 10.0 * n * _EPS) * norm
    floor = 1e-3 * _EPS * norm
    sweeps = 0
    while _off_norm(work) > threshold:
        if sweeps >= max_sweeps:
            raise NoConvergenceError(
                "Jacobi 迭代未收敛",
                {'n': n, 'sweeps': sweeps, 'off_norm': _off_norm(work)}
            )
        for p in range(n - 1):
            for q in range(p + 1, n):
                _jacobi_rotation(work, vectors, p, q, floor)
        sweeps += 1

    values = np.real(np.diag(work))
    order = np.argsort(values, kind='stable')
    logger.debug(f"Jacobi 收敛: n={n}, sweeps={sweeps}")
    return EigenResult(
        values=values[order].copy(),
        vectors=cmatrix(vectors[:, order]),
        sweeps=sweeps
    )


def expm(M: ComplexMatrix) -> ComplexMatrix:
    """
    矩阵指数：缩放到 ‖M‖₁ ≤ 1/2 后求 Taylor 和，再平方回去

    Args:
        M: 方阵

    Returns:
        exp(M)
    """
    M = np.asarray(M, dtype=np.complex128)
    _require_square(M, "expm")
    n = M.shape[0]

    norm = float(np.max(np.sum(np.abs(M), axis=0))) if n else 0.0
    squarings = 0
    if norm > 0.5:
        squarings = int(math.ceil(math.log2(norm / 0.5)))
    A = M / (2.0 ** squarings)

    result = np.eye(n, dtype=np.complex128)
    term = np.eye(n, dtype=np.complex128)
    for k in range(1, 30):
        term = term @ A / k
        result = result + term
        if np.max(np.abs(term)) <= _EPS * np.max(np.abs(result)):
            break

    for _ in range(squarings):
        result = result @ result
    return cmatrix(result, copy=False)


def kernel_basis(H: ComplexMatrix, tol: float = DEFAULT_TOL) -> NDArray[np.complex128]:
    """
    Hermite 矩阵的核

    阈值 max(tol·max(1, max|λ|), 1e-12)

    Returns:
        n×k 数组，列为正交归一的核向量（k 可以为 0）
    """
    eig = herm_eig(H, tol=tol)
    scale = max(1.0, float(np.max(np.abs(eig.values))))
    threshold = max(tol * scale, KERNEL_FLOOR)
    mask = np.abs(eig.values) <= threshold
    return np.asarray(eig.vectors)[:, mask]


def numerical_rank(A: ComplexMatrix, tol: float = DEFAULT_TOL) -> int:
    """A*A 的非零特征值个数（相对最大特征值）"""
    A = np.asarray(A, dtype=np.complex128)
    gram = adjoint(A) @ A
    values = herm_eig(gram, tol=tol).values
    top = float(np.max(np.abs(values))) if values.size else 0.0
    if top == 0.0:
        return 0
    return int(np.sum(values > tol * top))


def random_complex(shape: Tuple[int, int], rng: np.random.Generator) -> ComplexMatrix:
    """i.i.d. 标准复高斯元素，E|z|² = 1"""
    real = rng.standard_normal(shape)
    imag = rng.standard_normal(shape)
    return cmatrix((real + 1j * imag) / math.sqrt(2.0), copy=False)


def random_unitary(n: int, rng: np.random.Generator) -> ComplexMatrix:
    """Haar 分布酉矩阵"""
    if n == 1:
        return cmatrix([[np.exp(2j * np.pi * rng.random())]])
    return cmatrix(unitary_group.rvs(n, random_state=rng), copy=False)
