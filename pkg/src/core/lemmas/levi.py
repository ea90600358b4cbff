"""
反对称矩阵上的定义函数与 Levi 形式

F(A) = (tr A*A)² − c·tr((A*A)²)，c = 2⌊n/2⌋（n = 5 时 c = 4，n = 7 时 c = 6），
F ≤ 0 且 F = 0 恰为曲率最大的轨迹。
坐标 a_j 按严格上三角逐行排列，Levi 形式 Q_{jk} = ∂²F/∂ā_j∂a_k
"""

from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np
from scipy.linalg import subspace_angles

from src.core.errors import BadLengthError, BadSizeError, NotSkewError
from src.core.lemmas.trace_bounds import trace_ratio
from src.core.linalg.cmatrix import (
    ComplexMatrix,
    adjoint,
    cmatrix,
    frobenius_norm,
    hermitian_residual,
    herm_eig,
    kernel_basis,
    random_complex,
    random_unitary,
)
from src.core.linalg.youla import skew_residual
from src.core.report import LemmaReport, SubCheck
from src.utils import LoggerFactory

logger = LoggerFactory.get_logger(__name__)

SUPPORTED_SIZES = (5, 7)
FD_STEP = 1e-3
SKEW_TOL = 1e-10
KERNEL_TOL = 1e-8
EIGEN_TOL = 1e-10
ANGLE_TOL = 1e-8
FD_TOL = 1e-6
SLICE_TOL = 1e-9
EQUIVARIANCE_TOL = 1e-9


def coordinate_count(n: int) -> int:
    return n * (n - 1) // 2


def coordinate_index(n: int, r: int, s: int) -> int:
    """
    (r, s) 元素（0 起，r < s）对应的坐标下标（0 起）

    n = 5 时 (0,1) → 0, (2,3) → 7；n = 7 时 (2,3) → 11, (4,5) → 18
    """
    if not 0 <= r < s < n:
        raise ValueError(f"需要 0 ≤ r < s < n: ({r}, {s}), n={n}")
    return r * n - r * (r + 1) // 2 + (s - r - 1)


def _pairs(n: int) -> List[Tuple[int, int]]:
    return [(r, s) for r in range(n) for s in range(r + 1, n)]


def _require_size(n: int) -> None:
    if n not in SUPPORTED_SIZES:
        raise BadSizeError("只支持 n = 5 或 n = 7", {'n': n})


@dataclass(frozen=True)
class SkewCoords:
    """n 阶反对称矩阵的严格上三角坐标"""
    n: int
    a: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.a, dtype=np.complex128).reshape(-1)
        if a.size != coordinate_count(self.n):
            raise BadLengthError(
                "坐标长度必须为 n(n−1)/2",
                {'n': self.n, 'expected': coordinate_count(self.n), 'got': a.size}
            )
        a.setflags(write=False)
        object.__setattr__(self, 'a', a)

    @classmethod
    def zeros(cls, n: int) -> 'SkewCoords':
        return cls(n, np.zeros(coordinate_count(n), dtype=np.complex128))

    @classmethod
    def unit(cls, n: int, index: int) -> 'SkewCoords':
        a = np.zeros(coordinate_count(n), dtype=np.complex128)
        a[index] = 1.0
        return cls(n, a)


@dataclass(frozen=True)
class LeviForm:
    """坐标空间上的 Hermite 形式 Q"""
    n: int
    Q: ComplexMatrix

    def __post_init__(self):
        Q = np.asarray(self.Q, dtype=np.complex128)
        size = coordinate_count(self.n)
        if Q.shape != (size, size):
            raise BadLengthError("Levi 形式阶数不符", {'n': self.n, 'shape': Q.shape})
        object.__setattr__(self, 'Q', cmatrix(Q))

    def value(self, xi: np.ndarray) -> float:
        """ξ*Qξ"""
        xi = np.asarray(xi, dtype=np.complex128)
        return float(np.real(np.vdot(xi, np.asarray(self.Q) @ xi)))


def embed_skew(c: SkewCoords) -> ComplexMatrix:
    """坐标逐行填入严格上三角，下三角取负"""
    A = np.zeros((c.n, c.n), dtype=np.complex128)
    rows, cols = np.triu_indices(c.n, k=1)
    A[rows, cols] = c.a
    A[cols, rows] = -c.a
    return cmatrix(A, copy=False)


def base_point(n: int) -> SkewCoords:
    """基点 A₀ = e_{01} + e_{23} (+ e_{45})：n = 5 时 a₁ = a₈ = 1，n = 7 时 a₁ = a₁₂ = a₁₉ = 1"""
    _require_size(n)
    a = np.zeros(coordinate_count(n), dtype=np.complex128)
    for j in range(n // 2):
        a[coordinate_index(n, 2 * j, 2 * j + 1)] = 1.0
    return SkewCoords(n, a)


def _checked_skew(n: int, A: ComplexMatrix) -> np.ndarray:
    _require_size(n)
    A = np.asarray(A, dtype=np.complex128)
    if A.shape != (n, n):
        raise BadSizeError("矩阵阶数与 n 不符", {'n': n, 'shape': A.shape})
    residual = skew_residual(A)
    if residual > SKEW_TOL:
        raise NotSkewError("矩阵不是反对称的", {'residual': residual})
    return A


def defining_function(n: int, A: ComplexMatrix) -> float:
    """
    F(A) = (tr A*A)² − 2⌊n/2⌋·tr((A*A)²)

    Raises:
        BadSizeError: n ∉ {5, 7}
        NotSkewError: A 不是反对称矩阵
    """
    A = _checked_skew(n, A)
    gram = adjoint(A) @ A
    total = float(np.real(np.trace(gram)))
    return total ** 2 - 2 * (n // 2) * float(np.real(np.trace(gram @ gram)))


def cubic_defining_function(n: int, A: ComplexMatrix) -> float:
    """n = 7 时的第二个方程 (tr A*A)³ − 36·tr((A*A)³)"""
    A = _checked_skew(n, A)
    gram = adjoint(A) @ A
    total = float(np.real(np.trace(gram)))
    return total ** 3 - 36.0 * float(np.real(np.trace(gram @ gram @ gram)))


def _elementary(n: int) -> List[np.ndarray]:
    basis = []
    for r, s in _pairs(n):
        E = np.zeros((n, n))
        E[r, s] = 1.0
        E[s, r] = -1.0
        basis.append(E)
    return basis


def levi_form_at(n: int, c0: SkewCoords) -> LeviForm:
    """
    闭式 Levi 形式

    (tr A*A)² 部分：8·a_j·ā_k + 4·tr(A*A)·δ_jk
    tr((A*A)²) 部分：−2[tr(E_jE_k·A*A) + tr(E_kE_j·AA*)]，E_j = e_rs − e_sr
    Q = 前者 − 2⌊n/2⌋·后者

    Raises:
        BadSizeError: n ∉ {5, 7}
    """
    _require_size(n)
    if c0.n != n:
        raise BadSizeError("坐标的 n 与参数不符", {'n': n, 'coords_n': c0.n})
    A = np.asarray(embed_skew(c0))
    a = c0.a
    total = float(np.real(np.trace(adjoint(A) @ A)))
    size = coordinate_count(n)

    first = 8.0 * np.outer(a, np.conj(a)) + 4.0 * total * np.eye(size)

    left = adjoint(A) @ A
    right = A @ adjoint(A)
    basis = _elementary(n)
    second = np.zeros((size, size), dtype=np.complex128)
    for j, Ej in enumerate(basis):
        for k, Ek in enumerate(basis):
            second[j, k] = -2.0 * (np.trace(Ej @ Ek @ left) + np.trace(Ek @ Ej @ right))

    Q = first - 2 * (n // 2) * second
    return LeviForm(n, Q)


def _real_hessian(n: int, x: np.ndarray, step: float) -> np.ndarray:
    """实变量 (Re a, Im a) 上的中心混合差分 Hessian"""
    size = x.size
    rows, cols = np.triu_indices(n, k=1)

    def value(y: np.ndarray) -> float:
        a = y[:size // 2] + 1j * y[size // 2:]
        A = np.zeros((n, n), dtype=np.complex128)
        A[rows, cols] = a
        A[cols, rows] = -a
        return defining_function(n, A)

    H = np.zeros((size, size))
    for i in range(size):
        for j in range(i, size):
            ei = np.zeros(size)
            ej = np.zeros(size)
            ei[i] = step
            ej[j] = step
            H[i, j] = (value(x + ei + ej) - value(x + ei - ej)
                       - value(x - ei + ej) + value(x - ei - ej)) / (4.0 * step * step)
            H[j, i] = H[i, j]
    return H


def levi_form_finite_difference(n: int, c0: SkewCoords, step: float = FD_STEP) -> LeviForm:
    """
    Wirtinger 组合 ¼[∂x_j∂x_k + ∂y_j∂y_k + i(∂y_j∂x_k − ∂x_j∂y_k)]，
    中心差分加一次 Richardson 外推（F 为四次多项式，外推后只剩舍入误差）
    """
    _require_size(n)
    size = coordinate_count(n)
    x = np.concatenate([np.real(c0.a), np.imag(c0.a)])
    coarse = _real_hessian(n, x, step)
    fine = _real_hessian(n, x, step / 2.0)
    H = (4.0 * fine - coarse) / 3.0

    xx = H[:size, :size]
    yy = H[size:, size:]
    xy = H[:size, size:]
    yx = H[size:, :size]
    Q = 0.25 * (xx + yy + 1j * (yx - xy))
    return LeviForm(n, Q)


def slice_directions(n: int) -> List[int]:
    """末列坐标 e_{(r, n−1)}，r = 0 … n−2（n = 5 时为 e₄, e₇, e₉, e₁₀）"""
    return [coordinate_index(n, r, n - 1) for r in range(n - 1)]


def slice_value(n: int, coords: np.ndarray) -> float:
    """F 在 A₀ + Σ c_r·e_{(r, n−1)} 上的值"""
    coords = np.asarray(coords, dtype=np.complex128).reshape(-1)
    if coords.size != n - 1:
        raise BadLengthError("切片坐标长度必须为 n − 1", {'n': n, 'got': coords.size})
    a = np.array(base_point(n).a)
    a[slice_directions(n)] = coords
    return defining_function(n, embed_skew(SkewCoords(n, a)))


def slice_identity(n: int, coords: np.ndarray) -> float:
    """切片上的闭式值 −4(⌊n/2⌋ − 1)·(Σ|c_r|²)²"""
    s = float(np.sum(np.abs(np.asarray(coords)) ** 2))
    return -4.0 * (n // 2 - 1) * s ** 2


def expected_kernel(n: int) -> Optional[np.ndarray]:
    """n = 5 时的核 span{e₄, e₇, e₉, e₁₀, e₁ + e₈}；n = 7 只断言维数"""
    if n != 5:
        return None
    size = coordinate_count(n)
    columns = []
    for index in slice_directions(n):
        e = np.zeros(size, dtype=np.complex128)
        e[index] = 1.0
        columns.append(e)
    columns.append(np.asarray(base_point(n).a))
    return np.column_stack(columns)


def expected_kernel_dimension(n: int) -> int:
    """末列的 n − 1 个方向加上 A₀ 自身的伸缩方向"""
    return n


def _random_coords(n: int, rng: np.random.Generator) -> SkewCoords:
    return SkewCoords(n, np.asarray(random_complex((1, coordinate_count(n)), rng))[0])


def verify_negative_semidefinite_kernel(
    n: int,
    samples: int,
    seed: int,
    tol: float = EIGEN_TOL,
    levi: Optional[LeviForm] = None,
    fd_points: int = 10
) -> LemmaReport:
    """
    校验 A₀ 处 Levi 形式半负定及其核

    Args:
        n: 5 或 7
        samples: 切片恒等式与等变性的随机样本数
        seed: 随机种子
        tol: 特征值上界容差
        levi: 替换闭式 Q（用于反例测试）
        fd_points: 与有限差分比对的随机基点个数

    Returns:
        LemmaReport，失败记录在子检查中
    """
    _require_size(n)
    rng = np.random.default_rng(seed)
    c0 = base_point(n)
    closed = levi_form_at(n, c0)
    form = levi if levi is not None else closed
    Q = np.asarray(form.Q)
    checks: List[SubCheck] = []

    checks.append(SubCheck.measure('hermitian', hermitian_residual(Q), 1e-12))

    values = herm_eig(Q).values
    checks.append(SubCheck.measure(
        'max_eigenvalue', max(float(values[-1]), 0.0), tol,
        note=f'λ_max={values[-1]:.3e}'
    ))

    kernel = kernel_basis(Q, tol=KERNEL_TOL)
    expected_dim = expected_kernel_dimension(n)
    checks.append(SubCheck.measure(
        'kernel_dimension', abs(kernel.shape[1] - expected_dim), 0.0,
        note=f'dim={kernel.shape[1]}, expected={expected_dim}'
    ))

    reference = expected_kernel(n)
    if reference is not None:
        if kernel.shape[1] == reference.shape[1]:
            angle = float(np.max(subspace_angles(kernel, reference)))
            checks.append(SubCheck.measure('kernel_span', angle, ANGLE_TOL))
        else:
            checks.append(SubCheck.failure('kernel_span', '核维数不符，无法比较'))

    # 闭式与有限差分比对：基点加若干随机点
    worst = frobenius_norm(np.asarray(closed.Q) - np.asarray(levi_form_finite_difference(n, c0).Q))
    for _ in range(fd_points):
        point = _random_coords(n, rng)
        exact = np.asarray(levi_form_at(n, point).Q)
        diff = exact - np.asarray(levi_form_finite_difference(n, point).Q)
        scale = max(1.0, frobenius_norm(exact))
        worst = max(worst, frobenius_norm(diff) / scale)
    checks.append(SubCheck.measure('finite_difference', worst, FD_TOL))

    slice_worst = 0.0
    positive = 0
    for _ in range(samples):
        coords = np.asarray(random_complex((1, n - 1), rng))[0]
        value = slice_value(n, coords)
        expected = slice_identity(n, coords)
        slice_worst = max(slice_worst, abs(value - expected) / max(1.0, abs(expected)))
        if value >= 0.0:
            positive += 1
    checks.append(SubCheck.measure('slice_identity', slice_worst, SLICE_TOL))
    checks.append(SubCheck.measure(
        'slice_negative', float(positive), 0.0, note='非平凡核方向上 F < 0 的反例个数'
    ))

    equivariance = 0.0
    ratio_link = 0.0
    for _ in range(samples):
        A = np.asarray(embed_skew(_random_coords(n, rng)))
        U = np.asarray(random_unitary(n, rng))
        F = defining_function(n, A)
        total = float(np.real(np.trace(adjoint(A) @ A)))
        equivariance = max(equivariance, abs(defining_function(n, U.T @ A @ U) - F) / total ** 2)
        ratio_link = max(ratio_link, abs(F / total ** 2 - (1.0 - 2 * (n // 2) * trace_ratio(A))))
    checks.append(SubCheck.measure('congruence_invariance', equivariance, EQUIVARIANCE_TOL))
    checks.append(SubCheck.measure('trace_ratio_link', ratio_link, EQUIVARIANCE_TOL))

    A0 = embed_skew(c0)
    checks.append(SubCheck.measure('base_point_on_locus', abs(defining_function(n, A0)), EIGEN_TOL))
    if n == 7:
        checks.append(SubCheck.measure(
            'cubic_at_base_point', abs(cubic_defining_function(n, A0)), EIGEN_TOL,
            note='第二个方程只报告，不参与核的论证'
        ))

    claim = (
        f'n={n} 时定义函数在基点的 Levi 形式半负定，核为 {expected_dim} 维，'
        f'沿非平凡核方向 F = −{4 * (n // 2 - 1)}·(Σ|c|²)² < 0'
    )
    report = LemmaReport.from_subchecks(f'levi:n={n}', claim, checks, samples, seed)
    logger.info(f"Levi 形式校验 n={n}: {report.status.value}, max_residual={report.max_residual:.3e}")
    return report


def perturbed_levi_form(n: int, index: int = 0, shift: float = 1.0) -> LeviForm:
    """在对角元上加扰动的 Q，用作反例"""
    form = levi_form_at(n, base_point(n))
    Q = np.array(form.Q)
    Q[index, index] += shift
    return LeviForm(n, Q)
