"""
四类经典 Hermite 对称空间

p^{1,0} 的参数化、不变度量 g(A, B) = tr(AB*)、全纯截面曲率
K_H(M) = −tr([M, M*]²) / (tr MM*)² 及其上下界
"""

import math
import re
from dataclasses import dataclass
from enum import Enum
from typing import Tuple

import numpy as np

from src.core.errors import BadFamilyError, PayloadShapeError, ZeroTangentError
from src.core.linalg.cmatrix import (
    ComplexMatrix,
    adjoint,
    cmatrix,
    commutator,
    frobenius_norm,
    random_complex,
    random_unitary,
)

ZERO_TANGENT = 1e-14
CONSTRAINT_TOL = 1e-12


class FamilyKind(str, Enum):
    """群族类型"""
    SU_PQ = 'SU_pq'
    SP_2N = 'Sp_2n'
    SO_P2 = 'SO_p2'
    SOSTAR_2N = 'SOstar_2n'


_PREFIXES = {
    'su': FamilyKind.SU_PQ,
    'sp': FamilyKind.SP_2N,
    'so': FamilyKind.SO_P2,
    'sostar': FamilyKind.SOSTAR_2N,
}


@dataclass(frozen=True)
class HermitianFamily:
    """
    经典 Hermite 族描述符

    SU(p,q) 使用 p, q；Sp(2n)、SO*(2n) 的 n 存在 p 中；SO(p,2) 只用 p
    """
    kind: FamilyKind
    p: int
    q: int = 0

    def __post_init__(self):
        if self.kind == FamilyKind.SU_PQ:
            ok = self.q >= 1 and self.p >= self.q
        elif self.kind == FamilyKind.SP_2N:
            ok = self.p >= 1
        elif self.kind == FamilyKind.SO_P2:
            ok = self.p >= 2
        else:
            ok = self.p >= 2
        if not ok:
            raise BadFamilyError("群族参数不合法", {'kind': self.kind.value, 'p': self.p, 'q': self.q})

    @classmethod
    def su(cls, p: int, q: int) -> 'HermitianFamily':
        return cls(FamilyKind.SU_PQ, p, q)

    @classmethod
    def sp(cls, n: int) -> 'HermitianFamily':
        return cls(FamilyKind.SP_2N, n)

    @classmethod
    def so(cls, p: int) -> 'HermitianFamily':
        return cls(FamilyKind.SO_P2, p)

    @classmethod
    def sostar(cls, n: int) -> 'HermitianFamily':
        return cls(FamilyKind.SOSTAR_2N, n)

    @classmethod
    def parse(cls, text: str) -> 'HermitianFamily':
        """
        解析 'su:3,2' / 'sp:3' / 'so:5,2' / 'sostar:4'

        Raises:
            BadFamilyError: 格式错误
        """
        match = re.fullmatch(r'\s*([a-z]+)\s*:\s*(\d+)\s*(?:,\s*(\d+))?\s*', text.lower())
        if not match or match.group(1) not in _PREFIXES:
            raise BadFamilyError("无法解析群族", {'text': text})
        kind = _PREFIXES[match.group(1)]
        first = int(match.group(2))
        second = match.group(3)
        if kind == FamilyKind.SU_PQ:
            if second is None:
                raise BadFamilyError("SU 需要两个参数 su:p,q", {'text': text})
            return cls.su(first, int(second))
        if kind == FamilyKind.SO_P2:
            if second is not None and int(second) != 2:
                raise BadFamilyError("只支持 SO(p,2)", {'text': text})
            return cls.so(first)
        if second is not None:
            raise BadFamilyError("该群族只有一个参数", {'text': text})
        return cls(kind, first)

    @property
    def n(self) -> int:
        return self.p

    @property
    def token(self) -> str:
        """命令行写法"""
        if self.kind == FamilyKind.SU_PQ:
            return f'su:{self.p},{self.q}'
        if self.kind == FamilyKind.SO_P2:
            return f'so:{self.p},2'
        prefix = 'sp' if self.kind == FamilyKind.SP_2N else 'sostar'
        return f'{prefix}:{self.p}'

    @property
    def label(self) -> str:
        if self.kind == FamilyKind.SU_PQ:
            return f'SU({self.p},{self.q})'
        if self.kind == FamilyKind.SP_2N:
            return f'Sp({2 * self.p})'
        if self.kind == FamilyKind.SO_P2:
            return f'SO({self.p},2)'
        return f'SO*({2 * self.p})'

    @property
    def matrix_size(self) -> int:
        if self.kind == FamilyKind.SU_PQ:
            return self.p + self.q
        if self.kind == FamilyKind.SO_P2:
            return self.p + 2
        return 2 * self.p

    @property
    def payload_shape(self) -> Tuple[int, int]:
        if self.kind == FamilyKind.SU_PQ:
            return (self.p, self.q)
        if self.kind == FamilyKind.SO_P2:
            return (self.p, 1)
        return (self.p, self.p)

    @property
    def real_rank(self) -> int:
        if self.kind == FamilyKind.SU_PQ:
            return self.q
        if self.kind == FamilyKind.SP_2N:
            return self.p
        if self.kind == FamilyKind.SO_P2:
            return 2
        return self.p // 2

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class TangentParam:
    """p^{1,0} 元素的自由参数：A（SU/Sp/SO*）或列向量 v（SO(p,2)）"""
    family: HermitianFamily
    payload: ComplexMatrix

    def __post_init__(self):
        payload = np.asarray(self.payload)
        if payload.ndim == 1 and self.family.kind == FamilyKind.SO_P2:
            payload = payload.reshape(-1, 1)
        if payload.shape != self.family.payload_shape:
            raise PayloadShapeError(
                "参数形状与群族不匹配",
                {'family': self.family.label, 'expected': self.family.payload_shape, 'got': payload.shape}
            )
        norm = frobenius_norm(payload)
        if self.family.kind == FamilyKind.SP_2N:
            defect = frobenius_norm(payload - payload.T)
            if defect > CONSTRAINT_TOL * max(norm, 1.0):
                raise PayloadShapeError("Sp 参数必须对称", {'defect': defect})
        elif self.family.kind == FamilyKind.SOSTAR_2N:
            defect = frobenius_norm(payload + payload.T)
            if defect > CONSTRAINT_TOL * max(norm, 1.0):
                raise PayloadShapeError("SO* 参数必须反对称", {'defect': defect})
        object.__setattr__(self, 'payload', cmatrix(payload))

    def scaled(self, factor: complex) -> 'TangentParam':
        return TangentParam(self.family, self.payload * factor)


@dataclass(frozen=True)
class CurvatureBounds:
    """曲率上下界，lower ≤ upper < 0"""
    lower: float
    upper: float

    def __post_init__(self):
        if not (self.lower <= self.upper < 0):
            raise ValueError(f"曲率界不合法: ({self.lower}, {self.upper})")

    def contains(self, value: float, slack: float = 0.0) -> bool:
        return self.lower - slack <= value <= self.upper + slack


def symplectic_unit(n: int) -> ComplexMatrix:
    """
    n×n 的 J = [[0, I_m], [−I_m, 0]]，m = ⌊n/2⌋，奇数 n 时末行末列补零
    """
    m = n // 2
    J = np.zeros((n, n), dtype=np.complex128)
    J[:m, m:2 * m] = np.eye(m)
    J[m:2 * m, :m] = -np.eye(m)
    return cmatrix(J, copy=False)


def project_payload(family: HermitianFamily, payload: np.ndarray) -> np.ndarray:
    """投影到族的线性约束：Sp 对称化，SO* 反对称化"""
    if family.kind == FamilyKind.SP_2N:
        return 0.5 * (payload + payload.T)
    if family.kind == FamilyKind.SOSTAR_2N:
        return 0.5 * (payload - payload.T)
    return payload


def embed_tangent(t: TangentParam) -> ComplexMatrix:
    """
    把参数嵌入为 p^{1,0} 中的完整矩阵 M

    SU:  [[0, A], [0, 0]]
    Sp:  [[A, iA], [iA, −A]]
    SO:  [[0_p, (v, iv)], [(v, iv)ᵗ, 0_2]]
    SO*: [[iA, −A], [−A, −iA]]
    """
    family = t.family
    A = np.asarray(t.payload)
    N = family.matrix_size
    M = np.zeros((N, N), dtype=np.complex128)
    if family.kind == FamilyKind.SU_PQ:
        M[:family.p, family.p:] = A
    elif family.kind == FamilyKind.SP_2N:
        n = family.p
        M[:n, :n] = A
        M[:n, n:] = 1j * A
        M[n:, :n] = 1j * A
        M[n:, n:] = -A
    elif family.kind == FamilyKind.SO_P2:
        p = family.p
        v = A[:, 0]
        M[:p, p] = v
        M[:p, p + 1] = 1j * v
        M[p, :p] = v
        M[p + 1, :p] = 1j * v
    else:
        n = family.p
        M[:n, :n] = 1j * A
        M[:n, n:] = -A
        M[n:, :n] = -A
        M[n:, n:] = -1j * A
    return cmatrix(M, copy=False)


def extract_payload(family: HermitianFamily, M: ComplexMatrix) -> TangentParam:
    """embed_tangent 在 p^{1,0} 上的逆"""
    M = np.asarray(M)
    if M.shape != (family.matrix_size, family.matrix_size):
        raise PayloadShapeError("矩阵阶数与群族不匹配", {'family': family.label, 'got': M.shape})
    if family.kind == FamilyKind.SU_PQ:
        payload = M[:family.p, family.p:]
    elif family.kind == FamilyKind.SP_2N:
        payload = project_payload(family, M[:family.p, :family.p])
    elif family.kind == FamilyKind.SO_P2:
        payload = M[:family.p, family.p:family.p + 1]
    else:
        payload = project_payload(family, -M[:family.p, family.p:])
    return TangentParam(family, payload)


def center_matrix(family: HermitianFamily) -> ComplexMatrix:
    """
    𝔨 中心的生成元 Z，ad(Z) 在 p^{1,0} 上取值 i

    SU(p,q): i·diag(q/(p+q)·I_p, −p/(p+q)·I_q)
    Sp, SO*: Ω/2，Ω = [[0, I_n], [−I_n, 0]]
    SO(p,2): e_{p,p+1} − e_{p+1,p}
    """
    N = family.matrix_size
    if family.kind == FamilyKind.SU_PQ:
        p, q = family.p, family.q
        diag = np.concatenate([np.full(p, q / (p + q)), np.full(q, -p / (p + q))])
        return cmatrix(1j * np.diag(diag))
    Z = np.zeros((N, N), dtype=np.complex128)
    if family.kind == FamilyKind.SO_P2:
        p = family.p
        Z[p, p + 1] = 1.0
        Z[p + 1, p] = -1.0
        return cmatrix(Z, copy=False)
    n = family.p
    Z[:n, n:] = 0.5 * np.eye(n)
    Z[n:, :n] = -0.5 * np.eye(n)
    return cmatrix(Z, copy=False)


def project_holomorphic(family: HermitianFamily, X: ComplexMatrix) -> ComplexMatrix:
    """X 在 p^{1,0} 上的分量 ½(X − i[Z, X])"""
    Z = center_matrix(family)
    return cmatrix(0.5 * (np.asarray(X) - 1j * commutator(Z, X)), copy=False)


def sectional_curvature(t: TangentParam) -> float:
    """
    全纯截面曲率 −tr([M, M*]²) / (tr MM*)²

    Raises:
        ZeroTangentError: 参数范数 ≤ 1e-14
    """
    if frobenius_norm(t.payload) <= ZERO_TANGENT:
        raise ZeroTangentError("切向量为零", {'family': t.family.label})
    M = embed_tangent(t)
    Ms = adjoint(M)
    bracket = commutator(M, Ms)
    numerator = np.real(np.trace(bracket @ bracket))
    denominator = np.real(np.trace(M @ Ms)) ** 2
    return float(-numerator / denominator)


def curvature_bounds(family: HermitianFamily) -> CurvatureBounds:
    """各族的曲率上下界"""
    if family.kind == FamilyKind.SU_PQ:
        return CurvatureBounds(-2.0, -2.0 / min(family.p, family.q))
    if family.kind == FamilyKind.SP_2N:
        return CurvatureBounds(-2.0, -2.0 / family.p)
    if family.kind == FamilyKind.SO_P2:
        return CurvatureBounds(-1.0, -0.5)
    return CurvatureBounds(-1.0, -1.0 / (family.p // 2))


def normalized_curvature_bounds(family: HermitianFamily) -> CurvatureBounds:
    """把最小曲率归一到 −1 后的界，等于 (−1, −1/rank)"""
    bounds = curvature_bounds(family)
    scale = abs(bounds.lower)
    return CurvatureBounds(bounds.lower / scale, bounds.upper / scale)


def random_tangent(family: HermitianFamily, rng: np.random.Generator) -> TangentParam:
    """标准复高斯 → 投影到约束 → 单位 Frobenius 范数"""
    raw = np.asarray(random_complex(family.payload_shape, rng))
    payload = project_payload(family, raw)
    return TangentParam(family, payload / frobenius_norm(payload))


def locus_witness(family: HermitianFamily, rng: np.random.Generator) -> TangentParam:
    """
    曲率最大（最接近零）的轨迹上的随机点

    SU: 等距嵌入 A*A = I_q；Sp: 酉对称 UUᵗ；SO(p,2): e^{iθ}·实向量；
    SO*: U·J·Uᵗ（奇数阶 J 补零）
    """
    scale = 0.5 + rng.random()
    if family.kind == FamilyKind.SU_PQ:
        U = np.asarray(random_unitary(family.p, rng))
        payload = U[:, :family.q]
    elif family.kind == FamilyKind.SP_2N:
        U = np.asarray(random_unitary(family.p, rng))
        payload = U @ U.T
    elif family.kind == FamilyKind.SO_P2:
        v = rng.standard_normal(family.p)
        payload = (np.exp(2j * math.pi * rng.random()) * v / np.linalg.norm(v)).reshape(-1, 1)
    else:
        U = np.asarray(random_unitary(family.p, rng))
        payload = U @ np.asarray(symplectic_unit(family.p)) @ U.T
    return TangentParam(family, scale * project_payload(family, payload))


def rank_one_witness(family: HermitianFamily, rng: np.random.Generator) -> TangentParam:
    """
    曲率最小的轨迹上的随机点

    SU: 秩一 xyᵗ；Sp: uuᵗ；SO(p,2): 迷向向量 Σz² = 0；SO*: 秩二 u∧w
    """
    if family.kind == FamilyKind.SU_PQ:
        x = np.asarray(random_complex((family.p, 1), rng))
        y = np.asarray(random_complex((1, family.q), rng))
        payload = x @ y
    elif family.kind == FamilyKind.SP_2N:
        u = np.asarray(random_complex((family.p, 1), rng))
        payload = u @ u.T
    elif family.kind == FamilyKind.SO_P2:
        Q, _ = np.linalg.qr(rng.standard_normal((family.p, 2)))
        payload = ((Q[:, 0] + 1j * Q[:, 1]) / math.sqrt(2.0)).reshape(-1, 1)
    else:
        u = np.asarray(random_complex((family.p, 1), rng))
        w = np.asarray(random_complex((family.p, 1), rng))
        payload = u @ w.T - w @ u.T
    return TangentParam(family, payload)
