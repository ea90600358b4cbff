"""
sl₂(ℝ) ≅ su(1,1)

两种实形式之间用 Cayley 变换 C = (1/√2)[[1, −i], [1, i]] 互换：
su(1,1) = C·sl₂(ℝ)·C*。su(1,1) 的基取
K0 = diag(i, −i)，P1 = [[0, 1], [1, 0]]，P2 = [[0, −i], [i, 0]]
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Tuple

import numpy as np

from src.core.errors import NotInGroupError
from src.core.linalg.cmatrix import ComplexMatrix, adjoint, cmatrix, expm, frobenius_norm

FORM_TOL = 1e-12
GROUP_TOL = 1e-8

CAYLEY = np.array([[1.0, -1j], [1.0, 1j]]) / math.sqrt(2.0)

K0 = np.array([[1j, 0.0], [0.0, -1j]])
P1 = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=np.complex128)
P2 = np.array([[0.0, -1j], [1j, 0.0]])

_SU11_FORM = np.diag([1.0, -1.0]).astype(np.complex128)


class RealForm(str, Enum):
    SU11 = 'su11'
    SL2R = 'sl2r'


@dataclass(frozen=True)
class Sl2Element:
    """
    sl₂ 元素

    su(1,1) 写法 [[ia, β], [β̄, −ia]]，sl₂(ℝ) 写法 [[a, b], [c, −a]]
    """
    matrix: ComplexMatrix
    form: RealForm

    def __post_init__(self):
        X = np.asarray(self.matrix, dtype=np.complex128)
        if X.shape != (2, 2):
            raise ValueError(f"sl₂ 元素必须是 2×2 矩阵: {X.shape}")
        scale = max(1.0, frobenius_norm(X))
        if abs(np.trace(X)) > FORM_TOL * scale:
            raise ValueError("sl₂ 元素必须无迹")
        if algebra_form_residual(X, self.form) > FORM_TOL * scale:
            raise ValueError(f"矩阵不属于 {self.form.value}")
        object.__setattr__(self, 'matrix', cmatrix(X))
        object.__setattr__(self, 'form', RealForm(self.form))

    @classmethod
    def su11(cls, a: float, beta: complex) -> 'Sl2Element':
        return cls(np.array([[1j * a, beta], [np.conj(beta), -1j * a]]), RealForm.SU11)

    @classmethod
    def sl2r(cls, a: float, b: float, c: float) -> 'Sl2Element':
        return cls(np.array([[a, b], [c, -a]], dtype=np.complex128), RealForm.SL2R)

    @classmethod
    def from_coordinates(cls, a: float, b: float, c: float) -> 'Sl2Element':
        """a·K0 + b·P1 + c·P2"""
        return cls(a * K0 + b * P1 + c * P2, RealForm.SU11)

    def to_form(self, form: RealForm) -> 'Sl2Element':
        form = RealForm(form)
        if form == self.form:
            return self
        X = np.asarray(self.matrix)
        if form == RealForm.SU11:
            return Sl2Element(CAYLEY @ X @ adjoint(CAYLEY), form)
        Y = adjoint(CAYLEY) @ X @ CAYLEY
        return Sl2Element(np.real(Y).astype(np.complex128), form)

    def coordinates(self) -> Tuple[float, float, float]:
        """su(1,1) 基下的坐标 (a, b, c)"""
        X = np.asarray(self.to_form(RealForm.SU11).matrix)
        a = float(np.real(-1j * X[0, 0]))
        b = float(np.real(0.5 * (X[0, 1] + X[1, 0])))
        c = float(np.real((X[1, 0] - X[0, 1]) / 2j))
        return a, b, c

    def bracket(self, other: 'Sl2Element') -> 'Sl2Element':
        Y = np.asarray(other.to_form(self.form).matrix)
        X = np.asarray(self.matrix)
        return Sl2Element(X @ Y - Y @ X, self.form)

    def scaled(self, factor: float) -> 'Sl2Element':
        return Sl2Element(np.asarray(self.matrix) * factor, self.form)


def algebra_form_residual(X: np.ndarray, form: RealForm) -> float:
    """su(1,1): ‖X*K + KX‖；sl₂(ℝ): ‖Im X‖"""
    if RealForm(form) == RealForm.SU11:
        return frobenius_norm(adjoint(X) @ _SU11_FORM + _SU11_FORM @ X)
    return float(np.linalg.norm(np.imag(X)))


def group_form_residual(g: np.ndarray, form: RealForm) -> float:
    """SU(1,1): ‖g*Kg − K‖ + |det g − 1|；SL₂(ℝ): ‖Im g‖ + |det g − 1|"""
    g = np.asarray(g, dtype=np.complex128)
    det_defect = abs(np.linalg.det(g) - 1.0)
    if RealForm(form) == RealForm.SU11:
        return frobenius_norm(adjoint(g) @ _SU11_FORM @ g - _SU11_FORM) + det_defect
    return float(np.linalg.norm(np.imag(g))) + det_defect


def group_element(x: Sl2Element) -> ComplexMatrix:
    """exp(x)，落在 x 所在实形式的群中"""
    return expm(x.matrix)


def su11_parameters(g: np.ndarray) -> Tuple[complex, complex]:
    """
    SU(1,1) 元素 [[α, β], [β̄, ᾱ]] 的 (α, β)

    Raises:
        NotInGroupError: 不满足 |α|² − |β|² = 1 或形状不符
    """
    g = np.asarray(g, dtype=np.complex128)
    residual = group_form_residual(g, RealForm.SU11)
    if g.shape != (2, 2) or residual > GROUP_TOL:
        raise NotInGroupError("不是 SU(1,1) 元素", {'residual': residual, 'tol': GROUP_TOL})
    return complex(g[0, 0]), complex(g[0, 1])


def random_sl2(rng: np.random.Generator, form: RealForm = RealForm.SU11, radius: float = 2.0) -> Sl2Element:
    """‖x‖ ≤ radius 的随机元素"""
    a, b, c = rng.standard_normal(3)
    x = Sl2Element.from_coordinates(a, b, c)
    norm = frobenius_norm(x.matrix)
    x = x.scaled(radius * rng.random() / norm)
    return x.to_form(form)
