"""
曲率极值搜索

在单位 Frobenius 球面上对 sectional_curvature 做随机重启的投影梯度上升/下降，
梯度用实坐标上的中心差分计算（步长 1e-6），
每一步后重新投影到族的线性约束并归一化
"""

from dataclasses import dataclass
from enum import Enum
from typing import List, Tuple

import numpy as np

from src.core.linalg.cmatrix import frobenius_norm
from src.core.spaces.lie_spaces import (
    FamilyKind,
    HermitianFamily,
    TangentParam,
    project_payload,
    random_tangent,
    sectional_curvature,
)
from src.utils import LoggerFactory

logger = LoggerFactory.get_logger(__name__)

FD_STEP = 1e-6
DEFAULT_ITERATIONS = 150
STALL_LIMIT = 5


class ExtremizeMode(str, Enum):
    MIN = 'min'
    MAX = 'max'


@dataclass(frozen=True)
class ExtremizeResult:
    """搜索结果：最优参数、曲率值、每次重启的终值"""
    tangent: TangentParam
    value: float
    restart_values: Tuple[float, ...]


def coordinate_directions(family: HermitianFamily) -> List[np.ndarray]:
    """
    参数空间的实坐标方向（满足族约束），每个独立元素给出 E 与 iE 两个方向
    """
    rows, cols = family.payload_shape
    directions = []
    for r in range(rows):
        for c in range(cols):
            if family.kind == FamilyKind.SP_2N and c < r:
                continue
            if family.kind == FamilyKind.SOSTAR_2N and c <= r:
                continue
            E = np.zeros((rows, cols), dtype=np.complex128)
            E[r, c] = 1.0
            E = project_payload(family, E)
            directions.append(E)
            directions.append(1j * E)
    return directions


def _objective(family: HermitianFamily, payload: np.ndarray) -> float:
    return sectional_curvature(TangentParam(family, payload))


def _gradient(family: HermitianFamily, payload: np.ndarray, directions: List[np.ndarray]) -> np.ndarray:
    grad = np.zeros_like(payload)
    for D in directions:
        forward = _objective(family, payload + FD_STEP * D)
        backward = _objective(family, payload - FD_STEP * D)
        grad = grad + (forward - backward) / (2.0 * FD_STEP) * D / np.real(np.vdot(D, D))
    # 去掉径向分量（目标函数零次齐次）
    radial = np.real(np.vdot(payload, grad)) / np.real(np.vdot(payload, payload))
    return grad - radial * payload


def _ascend(family: HermitianFamily, start: np.ndarray, sign: float, iterations: int,
            directions: List[np.ndarray]) -> Tuple[np.ndarray, float]:
    x = start
    value = _objective(family, x)
    step = 0.1
    stalls = 0
    for _ in range(iterations):
        grad = _gradient(family, x, directions)
        gnorm = frobenius_norm(grad)
        if gnorm < 1e-12:
            break
        improved = False
        while step > 1e-12:
            candidate = project_payload(family, x + sign * step * grad / gnorm)
            candidate = candidate / frobenius_norm(candidate)
            cand_value = _objective(family, candidate)
            if sign * (cand_value - value) > 0:
                gain = abs(cand_value - value)
                x, value = candidate, cand_value
                step = min(2.0 * step, 1.0)
                improved = True
                stalls = stalls + 1 if gain < 1e-14 else 0
                break
            step *= 0.5
        if not improved or stalls >= STALL_LIMIT:
            break
    return x, value


def extremize_curvature(
    family: HermitianFamily,
    mode: ExtremizeMode,
    restarts: int,
    seed: int,
    iterations: int = DEFAULT_ITERATIONS
) -> ExtremizeResult:
    """
    随机重启投影梯度搜索

    Args:
        family: 群族
        mode: min / max
        restarts: 重启次数 (≥ 1)
        seed: 随机种子
        iterations: 每次重启的最大迭代数

    Returns:
        ExtremizeResult，value 为所有重启中的最优值
    """
    if restarts < 1:
        raise ValueError("restarts 必须 ≥ 1")
    mode = ExtremizeMode(mode)
    sign = 1.0 if mode == ExtremizeMode.MAX else -1.0
    rng = np.random.default_rng(seed)
    directions = coordinate_directions(family)

    best_payload = None
    best_value = None
    finals = []
    for _ in range(restarts):
        start = np.asarray(random_tangent(family, rng).payload)
        payload, value = _ascend(family, start, sign, iterations, directions)
        finals.append(value)
        if best_value is None or sign * (value - best_value) > 0:
            best_payload, best_value = payload, value

    logger.debug(f"{family.label} {mode.value} 曲率搜索完成: {best_value:.12f}")
    return ExtremizeResult(
        tangent=TangentParam(family, best_payload),
        value=float(best_value),
        restart_values=tuple(finals)
    )
