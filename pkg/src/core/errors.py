"""
异常定义

所有校验相关的异常都继承自 VerificationError，
details 字段携带残差、容差、形状等信息，供日志和报告使用
"""

from typing import Any, Dict, Optional


class VerificationError(Exception):
    """校验工具包的基础异常"""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def __str__(self) -> str:
        if not self.details:
            return self.message
        extra = ', '.join(f'{k}={v}' for k, v in self.details.items())
        return f'{self.message} ({extra})'


# 线性代数

class NonFiniteError(VerificationError):
    """矩阵包含 NaN 或 Inf"""


class NonHermitianError(VerificationError):
    """矩阵不满足 Hermite 条件"""


class NoConvergenceError(VerificationError):
    """迭代达到上限仍未收敛"""


class ShapeMismatchError(VerificationError):
    """两个矩阵形状不一致"""


class BadShapeError(VerificationError):
    """矩阵形状不合法"""


# 对称空间

class BadFamilyError(VerificationError):
    """群族参数不合法"""


class PayloadShapeError(VerificationError):
    """切向量参数的形状与群族不匹配"""


class ZeroTangentError(VerificationError):
    """切向量为零"""


# 迹不等式

class ZeroMatrixError(VerificationError):
    """矩阵为零"""


class NotScalarError(VerificationError):
    """(A+B)*(A+B) 不是数量矩阵"""


class NotNormalizedError(VerificationError):
    """输入未归一化为 A*A = I_q"""


# Youla 分解 / Levi 形式

class NotSkewError(VerificationError):
    """矩阵不是反对称矩阵"""


class PairingFailureError(VerificationError):
    """特征值无法两两配对"""


class BadLengthError(VerificationError):
    """坐标长度与 n(n-1)/2 不符"""


class BadSizeError(VerificationError):
    """不支持的矩阵阶数"""


# 表示

class NotInGroupError(VerificationError):
    """群元素不属于所要求的实形式"""


class NoClosedFormError(VerificationError):
    """该群族没有群层面的闭式表达"""


# Higgs 场

class EigenspaceViolationError(VerificationError):
    """元素不在 ad(Z) 的 ±i 特征空间中"""


class BadSignError(VerificationError):
    """曲率参数符号错误"""


# 运行器

class ConfigParseError(VerificationError):
    """配置解析失败"""


class WriteFailureError(VerificationError):
    """报告写入失败"""
