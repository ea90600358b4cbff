"""
校验报告数据模型

SubCheck 记录单个子检查的残差与容差，
LemmaReport 汇总一组子检查，状态由子检查唯一决定
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Sequence


class ReportStatus(str, Enum):
    PASS = 'pass'
    FAIL = 'fail'


@dataclass(frozen=True)
class SubCheck:
    """
    子检查记录

    Attributes:
        name: 子检查名
        residual: 残差（越小越好，NaN 视为失败）
        tolerance: 容差
        passed: residual ≤ tolerance
        note: 补充说明
    """
    name: str
    residual: float
    tolerance: float
    passed: bool
    note: str = ''

    @classmethod
    def measure(cls, name: str, residual: float, tolerance: float, note: str = '') -> 'SubCheck':
        residual = float(residual)
        passed = math.isfinite(residual) and residual <= tolerance
        return cls(name=name, residual=residual, tolerance=float(tolerance), passed=passed, note=note)

    @classmethod
    def failure(cls, name: str, note: str) -> 'SubCheck':
        """无法计算残差时的失败记录"""
        return cls(name=name, residual=math.inf, tolerance=0.0, passed=False, note=note)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'name': self.name,
            'residual': self.residual,
            'tolerance': self.tolerance,
            'passed': self.passed,
            'note': self.note,
        }


@dataclass(frozen=True)
class LemmaReport:
    """
    一项校验的报告

    status = pass 当且仅当每个子检查的残差都不超过其容差
    """
    check_name: str
    paper_anchor: str
    status: ReportStatus
    max_residual: float
    samples: int
    seed: int
    details: List[SubCheck] = field(default_factory=list)

    @classmethod
    def from_subchecks(
        cls,
        check_name: str,
        paper_anchor: str,
        subchecks: Sequence[SubCheck],
        samples: int,
        seed: int
    ) -> 'LemmaReport':
        """
        由子检查构造报告

        Args:
            check_name: 检查名（如 'levi:n=5'）
            paper_anchor: 被校验性质的出处与文字描述
            subchecks: 子检查列表
            samples: 样本数
            seed: 使用的随机种子

        Returns:
            LemmaReport
        """
        details = list(subchecks)
        passed = bool(details) and all(s.passed for s in details)
        residuals = [s.residual for s in details]
        max_residual = max(residuals) if residuals else 0.0
        return cls(
            check_name=check_name,
            paper_anchor=paper_anchor,
            status=ReportStatus.PASS if passed else ReportStatus.FAIL,
            max_residual=max_residual,
            samples=samples,
            seed=seed,
            details=details
        )

    @property
    def passed(self) -> bool:
        return self.status == ReportStatus.PASS

    @property
    def failed_subchecks(self) -> List[SubCheck]:
        return [s for s in self.details if not s.passed]

    def to_dict(self) -> Dict[str, Any]:
        """按字段顺序输出"""
        return {
            'check_name': self.check_name,
            'paper_anchor': self.paper_anchor,
            'status': self.status.value,
            'max_residual': self.max_residual,
            'samples': self.samples,
            'seed': self.seed,
            'details': [s.to_dict() for s in self.details],
        }
