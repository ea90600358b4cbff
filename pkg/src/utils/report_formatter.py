"""
校验报告格式化

JSON（机器可读、逐字节可复现）与文本（jinja2 模板渲染）两种输出
"""

import json
import math
import re
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from jinja2 import Environment, FileSystemLoader, StrictUndefined

from src.core.errors import WriteFailureError
from src.core.report import LemmaReport
from .logger import LoggerFactory

logger = LoggerFactory.get_logger(__name__)

TEMPLATE_DIR = Path(__file__).resolve().parents[2] / 'templates'
TEXT_TEMPLATE = 'suite_report.txt.j2'

_FLOAT_MARK = '\u0000f:'
_FLOAT_PATTERN = re.compile(r'"\\u0000f:([^"]*)"')


def _format_float(value: float) -> Any:
    """有限浮点数标记为 17 位有效数字，非有限值转为字符串"""
    if math.isnan(value):
        return 'nan'
    if math.isinf(value):
        return 'inf' if value > 0 else '-inf'
    text = format(value, '.17g')
    if 'e' not in text and '.' not in text:
        text += '.0'
    return _FLOAT_MARK + text


def _mark_floats(obj: Any) -> Any:
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, float):
        return _format_float(obj)
    if isinstance(obj, dict):
        return {k: _mark_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_mark_floats(v) for v in obj]
    return obj


def _sci(value: float) -> str:
    if not math.isfinite(value):
        return str(value)
    return f'{value:.3e}'


class ReportFormatter:
    """
    报告格式化器

    JSON 不含时间戳等随运行变化的内容，相同配置得到相同字节
    """

    def __init__(self, pretty_print: bool = True, template_dir: Optional[Path] = None):
        self.pretty_print = pretty_print
        self._env = Environment(
            loader=FileSystemLoader(str(template_dir or TEMPLATE_DIR)),
            undefined=StrictUndefined,
            keep_trailing_newline=True,
            trim_blocks=True,
            lstrip_blocks=True,
        )
        self._env.filters['sci'] = _sci

    def to_json(self, reports: Sequence[LemmaReport]) -> str:
        """
        序列化为 JSON

        顶层为数组，键按字段顺序，浮点数 17 位有效数字

        Args:
            reports: 报告列表

        Returns:
            JSON 文本
        """
        payload = _mark_floats([r.to_dict() for r in reports])
        text = json.dumps(payload, ensure_ascii=False, indent=2 if self.pretty_print else None)
        return _FLOAT_PATTERN.sub(lambda m: m.group(1), text) + '\n'

    def to_text(self, reports: Sequence[LemmaReport]) -> str:
        """渲染文本报告"""
        template = self._env.get_template(TEXT_TEMPLATE)
        return template.render(reports=list(reports), summary=self.summary(reports))

    @staticmethod
    def summary(reports: Sequence[LemmaReport]) -> Dict[str, Any]:
        failed: List[str] = [r.check_name for r in reports if not r.passed]
        return {
            'total': len(reports),
            'passed': len(reports) - len(failed),
            'failed': len(failed),
            'failed_checks': failed,
        }

    @staticmethod
    def write(content: str, path: Path) -> None:
        """
        写出报告文件

        Raises:
            WriteFailureError: 目录无法创建或文件无法写入
        """
        path = Path(path)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(content, encoding='utf-8')
        except OSError as e:
            raise WriteFailureError(f"报告写入失败: {e}", {'path': str(path)}) from e
        logger.info(f"报告已写入: {path}")
