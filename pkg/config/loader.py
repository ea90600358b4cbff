"""
配置加载器

支持从扁平 key = value 文本文件、环境变量 (HCL_*) 和命令行参数加载配置
"""

import os
from pathlib import Path
from typing import Any, Callable, Dict, Mapping, Optional
import logging

from src.core.errors import ConfigParseError
from .settings import (
    Settings,
    SuiteConfig,
    ToleranceConfig,
    OutputConfig,
    init_settings
)

logger = logging.getLogger(__name__)

ENV_PREFIX = 'HCL_'

_TRUE = {'1', 'true', 'yes', 'on'}
_FALSE = {'0', 'false', 'no', 'off'}


def _as_bool(value: Any) -> bool:
    if isinstance(value, bool):
        return value
    text = str(value).strip().lower()
    if text in _TRUE:
        return True
    if text in _FALSE:
        return False
    raise ValueError(f"无法解析为布尔值: {value!r}")


def _as_list(value: Any) -> list:
    """逗号或空白分隔的列表"""
    if isinstance(value, (list, tuple)):
        return list(value)
    return [item for item in str(value).replace(',', ' ').split() if item]


def _as_families(value: Any) -> list:
    if isinstance(value, (list, tuple)):
        return list(value)
    return str(value).split()


def _as_sizes(value: Any) -> tuple:
    return tuple(int(item) for item in _as_list(value))


class ConfigLoader:
    """
    配置加载器

    支持:
    - 扁平 key = value 配置文件（# 开头为注释，键可带点号如 tolerance.bound）
    - 环境变量覆盖（前缀 HCL_，键转大写、点号转下划线）
    - 命令行覆盖（优先级最高）
    """

    def __init__(self, config_file: Optional[str] = None):
        """
        初始化配置加载器

        Args:
            config_file: 配置文件路径，默认为 suite.conf
        """
        self.config_file = Path(config_file) if config_file else Path('suite.conf')
        self._raw_config: Dict[str, str] = {}
        self._overrides: Dict[str, Any] = {}

    def load(self, overrides: Optional[Mapping[str, Any]] = None) -> Settings:
        """
        加载配置

        Args:
            overrides: 命令行覆盖项，值为 None 的键忽略

        Returns:
            Settings 配置对象

        Raises:
            ConfigParseError: 文件格式错误、值无法解析或校验失败
        """
        if self.config_file.exists():
            self._raw_config = self._load_file(self.config_file)
            logger.info(f"已加载配置文件: {self.config_file}")
        else:
            logger.warning(f"配置文件不存在: {self.config_file}，使用默认配置")

        self._overrides = {k: v for k, v in (overrides or {}).items() if v is not None}

        settings = self._build_settings()
        settings.validate()

        init_settings(settings)

        return settings

    @staticmethod
    def _load_file(file_path: Path) -> Dict[str, str]:
        """解析扁平 key = value 文件"""
        entries: Dict[str, str] = {}
        try:
            text = file_path.read_text(encoding='utf-8')
        except OSError as e:
            raise ConfigParseError(f"读取配置文件失败: {e}", {'path': str(file_path)}) from e

        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split('#', 1)[0].strip()
            if not line:
                continue
            if '=' not in line:
                raise ConfigParseError(
                    "配置行缺少 '='",
                    {'path': str(file_path), 'line': lineno, 'text': raw.strip()}
                )
            key, value = (part.strip() for part in line.split('=', 1))
            if not key:
                raise ConfigParseError("配置键为空", {'path': str(file_path), 'line': lineno})
            entries[key] = value
        return entries

    def _build_settings(self) -> Settings:
        """构建 Settings 对象"""
        defaults = SuiteConfig()
        out = self._get('out', None)
        text_out = self._get('text_out', None)

        suite_config = SuiteConfig(
            families=self._typed('families', defaults.families, _as_families),
            samples=self._typed('samples', defaults.samples, int),
            seed=self._typed('seed', defaults.seed, int),
            tol=self._typed('tol', defaults.tol, float),
            checks=self._typed('checks', defaults.checks, _as_list),
            output_path=Path(out) if out else None,
            text_output_path=Path(text_out) if text_out else None,
            restarts=self._typed('restarts', defaults.restarts, int),
            trials=self._typed('trials', defaults.trials, int),
            workers=self._typed('workers', defaults.workers, int),
            heavy_samples=self._typed('heavy_samples', defaults.heavy_samples, int),
            levi_sizes=self._typed('levi_sizes', defaults.levi_sizes, _as_sizes),
        )

        tolerance_config = ToleranceConfig(**{
            name: self._typed(f'tolerance.{name}', value, float)
            for name, value in vars(ToleranceConfig()).items()
        })

        output_config = OutputConfig(
            log_dir=Path(self._get('output.log_dir', 'log')),
            log_to_file=self._typed('output.log_to_file', False, _as_bool),
            pretty_print=self._typed('output.pretty_print', True, _as_bool),
        )

        return Settings(
            suite=suite_config,
            tolerance=tolerance_config,
            output=output_config
        )

    def _typed(self, key: str, default: Any, convert: Callable[[Any], Any]) -> Any:
        value = self._get(key, None)
        if value is None:
            return default
        try:
            return convert(value)
        except (TypeError, ValueError) as e:
            raise ConfigParseError(f"配置项 {key} 无法解析", {'value': value, 'error': str(e)}) from e

    def _get(self, key: str, default: Any = None) -> Any:
        """
        获取配置值

        优先级：命令行 > 环境变量 > 配置文件 > 默认值

        Args:
            key: 配置键
            default: 默认值

        Returns:
            配置值
        """
        if key in self._overrides:
            return self._overrides[key]

        env_key = ENV_PREFIX + key.upper().replace('.', '_')
        env_value = os.getenv(env_key)
        if env_value is not None:
            return env_value

        return self._raw_config.get(key, default)

    @staticmethod
    def create_template(output_path: str = 'suite.conf.template') -> None:
        """
        创建配置模板文件

        Args:
            output_path: 输出路径
        """
        suite = SuiteConfig()
        tolerance = ToleranceConfig()
        lines = [
            "# Hermite 对称空间数值校验配置",
            "# 优先级：命令行 > 环境变量 (HCL_*) > 本文件 > 默认值",
            "",
            "# 群族，空白分隔：su:p,q  sp:n  so:p,2  sostar:n",
            f"families = {' '.join(suite.families)}",
            f"samples = {suite.samples}",
            f"seed = {suite.seed}",
            f"tol = {suite.tol:g}",
            f"checks = {','.join(suite.checks)}",
            "# out = report.json",
            "# text_out = report.txt",
            f"restarts = {suite.restarts}",
            f"trials = {suite.trials}",
            f"workers = {suite.workers}",
            f"heavy_samples = {suite.heavy_samples}",
            f"levi_sizes = {','.join(str(n) for n in suite.levi_sizes)}",
            "",
            "# 子检查阈值",
        ]
        lines += [f"tolerance.{name} = {value:g}" for name, value in vars(tolerance).items()]
        lines += [
            "",
            "output.log_dir = log",
            "output.log_to_file = false",
            "output.pretty_print = true",
        ]

        with open(output_path, 'w', encoding='utf-8') as f:
            f.write('\n'.join(lines) + '\n')

        logger.info(f"配置模板已创建: {output_path}")
