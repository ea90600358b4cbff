"""
配置设置类

使用 dataclass 定义类型安全的配置
优先级：命令行 > 环境变量 (HCL_*) > 配置文件 > 默认值
"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Tuple

from src.core.errors import BadFamilyError, ConfigParseError
from src.core.spaces.lie_spaces import HermitianFamily

KNOWN_CHECKS = ('curvature', 'trace', 'youla', 'levi', 'reps', 'higgs')

DEFAULT_FAMILIES = ('su:3,2', 'su:4,2', 'su:3,3', 'sp:3', 'so:5,2', 'sostar:4')


@dataclass
class SuiteConfig:
    """校验套件配置"""
    families: List[str] = field(default_factory=lambda: list(DEFAULT_FAMILIES))
    samples: int = 10000
    seed: int = 42
    tol: float = 1e-8
    checks: List[str] = field(default_factory=lambda: list(KNOWN_CHECKS))
    output_path: Optional[Path] = None
    text_output_path: Optional[Path] = None
    restarts: int = 50            # 曲率极值搜索的重启次数
    trials: int = 64              # 平坦子空间搜索与可迁性的随机目标数
    workers: int = 4
    heavy_samples: int = 1000     # 昂贵检查的样本上限
    levi_sizes: Tuple[int, ...] = (5, 7)

    def parsed_families(self) -> List[HermitianFamily]:
        return [HermitianFamily.parse(token) for token in self.families]


@dataclass
class ToleranceConfig:
    """各子检查的具名阈值"""
    bound: float = 1e-9
    identity: float = 1e-10
    intertwining: float = 1e-8
    eigen: float = 1e-10
    extremizer: float = 1e-6


@dataclass
class OutputConfig:
    """输出配置"""
    log_dir: Path = field(default_factory=lambda: Path('log'))
    log_to_file: bool = False
    pretty_print: bool = True


@dataclass
class Settings:
    """统一配置管理"""
    suite: SuiteConfig = field(default_factory=SuiteConfig)
    tolerance: ToleranceConfig = field(default_factory=ToleranceConfig)
    output: OutputConfig = field(default_factory=OutputConfig)

    def validate(self) -> None:
        """
        校验配置

        Raises:
            ConfigParseError: 样本数、容差、检查名或群族不合法
        """
        suite = self.suite
        if suite.samples < 1:
            raise ConfigParseError("samples 必须 ≥ 1", {'samples': suite.samples})
        if not suite.tol > 0:
            raise ConfigParseError("tol 必须 > 0", {'tol': suite.tol})
        for name in ('restarts', 'trials', 'workers', 'heavy_samples'):
            if getattr(suite, name) < 1:
                raise ConfigParseError(f"{name} 必须 ≥ 1", {name: getattr(suite, name)})
        unknown = [c for c in suite.checks if c not in KNOWN_CHECKS]
        if unknown or not suite.checks:
            raise ConfigParseError("未知的检查名", {'unknown': unknown, 'known': KNOWN_CHECKS})
        if not suite.families:
            raise ConfigParseError("至少需要一个群族")
        try:
            suite.parsed_families()
        except BadFamilyError as e:
            raise ConfigParseError(f"群族解析失败: {e.message}", e.details) from e
        bad_sizes = [n for n in suite.levi_sizes if n not in (5, 7)]
        if bad_sizes:
            raise ConfigParseError("levi_sizes 只能取 5 或 7", {'levi_sizes': suite.levi_sizes})
        for name, value in vars(self.tolerance).items():
            if not value > 0:
                raise ConfigParseError(f"tolerance.{name} 必须 > 0", {name: value})

    def to_dict(self) -> dict:
        return {
            'suite': {
                'families': list(self.suite.families),
                'samples': self.suite.samples,
                'seed': self.suite.seed,
                'tol': self.suite.tol,
                'checks': list(self.suite.checks),
                'out': str(self.suite.output_path) if self.suite.output_path else None,
                'text_out': str(self.suite.text_output_path) if self.suite.text_output_path else None,
                'restarts': self.suite.restarts,
                'trials': self.suite.trials,
                'workers': self.suite.workers,
                'heavy_samples': self.suite.heavy_samples,
                'levi_sizes': list(self.suite.levi_sizes),
            },
            'tolerance': dict(vars(self.tolerance)),
            'output': {
                'log_dir': str(self.output.log_dir),
                'log_to_file': self.output.log_to_file,
                'pretty_print': self.output.pretty_print,
            },
        }


# 全局配置实例
_settings: Optional[Settings] = None


def get_settings() -> Settings:
    """获取全局配置实例"""
    global _settings
    if _settings is None:
        _settings = Settings()
    return _settings


def init_settings(settings: Settings) -> None:
    """初始化全局配置"""
    global _settings
    _settings = settings
