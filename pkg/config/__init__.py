"""
配置管理模块

支持:
- 扁平 key = value 配置文件
- 环境变量覆盖（HCL_ 前缀）
- 命令行参数覆盖
"""

from .settings import Settings, SuiteConfig, ToleranceConfig, OutputConfig, KNOWN_CHECKS, get_settings
from .loader import ConfigLoader

__all__ = [
    'Settings',
    'SuiteConfig',
    'ToleranceConfig',
    'OutputConfig',
    'KNOWN_CHECKS',
    'get_settings',
    'ConfigLoader',
]
