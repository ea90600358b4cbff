"""
公共工具模块
"""

from .logger import LoggerFactory
from .retry import retry, retry_with_config, RetryConfig
from .report_formatter import ReportFormatter

__all__ = [
    'LoggerFactory',
    'retry',
    'retry_with_config',
    'RetryConfig',
    'ReportFormatter',
]
