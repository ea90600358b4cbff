"""
统一日志配置工厂
"""

import logging
import sys
from pathlib import Path
from typing import Optional


class LoggerFactory:
    """
    日志工厂类

    控制台输出走 stderr，stdout 只留给报告摘要。
    格式里带线程名，并发执行的检查据此区分
    """

    FORMAT = '%(asctime)s [%(threadName)s] %(name)s - %(levelname)s - %(message)s'
    DATE_FORMAT = '%Y-%m-%d %H:%M:%S'

    _initialized = False

    @classmethod
    def setup(cls, level: int = logging.INFO, log_file: Optional[Path] = None) -> None:
        """
        配置根日志器（只生效一次）

        Args:
            level: 日志级别
            log_file: 日志文件；为 None 时只写控制台
        """
        if cls._initialized:
            return

        handlers = [logging.StreamHandler(sys.stderr)]
        if log_file is not None:
            log_file.parent.mkdir(parents=True, exist_ok=True)
            handlers.append(logging.FileHandler(log_file, encoding='utf-8'))

        logging.basicConfig(
            level=level,
            format=cls.FORMAT,
            datefmt=cls.DATE_FORMAT,
            handlers=handlers,
            force=True
        )
        cls._initialized = True

    @staticmethod
    def suite_log_file(log_dir: Path, seed: int) -> Path:
        """同一主种子的运行写同一个文件"""
        return Path(log_dir) / f'suite_seed{seed}.log'

    @classmethod
    def get_logger(cls, name: str) -> logging.Logger:
        """
        获取日志器

        库代码在导入时调用，不触发全局配置；入口 (run.py) 负责调用 setup
        """
        return logging.getLogger(name)

    @classmethod
    def reset(cls) -> None:
        """重置日志配置（主要用于测试）"""
        cls._initialized = False
        root = logging.getLogger()
        for handler in root.handlers[:]:
            root.removeHandler(handler)
            handler.close()
