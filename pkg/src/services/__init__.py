"""
服务层模块

封装校验套件的编排逻辑，供命令行入口调用
"""

from .catalogue import CheckTask, build_tasks
from .suite_service import SuiteService, derive_seed

__all__ = ['CheckTask', 'build_tasks', 'SuiteService', 'derive_seed']
