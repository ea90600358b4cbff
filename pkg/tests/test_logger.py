"""
日志工厂测试
"""

import logging

from src.utils import LoggerFactory


def test_writes_suite_log_file(tmp_path):
    log_file = LoggerFactory.suite_log_file(tmp_path / 'log', 42)
    assert log_file.name == 'suite_seed42.log'
    LoggerFactory.setup(log_file=log_file)
    LoggerFactory.get_logger('tests.logger').info('开始检查 levi:n=5')
    for handler in logging.getLogger().handlers:
        handler.flush()
    text = log_file.read_text(encoding='utf-8')
    assert 'tests.logger - INFO - 开始检查 levi:n=5' in text
    assert '[MainThread]' in text


def test_setup_only_once(tmp_path):
    LoggerFactory.setup(level=logging.WARNING)
    LoggerFactory.setup(level=logging.DEBUG, log_file=tmp_path / 'x.log')
    assert logging.getLogger().level == logging.WARNING
    assert not (tmp_path / 'x.log').exists()


def test_reset_removes_handlers():
    LoggerFactory.setup()
    LoggerFactory.reset()
    assert logging.getLogger().handlers == []
