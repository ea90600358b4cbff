"""
校验套件服务

按配置展开检查任务，用线程池并发执行，
报告顺序固定为配置顺序，与完成顺序无关
"""

import hashlib
import time
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Dict, List, Optional

from config.settings import Settings
from src.core.report import LemmaReport, SubCheck
from src.utils import LoggerFactory, ReportFormatter
from .catalogue import CheckTask, build_tasks

logger = LoggerFactory.get_logger(__name__)


def derive_seed(master: int, name: str) -> int:
    """子种子 = sha256(f"{master}:{name}") 的前 8 字节（跨进程稳定）"""
    digest = hashlib.sha256(f'{master}:{name}'.encode('utf-8')).digest()
    return int.from_bytes(digest[:8], 'big')


class SuiteService:
    """
    校验套件服务

    单个检查抛出的异常被记为失败子检查 error:<异常名>，不会中断整个运行
    """

    def __init__(self, settings: Settings):
        """
        初始化套件服务

        Args:
            settings: 已校验的配置对象
        """
        self.settings = settings
        self.formatter = ReportFormatter(pretty_print=settings.output.pretty_print)

    def tasks(self) -> List[CheckTask]:
        return build_tasks(self.settings)

    def _execute(self, task: CheckTask) -> LemmaReport:
        seed = derive_seed(self.settings.suite.seed, task.name)
        logger.info(f"开始检查 {task.name} (seed={seed})")
        started = time.perf_counter()
        try:
            report = task.run(seed)
        except Exception as e:
            logger.error(f"检查 {task.name} 异常: {e}", exc_info=True)
            report = LemmaReport.from_subchecks(
                task.name,
                task.paper_anchor,
                [SubCheck.failure(f'error:{type(e).__name__}', str(e))],
                task.samples,
                seed
            )
        elapsed = time.perf_counter() - started
        logger.info(f"检查 {task.name} 完成: {report.status.value}，耗时 {elapsed:.2f}s")
        return report

    def run(self) -> List[LemmaReport]:
        """
        执行全部选中的检查

        Returns:
            报告列表，顺序与配置一致
        """
        tasks = self.tasks()
        workers = min(self.settings.suite.workers, max(len(tasks), 1))
        logger.info(f"开始执行校验套件: {len(tasks)} 项检查，{workers} 个线程")

        started = time.perf_counter()
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(self._execute, task) for task in tasks]
            reports = [future.result() for future in futures]

        summary = self.formatter.summary(reports)
        logger.info(
            f"校验套件完成: 通过 {summary['passed']}/{summary['total']}，"
            f"耗时 {time.perf_counter() - started:.2f}s"
        )
        return reports

    def write_reports(
        self,
        reports: List[LemmaReport],
        json_path: Optional[Path] = None,
        text_path: Optional[Path] = None
    ) -> Dict[str, Optional[str]]:
        """
        写出 JSON / 文本报告，路径缺省时取配置

        Raises:
            WriteFailureError: 写入失败
        """
        json_path = json_path or self.settings.suite.output_path
        text_path = text_path or self.settings.suite.text_output_path
        if json_path:
            self.formatter.write(self.formatter.to_json(reports), json_path)
        if text_path:
            self.formatter.write(self.formatter.to_text(reports), text_path)
        return {
            'json': str(json_path) if json_path else None,
            'text': str(text_path) if text_path else None,
        }
