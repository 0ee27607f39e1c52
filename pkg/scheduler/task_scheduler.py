"""
校验任务调度器
把相互独立的恒等式校验分发到多个进程，结果按提交顺序返回
"""

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from algebra.outcome import VerificationOutcome

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class VerifyTask:
    """单条校验任务（可跨进程传递）"""
    identity_id: str
    caps: Dict[str, int] = field(default_factory=dict)
    mode: str = "series"
    samples: int = 5
    seed: int = 0
    mutation: Optional[str] = None


def run_task(task: VerifyTask) -> VerificationOutcome:
    """在工作进程中执行一条任务"""
    from catalog.verifier import verify

    return verify(
        task.identity_id,
        caps=task.caps,
        mode=task.mode,
        samples=task.samples,
        seed=task.seed,
        mutation=task.mutation,
    )


def resolve_jobs(jobs: int) -> int:
    """0 或负数表示使用全部 CPU"""
    if jobs and jobs > 0:
        return jobs
    return os.cpu_count() or 1


class TaskScheduler:
    """校验任务调度器"""
    
    def __init__(self, jobs: int = 1):
        """
        初始化调度器
        
        Args:
            jobs: 工作进程数；1 表示在当前进程顺序执行
        """
        self.jobs = resolve_jobs(jobs)
        self.executor: Optional[ProcessPoolExecutor] = None
    
    def start(self):
        """启动调度器"""
        if self.jobs > 1 and self.executor is None:
            self.executor = ProcessPoolExecutor(max_workers=self.jobs)
        logger.info(f"校验调度器已启动，工作进程数: {self.jobs}")
    
    def stop(self):
        """停止调度器"""
        if self.executor is not None:
            self.executor.shutdown()
            self.executor = None
        logger.info("校验调度器已停止")
    
    def run(self, tasks: List[VerifyTask]) -> List[VerificationOutcome]:
        """
        执行全部任务
        
        Returns:
            与 tasks 顺序一致的结果列表（与完成顺序无关）
        """
        if self.executor is None or len(tasks) <= 1:
            return [run_task(task) for task in tasks]
        futures = [self.executor.submit(run_task, task) for task in tasks]
        return [future.result() for future in futures]
