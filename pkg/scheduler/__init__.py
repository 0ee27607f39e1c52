"""
Scheduler模块
提供并行校验调度
"""

from scheduler.task_scheduler import TaskScheduler, VerifyTask, resolve_jobs, run_task

__all__ = ["TaskScheduler", "VerifyTask", "resolve_jobs", "run_task"]
