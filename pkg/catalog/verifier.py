"""
校验驱动

series 模式直接以符号参数构建两侧并比较精确区域；sample 模式把参数替换为确定性抽取的有理数，
重复若干次，全部通过才算 PASS。构建过程中的计算异常记为 INCONCLUSIVE，不影响其他记录。
"""

import logging
import random
import time
from fractions import Fraction
from typing import Dict, Iterable, List, Optional

from algebra.compare import compare_family, compare_values
from algebra.errors import ProfileTooSmallError, QVerifyError
from algebra.outcome import Status, VerificationOutcome
from algebra.sparse_poly import SparsePoly
from catalog.context import BuildContext
from catalog.records import SAMPLE, SERIES, IdentityRecord, catalog_list, get_record

logger = logging.getLogger(__name__)

ADD_Q = "add-q"
TIMES_ONE_PLUS_Q = "times-1-plus-q"
MUTATIONS = (ADD_Q, TIMES_ONE_PLUS_Q)

SAMPLE_DENOMINATOR = 17


def sample_candidates() -> List[Fraction]:
    """{p/r : 1 ≤ p < r ≤ 17}，去重后升序"""
    values = {Fraction(p, r) for r in range(2, SAMPLE_DENOMINATOR + 1) for p in range(1, r)}
    return sorted(values)


def effective_caps(record: IdentityRecord, overrides: Optional[Dict[str, int]] = None) -> Dict[str, int]:
    """
    合并默认上限与覆盖值；记录中不存在的变量被忽略

    Raises:
        ProfileTooSmallError: 某个上限低于记录声明的最小值
    """
    caps = dict(record.default_caps)
    for name, value in (overrides or {}).items():
        if name in caps and value is not None:
            caps[name] = int(value)
    for name, minimum in record.min_caps.items():
        if name in caps and caps[name] < minimum:
            raise ProfileTooSmallError(f"{record.id}: {name} 上限 {caps[name]} 低于最小值 {minimum}")
    return caps


def region_note(requested: Dict[str, int], compared: Dict[str, int]) -> str:
    """实际比较区域小于请求上限的变量，如 "q≤5, a≤3"；没有收缩时为空串"""
    shrunk = [
        f"{name}≤{compared[name]}"
        for name in requested
        if name in compared and compared[name] < requested[name]
    ]
    return ", ".join(shrunk)


def _mutate(value, mutation: str):
    q = SparsePoly.monomial(value.registry, 1, {"q": 1})
    if mutation == ADD_Q:
        return value + q
    if mutation == TIMES_ONE_PLUS_Q:
        return value * (1 + q)
    raise ValueError(f"未知的变异方式: {mutation}")


def evaluate(record: IdentityRecord, ctx: BuildContext, mutation: Optional[str] = None) -> VerificationOutcome:
    """构建并比较一次"""
    built = record.build(ctx)
    if isinstance(built, list):
        if mutation and built:
            labels, lhs, rhs = built[0]
            built[0] = (labels, lhs, _mutate(rhs, mutation))
        return compare_family(built)
    lhs, rhs = built
    if mutation:
        rhs = _mutate(rhs, mutation)
    return compare_values(lhs, rhs)


def _draw(record: IdentityRecord, rng: random.Random, candidates: List[Fraction]) -> Dict[str, Fraction]:
    bindings = {}
    for name in record.sample_params:
        blocked = record.poles.get(name, frozenset())
        bindings[name] = rng.choice([v for v in candidates if v not in blocked])
    return bindings


def _format_bindings(bindings: Dict[str, Fraction]) -> str:
    return ", ".join(f"{k}={v}" for k, v in bindings.items())


def verify(
    identity_id: str,
    caps: Optional[Dict[str, int]] = None,
    mode: str = SERIES,
    samples: int = 5,
    seed: int = 0,
    mutation: Optional[str] = None,
) -> VerificationOutcome:
    """
    校验一条恒等式

    Args:
        identity_id: 记录 id
        caps: 截断上限覆盖（如 {"q": 20, "a": 8}；族记录用 "n" 表示深度）
        mode: series 或 sample
        samples: 抽样次数
        seed: 随机种子
        mutation: 对右侧施加的变异（自检用）

    Raises:
        UnknownIdentityError: id 不在目录中
        ProfileTooSmallError: 上限低于最小值
    """
    record = get_record(identity_id)
    effective = effective_caps(record, caps)
    message = ""
    if mode == SAMPLE and SAMPLE not in record.modes:
        message = "该恒等式只支持级数模式，已改用级数模式"
        logger.info(f"{record.id}: {message}")
        mode = SERIES

    logger.info(f"开始校验 {record.id}（模式 {mode}，上限 {effective}）")
    started = time.perf_counter()
    try:
        if mode == SAMPLE:
            outcome = _verify_samples(record, effective, samples, seed, mutation)
        else:
            outcome = evaluate(record, record.context(effective), mutation)
            if outcome.status is Status.PASS:
                note = region_note(effective, outcome.caps)
                if note:
                    logger.warning(f"{record.id} 的精确区域小于请求上限: {note}")
                    message = f"{message}; 精确区域 {note}" if message else f"精确区域 {note}"
    except (QVerifyError, ZeroDivisionError) as exc:
        logger.warning(f"{record.id} 计算中断: {exc}")
        outcome = VerificationOutcome(status=Status.INCONCLUSIVE, message=f"计算中断: {exc}")

    outcome.identity_id = record.id
    outcome.caps = effective
    outcome.mode = mode
    outcome.elapsed_ms = (time.perf_counter() - started) * 1000
    if message:
        outcome.message = f"{message}; {outcome.message}" if outcome.message else message
    if outcome.status is Status.FAIL:
        logger.warning(f"{record.id} 校验失败，见证: {outcome.witness}")
    logger.info(f"{record.id} 校验结束: {outcome.status.value}，耗时 {outcome.elapsed_ms:.1f} ms")
    return outcome


def _verify_samples(record, caps, samples, seed, mutation) -> VerificationOutcome:
    rng = random.Random(seed)
    candidates = sample_candidates()
    for index in range(max(1, samples)):
        bindings = _draw(record, rng, candidates)
        outcome = evaluate(record, record.context(caps, bindings), mutation)
        if outcome.status is not Status.PASS:
            detail = f"样本 {index}: {_format_bindings(bindings)}"
            outcome.message = f"{detail}; {outcome.message}" if outcome.message else detail
            return outcome
    return VerificationOutcome(status=Status.PASS)


def verify_all(
    caps: Optional[Dict[str, int]] = None,
    mode: str = SERIES,
    samples: int = 5,
    seed: int = 0,
    jobs: int = 1,
    ids: Optional[Iterable[str]] = None,
    mutated: Iterable[str] = (),
) -> List[VerificationOutcome]:
    """
    校验全部（或指定的）记录；未指定 ids 时按目录顺序，否则按 ids 的顺序

    Args:
        caps: 全局上限覆盖，只作用于记录中存在的变量
        jobs: 并行进程数；1 表示在当前进程顺序执行
        ids: 只校验这些 id
        mutated: 对这些 id 的右侧施加 add-q 变异
    """
    from scheduler.task_scheduler import TaskScheduler, VerifyTask

    wanted = [r.id for r in catalog_list()] if ids is None else list(ids)
    for identity_id in wanted:
        get_record(identity_id)
    mutated = set(mutated)
    tasks = [
        VerifyTask(
            identity_id=identity_id,
            caps=dict(caps or {}),
            mode=mode,
            samples=samples,
            seed=seed,
            mutation=ADD_Q if identity_id in mutated else None,
        )
        for identity_id in wanted
    ]
    scheduler = TaskScheduler(jobs)
    scheduler.start()
    try:
        return scheduler.run(tasks)
    finally:
        scheduler.stop()


__all__ = [
    "ADD_Q", "TIMES_ONE_PLUS_Q", "MUTATIONS", "sample_candidates", "effective_caps", "region_note",
    "evaluate", "verify", "verify_all",
]
