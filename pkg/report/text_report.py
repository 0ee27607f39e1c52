"""
校验报告
生成对齐的纯文本表格和稳定的 JSON（JSON 中不含时间戳）
"""

import json
from dataclasses import dataclass, field
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, List

import pytz

from algebra.outcome import Status, VerificationOutcome

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3


def exit_code_for(outcomes: List[VerificationOutcome]) -> int:
    """有 FAIL 返回 1，否则有 INCONCLUSIVE 返回 3，全部通过返回 0"""
    statuses = {o.status for o in outcomes}
    if Status.FAIL in statuses:
        return EXIT_FAIL
    if Status.INCONCLUSIVE in statuses:
        return EXIT_INCONCLUSIVE
    return EXIT_PASS


def format_caps(caps: Dict[str, int]) -> str:
    return ",".join(f"{k}={caps[k]}" for k in sorted(caps))


@dataclass
class VerificationReport:
    """一次运行的全部校验结果"""
    outcomes: List[VerificationOutcome] = field(default_factory=list)
    update_time: str = ""

    def __post_init__(self):
        if not self.update_time:
            self.update_time = datetime.now(pytz.timezone('Asia/Shanghai')).strftime('%Y-%m-%d %H:%M:%S')

    @property
    def exit_code(self) -> int:
        return exit_code_for(self.outcomes)

    def count(self, status: Status) -> int:
        return sum(1 for o in self.outcomes if o.status is status)

    def to_dict(self, include_elapsed: bool = True) -> List[Dict[str, Any]]:
        """JSON 载荷：按运行顺序排列的结果数组"""
        payload = []
        for outcome in self.outcomes:
            item = outcome.to_dict()
            if not include_elapsed:
                item.pop("elapsed_ms", None)
            payload.append(item)
        return payload

    def to_json(self, include_elapsed: bool = True) -> str:
        return json.dumps(self.to_dict(include_elapsed), ensure_ascii=False, sort_keys=True, indent=2)

    @classmethod
    def from_dict(cls, data: List[Dict[str, Any]]) -> 'VerificationReport':
        """从 JSON 载荷恢复"""
        return cls(outcomes=[VerificationOutcome.from_dict(item) for item in data])

    def render_text(self) -> str:
        """对齐的纯文本表格"""
        lines = [f"{'恒等式':<16} {'状态':<13} {'模式':<7} {'耗时(ms)':>10}  上限"]
        lines.append("-" * 80)
        for outcome in self.outcomes:
            lines.append(
                f"{outcome.identity_id:<16} {outcome.status.value:<13} {outcome.mode:<7} "
                f"{outcome.elapsed_ms:>10.1f}  {format_caps(outcome.caps)}"
            )
            if outcome.witness is not None:
                lines.append(f"{'':<16} 见证: {outcome.witness}")
            if outcome.message:
                lines.append(f"{'':<16} 说明: {outcome.message}")
        return "\n".join(lines)

    def __str__(self) -> str:
        return self.render_text()

    def print_summary(self) -> None:
        """打印汇总信息"""
        print("=" * 80)
        print(f"校验结果：共 {len(self.outcomes)} 条恒等式")
        print("=" * 80)
        print(self.render_text())
        print("-" * 80)
        print(f"  通过: {self.count(Status.PASS)}")
        print(f"  失败: {self.count(Status.FAIL)}")
        print(f"  无法判定: {self.count(Status.INCONCLUSIVE)}")
        print(f"生成时间: {self.update_time}")

    def save(self, path: Path, include_elapsed: bool = True) -> Path:
        """保存 JSON 报告"""
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(self.to_json(include_elapsed) + "\n", encoding='utf-8')
        return path


def render_catalog(summaries: List[Dict[str, Any]]) -> str:
    """目录列表的纯文本表格"""
    lines = [f"{'恒等式':<16} {'类型':<7} {'模式':<14} {'默认上限':<28} 说明"]
    lines.append("-" * 100)
    for item in summaries:
        lines.append(
            f"{item['id']:<16} {item['kind']:<7} {'/'.join(item['modes']):<14} "
            f"{format_caps(item['caps']):<28} {item['title']}"
        )
        if item.get("citation"):
            lines.append(f"{'':<16} 出处: {item['citation']}")
    return "\n".join(lines)


def catalog_json(summaries: List[Dict[str, Any]]) -> str:
    return json.dumps(summaries, ensure_ascii=False, sort_keys=True, indent=2)


__all__ = [
    "EXIT_PASS", "EXIT_FAIL", "EXIT_USAGE", "EXIT_INCONCLUSIVE",
    "exit_code_for", "format_caps", "VerificationReport", "render_catalog", "catalog_json",
]
