"""
回归清单

每行一条记录："id q_cap param_caps mode expected_status"，"#" 开头为注释。
q_cap 与 param_caps 可写 "-" 表示沿用默认值；param_caps 形如 "a=8,b=8" 或 "n=10"。
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from algebra.errors import ManifestError
from algebra.outcome import Status, VerificationOutcome
from report.text_report import EXIT_FAIL, EXIT_PASS, VerificationReport

logger = logging.getLogger(__name__)

MODES = ("series", "sample")


@dataclass(frozen=True)
class ManifestEntry:
    line_number: int
    identity_id: str
    caps: Dict[str, int] = field(default_factory=dict)
    mode: str = "series"
    expected: Status = Status.PASS


def parse_caps(text: str, line_number: int = 0) -> Dict[str, int]:
    """'a=8,b=8' -> {'a': 8, 'b': 8}"""
    caps: Dict[str, int] = {}
    if text in ("", "-"):
        return caps
    for part in text.split(","):
        name, sep, value = part.partition("=")
        if not sep or not name.strip():
            raise ManifestError(line_number, f"无法解析上限 {part!r}")
        try:
            caps[name.strip()] = int(value)
        except ValueError:
            raise ManifestError(line_number, f"上限 {part!r} 不是整数") from None
        if caps[name.strip()] < 0:
            raise ManifestError(line_number, f"上限必须非负 {part!r}")
    return caps


def parse_manifest_line(line: str, line_number: int) -> Optional[ManifestEntry]:
    """解析一行；空行和注释返回 None"""
    text = line.split("#", 1)[0].strip()
    if not text:
        return None
    fields = text.split()
    if len(fields) != 5:
        raise ManifestError(line_number, f"需要 5 列，实际 {len(fields)} 列")
    identity_id, q_cap, param_caps, mode, expected = fields
    caps = parse_caps(param_caps, line_number)
    if q_cap != "-":
        caps.update(parse_caps(f"q={q_cap}", line_number))
    if mode not in MODES:
        raise ManifestError(line_number, f"未知模式 {mode!r}")
    try:
        status = Status(expected.upper())
    except ValueError:
        raise ManifestError(line_number, f"未知的预期状态 {expected!r}") from None
    return ManifestEntry(line_number, identity_id, caps, mode, status)


def load_manifest(path: Path) -> List[ManifestEntry]:
    """
    读取回归清单

    Raises:
        ManifestError: 文件不存在或某行格式错误（携带行号）
    """
    path = Path(path)
    if not path.exists():
        raise ManifestError(0, f"回归清单不存在: {path}")
    entries = []
    with open(path, 'r', encoding='utf-8') as f:
        for number, line in enumerate(f, start=1):
            entry = parse_manifest_line(line, number)
            if entry is not None:
                entries.append(entry)
    return entries


def compare_expectations(entries: List[ManifestEntry], outcomes: List[VerificationOutcome]) -> Tuple[int, List[str]]:
    """
    Returns:
        (退出码, 不符合预期的描述)
    """
    mismatches = []
    for entry, outcome in zip(entries, outcomes):
        if outcome.status is entry.expected:
            logger.info(f"第 {entry.line_number} 行 {entry.identity_id}: {outcome.status.value}（符合预期）")
        else:
            text = f"第 {entry.line_number} 行 {entry.identity_id}: 预期 {entry.expected.value}，实际 {outcome.status.value}"
            logger.warning(text)
            mismatches.append(text)
    return (EXIT_FAIL if mismatches else EXIT_PASS), mismatches


def report_path_for(manifest: Path, output_dir: str = "") -> Path:
    """JSON 报告默认写在清单旁边"""
    manifest = Path(manifest)
    directory = Path(output_dir) if output_dir else manifest.parent
    return directory / f"{manifest.stem}.report.json"


__all__ = [
    "ManifestEntry", "parse_caps", "parse_manifest_line", "load_manifest",
    "compare_expectations", "report_path_for", "VerificationReport",
]
