"""
主启动脚本
命令行入口：list / verify / verify-all / regress
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Dict, List, Optional

from algebra.errors import ManifestError, ProfileTooSmallError, QVerifyError, UnknownIdentityError
from catalog import catalog_list, get_record, verify_all
from catalog.verifier import ADD_Q
from config.config_manager import ConfigManager
from report.regression import compare_expectations, load_manifest, report_path_for
from report.text_report import (
    EXIT_FAIL,
    EXIT_PASS,
    EXIT_USAGE,
    VerificationReport,
    catalog_json,
    render_catalog,
)
from scheduler.task_scheduler import TaskScheduler, VerifyTask

logger = logging.getLogger("qverify")

ALL_IDS = "*"


def parse_cap(text: str) -> tuple:
    """'a=8' -> ('a', 8)"""
    name, sep, value = text.partition("=")
    if not sep or not name:
        raise argparse.ArgumentTypeError(f"上限格式应为 var=N: {text!r}")
    try:
        cap = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"上限必须是整数: {text!r}") from None
    if cap < 0:
        raise argparse.ArgumentTypeError(f"上限必须非负: {text!r}")
    return name, cap


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qverify", description="q-级数恒等式的截断校验")
    parser.add_argument("--config", default=None, help="配置文件路径（默认 config/config.yaml）")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q-cap", type=int, default=None, help="q 的截断上限")
    common.add_argument("--cap", type=parse_cap, action="append", default=[], metavar="VAR=N",
                        help="参数截断上限，可重复；族记录用 n 表示深度")
    common.add_argument("--mode", choices=("series", "sample"), default=None)
    common.add_argument("--samples", type=int, default=None)
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--format", choices=("text", "json"), default=None)
    common.add_argument("--jobs", type=int, default=None, help="并行进程数，0 表示全部 CPU")
    # 自检用：对右侧加 q，不带 id 时作用于全部请求的记录
    common.add_argument("--mutate-rhs", action="append", nargs="?", const=ALL_IDS, default=[],
                        help=argparse.SUPPRESS)

    sub = parser.add_subparsers(dest="command", required=True)
    list_parser = sub.add_parser("list", help="列出目录")
    list_parser.add_argument("--format", choices=("text", "json"), default=None)
    verify_parser = sub.add_parser("verify", parents=[common], help="校验指定恒等式")
    verify_parser.add_argument("ids", nargs="+")
    sub.add_parser("verify-all", parents=[common], help="校验全部恒等式")
    regress_parser = sub.add_parser("regress", parents=[common], help="按回归清单校验")
    regress_parser.add_argument("manifest")
    return parser


def setup_logging(logging_config: Dict[str, str]) -> None:
    """日志写到 stderr，stdout 留给报告"""
    handlers: List[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if logging_config.get("file"):
        handlers.append(logging.FileHandler(logging_config["file"], encoding='utf-8'))
    logging.basicConfig(
        level=getattr(logging, logging_config.get("level", "INFO"), logging.INFO),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=handlers,
        force=True,
    )


def resolve_settings(args: argparse.Namespace, config_manager: ConfigManager) -> Dict:
    """命令行 > 环境变量 > 配置文件 > 默认值"""
    verify_config = config_manager.get_verify_config()
    caps = config_manager.get_caps_config()
    for name, cap in getattr(args, "cap", []):
        caps[name] = cap
    if getattr(args, "q_cap", None) is not None:
        caps["q"] = args.q_cap

    def pick(name: str):
        value = getattr(args, name, None)
        return verify_config[name] if value is None else value

    return {
        "caps": caps,
        "mode": pick("mode"),
        "samples": pick("samples"),
        "seed": pick("seed"),
        "format": pick("format"),
        "jobs": pick("jobs"),
        "mutate": list(getattr(args, "mutate_rhs", [])),
    }


def _mutated_ids(requested: List[str], mutate: List[str]) -> List[str]:
    if ALL_IDS in mutate:
        return list(requested)
    return [identity_id for identity_id in requested if identity_id in mutate]


def emit_report(report: VerificationReport, output_format: str) -> None:
    if output_format == "json":
        print(report.to_json())
    else:
        report.print_summary()


def cmd_list(args: argparse.Namespace, settings: Dict) -> int:
    summaries = [record.summary() for record in catalog_list()]
    if settings["format"] == "json":
        print(catalog_json(summaries))
    else:
        print(render_catalog(summaries))
    return EXIT_PASS


def cmd_verify(args: argparse.Namespace, settings: Dict, ids: Optional[List[str]] = None) -> int:
    """verify 与 verify-all；ids 为 None 表示全部"""
    requested = [r.id for r in catalog_list()] if ids is None else [get_record(i).id for i in ids]
    outcomes = verify_all(
        caps=settings["caps"],
        mode=settings["mode"],
        samples=settings["samples"],
        seed=settings["seed"],
        jobs=settings["jobs"],
        ids=requested,
        mutated=_mutated_ids(requested, settings["mutate"]),
    )
    report = VerificationReport(outcomes=outcomes)
    emit_report(report, settings["format"])
    return report.exit_code


def cmd_regress(args: argparse.Namespace, settings: Dict, config_manager: ConfigManager) -> int:
    """按清单逐行校验并与预期状态比较"""
    manifest = Path(args.manifest)
    entries = load_manifest(manifest)
    for entry in entries:
        try:
            get_record(entry.identity_id)
        except UnknownIdentityError:
            raise ManifestError(entry.line_number, f"未知恒等式 {entry.identity_id!r}") from None
    mutated = set(_mutated_ids([e.identity_id for e in entries], settings["mutate"]))
    logger.info(f"回归清单 {manifest}：共 {len(entries)} 条")

    tasks = []
    for entry in entries:
        caps = dict(settings["caps"])
        caps.update(entry.caps)
        tasks.append(VerifyTask(
            identity_id=entry.identity_id,
            caps=caps,
            mode=entry.mode,
            samples=settings["samples"],
            seed=settings["seed"],
            mutation=ADD_Q if entry.identity_id in mutated else None,
        ))
    scheduler = TaskScheduler(settings["jobs"])
    scheduler.start()
    try:
        outcomes = scheduler.run(tasks)
    finally:
        scheduler.stop()

    report = VerificationReport(outcomes=outcomes)
    path = report.save(report_path_for(manifest, config_manager.get_report_config()["output_dir"]))
    logger.info(f"回归报告已写入 {path}")
    emit_report(report, settings["format"])

    code, mismatches = compare_expectations(entries, outcomes)
    if mismatches:
        print(f"不符合预期: {len(mismatches)} 条", file=sys.stderr)
        for line in mismatches:
            print(f"  {line}", file=sys.stderr)
    return code


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    config_manager = ConfigManager(args.config)
    setup_logging(config_manager.get_logging_config())
    settings = resolve_settings(args, config_manager)

    try:
        if args.command == "list":
            return cmd_list(args, settings)
        if args.command == "verify":
            return cmd_verify(args, settings, args.ids)
        if args.command == "verify-all":
            return cmd_verify(args, settings)
        return cmd_regress(args, settings, config_manager)
    except (UnknownIdentityError, ProfileTooSmallError, ManifestError) as exc:
        print(f"错误: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except QVerifyError as exc:
        logger.error(f"校验失败: {exc}", exc_info=True)
        return EXIT_FAIL
    except Exception as exc:
        logger.error(f"未预期的错误: {exc}", exc_info=True)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
