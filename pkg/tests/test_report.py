"""
报告与回归清单测试
"""

import json
from pathlib import Path

import pytest

from algebra import ManifestError, Status, VerificationOutcome, Witness
from catalog import RECORDS, verify_all
from report import text_report
from report.regression import compare_expectations, load_manifest, parse_caps, parse_manifest_line, report_path_for
from report.text_report import VerificationReport, exit_code_for

IDS = ["EULER-ODD", "CLOSING-SUM", "I10"]


def _fail(identity_id: str) -> VerificationOutcome:
    return VerificationOutcome(
        status=Status.FAIL,
        witness=Witness(exponents={"q": 1}, lhs=0, rhs=1),
        identity_id=identity_id,
    )


class TestVerificationReport:
    def test_json_is_stable_without_elapsed(self):
        first = VerificationReport(verify_all(caps={"q": 20, "n": 3}, ids=IDS, jobs=1))
        second = VerificationReport(verify_all(caps={"q": 20, "n": 3}, ids=IDS, jobs=1))
        assert first.to_json(include_elapsed=False) == second.to_json(include_elapsed=False)

    def test_json_schema(self):
        report = VerificationReport([_fail("AND-11")])
        payload = json.loads(report.to_json())
        assert set(payload[0]) == {"id", "status", "mode", "caps", "witness", "elapsed_ms"}
        assert payload[0]["witness"] == {"exponents": {"q": 1}, "lhs": "0", "rhs": "1"}

    def test_timestamp_stays_out_of_json(self):
        report = VerificationReport([VerificationOutcome(status=Status.PASS, identity_id="JACOBI-3")])
        assert report.update_time not in report.to_json()

    def test_round_trip(self):
        report = VerificationReport([_fail("AND-11"), VerificationOutcome(status=Status.PASS, identity_id="I10")])
        restored = VerificationReport.from_dict(report.to_dict())
        assert restored.to_json() == report.to_json()

    def test_text_table(self):
        report = VerificationReport([_fail("AND-11")])
        text = str(report)
        assert "AND-11" in text and "FAIL" in text and "q^1" in text

    @pytest.mark.parametrize("statuses,code", [
        ([Status.PASS, Status.PASS], text_report.EXIT_PASS),
        ([Status.PASS, Status.INCONCLUSIVE], text_report.EXIT_INCONCLUSIVE),
        ([Status.INCONCLUSIVE, Status.FAIL], text_report.EXIT_FAIL),
        ([], text_report.EXIT_PASS),
    ])
    def test_exit_codes(self, statuses, code):
        outcomes = [_fail("X") if s is Status.FAIL else VerificationOutcome(status=s) for s in statuses]
        assert exit_code_for(outcomes) == code


class TestManifest:
    def test_parse_line(self):
        entry = parse_manifest_line("AND-11  24  a=10,b=8  sample  pass  # comment", 3)
        assert entry.identity_id == "AND-11"
        assert entry.caps == {"q": 24, "a": 10, "b": 8}
        assert entry.mode == "sample"
        assert entry.expected is Status.PASS
        assert entry.line_number == 3

    def test_defaults(self):
        entry = parse_manifest_line("CLOSING-SUM - - series FAIL", 1)
        assert entry.caps == {}
        assert entry.expected is Status.FAIL

    def test_comments_and_blank_lines(self):
        assert parse_manifest_line("   # only a comment", 1) is None
        assert parse_manifest_line("", 2) is None

    @pytest.mark.parametrize("line", [
        "AND-11 20 - series",
        "AND-11 x - series PASS",
        "AND-11 20 a=-1 series PASS",
        "AND-11 20 a series PASS",
        "AND-11 20 - fast PASS",
        "AND-11 20 - series MAYBE",
    ])
    def test_malformed_line_reports_line_number(self, line):
        with pytest.raises(ManifestError) as excinfo:
            parse_manifest_line(line, 7)
        assert excinfo.value.line_no == 7

    def test_parse_caps(self):
        assert parse_caps("n=10") == {"n": 10}
        assert parse_caps("-") == {}

    def test_load_file(self, tmp_path):
        manifest = tmp_path / "small.manifest"
        manifest.write_text("# header\nEULER-ODD 20 - series PASS\n\nI10 - n=3 series PASS\n", encoding="utf-8")
        entries = load_manifest(manifest)
        assert [e.line_number for e in entries] == [2, 4]
        assert report_path_for(manifest) == tmp_path / "small.report.json"

    def test_missing_file(self, tmp_path):
        with pytest.raises(ManifestError):
            load_manifest(tmp_path / "absent.manifest")

    def test_expectations(self):
        entries = [parse_manifest_line("I10 - - series FAIL", 1), parse_manifest_line("I10 - - series PASS", 2)]
        outcomes = [_fail("I10"), VerificationOutcome(status=Status.PASS, identity_id="I10")]
        code, mismatches = compare_expectations(entries, outcomes)
        assert code == text_report.EXIT_PASS and not mismatches
        code, mismatches = compare_expectations(entries, list(reversed(outcomes)))
        assert code == text_report.EXIT_FAIL and len(mismatches) == 2

    def test_shipped_manifest_parses(self):
        entries = load_manifest(Path(__file__).parent.parent / "regress" / "default.manifest")
        assert {record.id for record in RECORDS} <= {entry.identity_id for entry in entries}
