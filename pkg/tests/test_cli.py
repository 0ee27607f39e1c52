"""
命令行入口测试（通过 run.main 调用，不启动子进程）
"""

import json

import pytest

import run
from report.text_report import EXIT_FAIL, EXIT_INCONCLUSIVE, EXIT_PASS, EXIT_USAGE


@pytest.fixture
def cli(tmp_path):
    """使用不存在的配置文件，保证只有内置默认值生效"""
    config = str(tmp_path / "absent.yaml")

    def invoke(*argv: str) -> int:
        return run.main(["--config", config, *argv])
    return invoke


def test_list_json(cli, capsys):
    assert cli("list", "--format", "json") == EXIT_PASS
    payload = json.loads(capsys.readouterr().out)
    assert len(payload) == 37
    assert set(payload[0]) == {"id", "title", "citation", "kind", "caps", "modes"}


def test_list_text(cli, capsys):
    assert cli("list") == EXIT_PASS
    out = capsys.readouterr().out
    assert "AND-11" in out
    assert "出处: Jacobi 三重积恒等式" in out


def test_verify_passes(cli, capsys):
    assert cli("verify", "AND-11", "--q-cap", "12", "--cap", "a=4", "--cap", "b=4", "--jobs", "1", "--format", "json") == EXIT_PASS
    payload = json.loads(capsys.readouterr().out)
    assert payload[0]["status"] == "PASS"
    assert payload[0]["caps"] == {"a": 4, "b": 4, "q": 12}


def test_unknown_id(cli):
    assert cli("verify", "NO-SUCH-ID", "--jobs", "1") == EXIT_USAGE


def test_profile_too_small(cli):
    assert cli("verify", "AND-11", "--q-cap", "0", "--jobs", "1") == EXIT_USAGE


def test_bad_cap_syntax(cli):
    with pytest.raises(SystemExit) as excinfo:
        cli("verify", "AND-11", "--cap", "a8")
    assert excinfo.value.code == EXIT_USAGE


def test_mutated_rhs_fails_with_witness(cli, capsys):
    code = cli("verify", "AND-11", "--q-cap", "12", "--cap", "a=4", "--cap", "b=4",
               "--jobs", "1", "--format", "json", "--mutate-rhs")
    assert code == EXIT_FAIL
    payload = json.loads(capsys.readouterr().out)
    assert payload[0]["witness"]["exponents"] == {"q": 1}


def test_format_does_not_change_exit_code(cli):
    argv = ("verify", "AND-11", "--q-cap", "12", "--cap", "a=4", "--cap", "b=4", "--jobs", "1", "--mutate-rhs")
    assert cli(*argv, "--format", "text") == cli(*argv, "--format", "json") == EXIT_FAIL


def test_inconclusive_exit_code(cli, monkeypatch):
    from algebra import Status, VerificationOutcome

    monkeypatch.setattr(run, "verify_all", lambda **kwargs: [VerificationOutcome(status=Status.INCONCLUSIVE)])
    assert cli("verify", "AND-11", "--jobs", "1") == EXIT_INCONCLUSIVE


class TestRegress:
    def _manifest(self, tmp_path, text):
        path = tmp_path / "small.manifest"
        path.write_text(text, encoding="utf-8")
        return str(path)

    def test_all_expectations_met(self, cli, tmp_path):
        manifest = self._manifest(tmp_path, "EULER-ODD 20 - series PASS\nCLOSING-SUM - n=3 series PASS\n")
        assert cli("regress", manifest, "--jobs", "1") == EXIT_PASS
        report = json.loads((tmp_path / "small.report.json").read_text(encoding="utf-8"))
        assert [item["id"] for item in report] == ["EULER-ODD", "CLOSING-SUM"]

    def test_expected_failure_of_mutated_record(self, cli, tmp_path):
        manifest = self._manifest(tmp_path, "EULER-ODD 20 - series FAIL\nI10 - n=3 series PASS\n")
        assert cli("regress", manifest, "--jobs", "1", "--mutate-rhs", "EULER-ODD") == EXIT_PASS

    def test_wrong_expectation(self, cli, tmp_path):
        manifest = self._manifest(tmp_path, "EULER-ODD 20 - series FAIL\n")
        assert cli("regress", manifest, "--jobs", "1") == EXIT_FAIL

    def test_malformed_line(self, cli, tmp_path, capsys):
        manifest = self._manifest(tmp_path, "# ok\nEULER-ODD 20 series PASS\n")
        assert cli("regress", manifest, "--jobs", "1") == EXIT_USAGE
        assert "第 2 行" in capsys.readouterr().err

    def test_unknown_id_in_manifest(self, cli, tmp_path):
        manifest = self._manifest(tmp_path, "NOPE - - series PASS\n")
        assert cli("regress", manifest, "--jobs", "1") == EXIT_USAGE
