"""
配置加载与优先级测试
"""

import pytest

import run
from config.config_manager import ConfigManager


@pytest.fixture
def config_file(tmp_path):
    path = tmp_path / "config.yaml"
    path.write_text(
        "verify:\n  mode: sample\n  samples: 3\n"
        "caps:\n  q_cap: 18\n  params:\n    a: 5\n"
        "logging:\n  level: debug\n",
        encoding="utf-8",
    )
    return path


def test_defaults_without_file(tmp_path):
    manager = ConfigManager(tmp_path / "absent.yaml")
    assert manager.get_verify_config() == {"mode": "series", "samples": 5, "seed": 0, "format": "text", "jobs": 0}
    assert manager.get_caps_config() == {}


def test_file_values_merge_with_defaults(config_file):
    manager = ConfigManager(config_file)
    verify_config = manager.get_verify_config()
    assert verify_config["mode"] == "sample"
    assert verify_config["seed"] == 0
    assert manager.get_caps_config() == {"a": 5, "q": 18}
    assert manager.get_logging_config()["level"] == "DEBUG"


def test_environment_beats_file(config_file, monkeypatch):
    monkeypatch.setenv("QVERIFY_Q_CAP", "30")
    monkeypatch.setenv("QVERIFY_SAMPLES", "9")
    manager = ConfigManager(config_file)
    assert manager.get_caps_config()["q"] == 30
    assert manager.get_verify_config()["samples"] == 9


def test_command_line_beats_environment(config_file, monkeypatch):
    monkeypatch.setenv("QVERIFY_Q_CAP", "30")
    args = run.build_parser().parse_args(["verify", "AND-11", "--q-cap", "14", "--cap", "a=2", "--seed", "4"])
    settings = run.resolve_settings(args, ConfigManager(config_file))
    assert settings["caps"] == {"a": 2, "q": 14}
    assert settings["seed"] == 4
    assert settings["mode"] == "sample"


def test_get_with_dot_path(config_file):
    manager = ConfigManager(config_file)
    assert manager.get("caps.params.a") == 5
    assert manager.get("caps.params.missing", 7) == 7
