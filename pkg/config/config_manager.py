"""
配置管理模块
从YAML文件读取配置，支持环境变量覆盖
"""

import os
import yaml
from typing import Dict, Any, Optional
from pathlib import Path


# 环境变量 -> (配置路径, 类型)
ENV_OVERRIDES = {
    "QVERIFY_MODE": ("verify.mode", str),
    "QVERIFY_SAMPLES": ("verify.samples", int),
    "QVERIFY_SEED": ("verify.seed", int),
    "QVERIFY_FORMAT": ("verify.format", str),
    "QVERIFY_JOBS": ("verify.jobs", int),
    "QVERIFY_Q_CAP": ("caps.q_cap", int),
    "QVERIFY_LOG_LEVEL": ("logging.level", str),
    "QVERIFY_LOG_FILE": ("logging.file", str),
}


class ConfigManager:
    """配置管理器"""
    
    def __init__(self, config_path: Optional[str] = None):
        """
        初始化配置管理器
        
        Args:
            config_path: 配置文件路径，默认为 config/config.yaml
        """
        if config_path is None:
            base_dir = Path(__file__).parent.parent
            config_path = base_dir / "config" / "config.yaml"
        
        self.config_path = Path(config_path)
        self.config: Dict[str, Any] = {}
        self.load_config()
    
    def load_config(self) -> None:
        """从文件加载配置，缺失的键用默认值补齐，最后应用环境变量覆盖"""
        self.config = self._get_default_config()
        if self.config_path.exists():
            with open(self.config_path, 'r', encoding='utf-8') as f:
                loaded = yaml.safe_load(f) or {}
            for group, values in loaded.items():
                if isinstance(values, dict) and isinstance(self.config.get(group), dict):
                    self.config[group].update(values)
                else:
                    self.config[group] = values
        
        self._apply_env_overrides()
    
    def _get_default_config(self) -> Dict[str, Any]:
        """获取默认配置"""
        return {
            "verify": {
                "mode": "series",
                "samples": 5,
                "seed": 0,
                "format": "text",
                "jobs": 0
            },
            "caps": {
                "q_cap": None,
                "params": {}
            },
            "logging": {
                "level": "INFO",
                "file": ""
            },
            "report": {
                "output_dir": ""
            }
        }
    
    def _apply_env_overrides(self) -> None:
        """应用环境变量覆盖"""
        for env_name, (key_path, cast) in ENV_OVERRIDES.items():
            raw = os.getenv(env_name)
            if raw:
                group, key = key_path.split(".")
                self.config.setdefault(group, {})[key] = cast(raw)
    
    def get(self, key_path: str, default: Any = None) -> Any:
        """
        获取配置值，支持点号分隔的路径
        
        Args:
            key_path: 配置路径，如 "verify.mode"
            default: 默认值
        
        Returns:
            配置值
        """
        keys = key_path.split(".")
        value = self.config
        
        for key in keys:
            if isinstance(value, dict):
                value = value.get(key)
                if value is None:
                    return default
            else:
                return default
        
        return value if value is not None else default
    
    def get_verify_config(self) -> Dict[str, Any]:
        """获取校验配置"""
        verify_config = self.get("verify", {})
        return {
            "mode": verify_config.get("mode", "series"),
            "samples": int(verify_config.get("samples", 5)),
            "seed": int(verify_config.get("seed", 0)),
            "format": verify_config.get("format", "text"),
            "jobs": int(verify_config.get("jobs", 0))
        }
    
    def get_caps_config(self) -> Dict[str, int]:
        """获取全局截断上限覆盖，返回 {变量名: 上限}"""
        caps_config = self.get("caps", {})
        caps = {name: int(value) for name, value in (caps_config.get("params") or {}).items()}
        if caps_config.get("q_cap") is not None:
            caps["q"] = int(caps_config["q_cap"])
        return caps
    
    def get_logging_config(self) -> Dict[str, str]:
        """获取日志配置"""
        logging_config = self.get("logging", {})
        return {
            "level": str(logging_config.get("level", "INFO")).upper(),
            "file": logging_config.get("file", "") or ""
        }
    
    def get_report_config(self) -> Dict[str, str]:
        """获取报告配置"""
        report_config = self.get("report", {})
        return {
            "output_dir": report_config.get("output_dir", "") or ""
        }
