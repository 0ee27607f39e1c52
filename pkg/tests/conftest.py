"""
测试公共配置
"""

import sys
from pathlib import Path

import pytest

# 添加项目根目录到路径
sys.path.insert(0, str(Path(__file__).parent.parent))

from algebra.registry import TruncationProfile, VarRegistry  # noqa: E402


@pytest.fixture
def q_registry() -> VarRegistry:
    return VarRegistry(["q"])


@pytest.fixture
def aq_registry() -> VarRegistry:
    return VarRegistry(["a", "q"])


@pytest.fixture
def q_profile(q_registry) -> TruncationProfile:
    return TruncationProfile.from_caps(q_registry, {"q": 12})
