"""
构建上下文

级数模式下参数是符号变量；抽样模式下参数被绑定为有理数，对应变量的上限收缩为 0。
无穷和的迭代上限由记录的 term_bound 按截断轮廓给出，bound_scale 用于整体放大这些上限。
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Callable, Dict, Optional

from algebra.errors import PreconditionError
from algebra.registry import TruncationProfile, VarRegistry
from algebra.series import TruncatedSeries
from algebra.sparse_poly import SparsePoly

DEPTH = "n"

TermBound = Callable[["BuildContext"], Dict[str, int]]


@dataclass
class BuildContext:
    """
    Attributes:
        registry: 记录的变量表
        caps: 生效的截断上限（族记录用伪变量 n 表示深度）
        bindings: 抽样模式下绑定的参数值
        term_bound: 上下文 -> {求和名: 最后一项的下标}
        bound_scale: 迭代上限的放大倍数（≥ 1）
    """
    registry: VarRegistry
    caps: Dict[str, int]
    bindings: Dict[str, Fraction] = field(default_factory=dict)
    term_bound: Optional[TermBound] = None
    bound_scale: int = 1

    @cached_property
    def profile(self) -> TruncationProfile:
        caps = {
            name: 0 if name in self.bindings else self.caps.get(name, 0)
            for name in self.registry.names
        }
        return TruncationProfile.from_caps(self.registry, caps)

    @property
    def q_cap(self) -> int:
        return self.profile.q_cap

    @property
    def depth(self) -> int:
        return self.caps.get(DEPTH, 0)

    def cap(self, name: str) -> int:
        return self.profile.cap(name)

    def reach(self, name: str) -> Optional[int]:
        """未绑定变量的上限；已绑定时不构成约束，返回 None"""
        return None if name in self.bindings else self.caps.get(name, 0)

    # ------------------------------------------------------------------ 迭代上限

    @cached_property
    def limits(self) -> Dict[str, int]:
        """放大前的迭代上限"""
        return dict(self.term_bound(self)) if self.term_bound is not None else {}

    def limit(self, name: str) -> int:
        """
        求和 name 的最后一项下标（已乘 bound_scale）

        Raises:
            PreconditionError: 记录没有声明该求和
        """
        if name not in self.limits:
            raise PreconditionError(f"记录没有声明求和 {name!r} 的迭代上限")
        return self.limits[name] * self.bound_scale

    # ------------------------------------------------------------------ 多项式

    def mono_poly(self, coef=1, **exponents: int) -> SparsePoly:
        """coef·∏ v^e，已绑定的变量直接代入数值"""
        value = Fraction(coef)
        free = {}
        for name, power in exponents.items():
            if name in self.bindings:
                value *= self.bindings[name] ** power
            elif power:
                free[name] = power
        if value.denominator == 1:
            value = value.numerator
        return SparsePoly.monomial(self.registry, value, free)

    def param_poly(self, name: str) -> SparsePoly:
        return self.mono_poly(1, **{name: 1})

    # ------------------------------------------------------------------ 级数

    def series(self, poly: SparsePoly) -> TruncatedSeries:
        return TruncatedSeries.from_poly(poly, self.profile)

    def mono(self, coef=1, **exponents: int) -> TruncatedSeries:
        return self.series(self.mono_poly(coef, **exponents))

    def param(self, name: str) -> TruncatedSeries:
        return self.series(self.param_poly(name))

    def one(self) -> TruncatedSeries:
        return TruncatedSeries.one(self.profile)


__all__ = ["DEPTH", "TermBound", "BuildContext"]
