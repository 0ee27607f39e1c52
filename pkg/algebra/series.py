"""
截断形式幂级数

TruncatedSeries 由三部分组成：
- poly: 已知的项（全部满足 指数 ≤ caps）
- caps / floors: 截断窗口上界与真实级数（含未知尾项）的逐变量下界
- exact: 精确区域的逐变量上界，None 表示该方向上没有未知项

未知尾项总落在 ∪_v {e_v > exact_v} 中，因此指数 e 满足 e_v ≤ min(exact_v, caps_v)（对所有 v）时系数是精确的。
乘法时精确区域按 min(X1_v + lo2_v, X2_v + lo1_v) 收缩（负指数会把未知尾项往下平移），
截断丢弃某项时把该项超出上限的那个变量（优先 q）钳到上限。
"""

import logging
from operator import add
from typing import Dict, List, Mapping, Optional, Tuple, Union

from algebra.errors import (
    CoefficientNotExactError,
    NonUnitError,
    SubstitutionError,
)
from algebra.outcome import Status, VerificationOutcome, Witness
from algebra.registry import Exponents, TruncationProfile, VarRegistry, term_key
from algebra.scalar import Scalar, divide, normalize, to_scalar
from algebra.sparse_poly import SparsePoly

logger = logging.getLogger(__name__)

Bound = Optional[int]


def _min_bound(a: Bound, b: Bound) -> Bound:
    if a is None:
        return b
    if b is None:
        return a
    return a if a < b else b


def _exceeding_index(exps: Exponents, caps: Tuple[int, ...], q_index: int) -> int:
    """返回超出上限的变量下标（q 优先），未超出返回 -1"""
    if exps[q_index] > caps[q_index]:
        return q_index
    for i, (e, c) in enumerate(zip(exps, caps)):
        if e > c:
            return i
    return -1


class TruncatedSeries:
    """带截断轮廓与精确区域的多元级数（不可变）"""

    __slots__ = ("poly", "caps", "floors", "exact")

    def __init__(self, poly: SparsePoly, caps: Tuple[int, ...], floors: Tuple[int, ...], exact: Tuple[Bound, ...]):
        self.poly = poly
        self.caps = tuple(caps)
        self.floors = tuple(floors)
        self.exact = tuple(exact)

    # ------------------------------------------------------------------ 构造

    @classmethod
    def from_poly(cls, poly: SparsePoly, profile: TruncationProfile) -> "TruncatedSeries":
        """
        把完整已知的多项式截断到给定轮廓

        Args:
            poly: 多项式（可含负指数）
            profile: 截断轮廓

        Returns:
            截断后的级数；被丢弃项对应的变量会收缩精确区域
        """
        poly.registry.check_same(profile.registry)
        caps = profile.caps
        q_index = profile.registry.q_index
        exact: List[Bound] = [None] * len(caps)
        kept: Dict[Exponents, Scalar] = {}
        for exps, coef in poly.items():
            idx = _exceeding_index(exps, caps, q_index)
            if idx < 0:
                kept[exps] = coef
            else:
                exact[idx] = caps[idx]
        floors = poly.min_exponents() if not poly.is_zero() else profile.floors
        return cls(SparsePoly._wrap(poly.registry, kept), caps, floors, tuple(exact))

    @classmethod
    def zero(cls, profile: TruncationProfile) -> "TruncatedSeries":
        return cls.from_poly(SparsePoly.zero(profile.registry), profile)

    @classmethod
    def one(cls, profile: TruncationProfile) -> "TruncatedSeries":
        return cls.from_poly(SparsePoly.one(profile.registry), profile)

    @classmethod
    def constant(cls, profile: TruncationProfile, value) -> "TruncatedSeries":
        return cls.from_poly(SparsePoly.constant(profile.registry, value), profile)

    @classmethod
    def monomial(cls, profile: TruncationProfile, coef=1, exponents: Optional[Mapping[str, int]] = None) -> "TruncatedSeries":
        return cls.from_poly(SparsePoly.monomial(profile.registry, coef, exponents), profile)

    def _like(self, poly: SparsePoly) -> "TruncatedSeries":
        """与自身同轮廓的完整多项式"""
        return TruncatedSeries.from_poly(poly, self.profile)

    # ------------------------------------------------------------------ 属性

    @property
    def registry(self) -> VarRegistry:
        return self.poly.registry

    @property
    def profile(self) -> TruncationProfile:
        return TruncationProfile(
            registry=self.registry,
            caps=self.caps,
            floors=tuple(min(f, 0, c) for f, c in zip(self.floors, self.caps)),
        )

    def region_bounds(self) -> Tuple[int, ...]:
        """精确区域的逐变量上界 min(exact, caps)"""
        return tuple(c if x is None else min(x, c) for x, c in zip(self.exact, self.caps))

    @property
    def exact_region(self) -> Optional[TruncationProfile]:
        """精确区域；为空时返回 None"""
        bounds = self.region_bounds()
        floors = tuple(min(f, 0) for f in self.floors)
        if any(b < f for b, f in zip(bounds, floors)):
            return None
        return TruncationProfile(registry=self.registry, caps=bounds, floors=floors)

    def is_complete(self) -> bool:
        return all(x is None for x in self.exact)

    def __len__(self) -> int:
        return len(self.poly)

    def __repr__(self) -> str:
        region = ", ".join(
            f"{n}≤{b}" for n, b in zip(self.registry.names, self.region_bounds())
        )
        return f"TruncatedSeries({self.poly}; exact: {region})"

    # ------------------------------------------------------------------ 算术

    def _coerce(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            self.registry.check_same(other.registry)
            return other
        if isinstance(other, SparsePoly):
            return self._like(other)
        return self._like(SparsePoly.constant(self.registry, other))

    def __add__(self, other) -> "TruncatedSeries":
        return series_add(self, self._coerce(other))

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(-self.poly, self.caps, self.floors, self.exact)

    def __sub__(self, other) -> "TruncatedSeries":
        return series_add(self, -self._coerce(other))

    def __rsub__(self, other) -> "TruncatedSeries":
        return series_add(self._coerce(other), -self)

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, (TruncatedSeries, SparsePoly)):
            return series_mul(self, self._coerce(other))
        return self.scale(other)

    __rmul__ = __mul__

    def __pow__(self, power: int) -> "TruncatedSeries":
        if power < 0:
            return series_invert(self) ** (-power)
        result = TruncatedSeries.one(self.profile)
        for _ in range(power):
            result = result * self
        return result

    def scale(self, factor) -> "TruncatedSeries":
        factor = to_scalar(factor)
        if not factor:
            return TruncatedSeries(SparsePoly.zero(self.registry), self.caps, self.floors, self.exact)
        return TruncatedSeries(self.poly.scale(factor), self.caps, self.floors, self.exact)

    def shift(self, exponents: Mapping[str, int], coef=1) -> "TruncatedSeries":
        """乘以单项式 coef·∏ v^e"""
        return series_mul(self, self._like(SparsePoly.monomial(self.registry, coef, exponents)))

    def restrict(self, caps: Mapping[str, int]) -> "TruncatedSeries":
        """收紧部分变量的上限"""
        new_caps = tuple(
            min(c, caps.get(name, c)) for name, c in zip(self.registry.names, self.caps)
        )
        return series_add(self, TruncatedSeries.zero(TruncationProfile(self.registry, new_caps, self.profile.floors)))

    # ------------------------------------------------------------------ 查询

    def coefficient(self, exponents: Union[Exponents, Mapping[str, int]]) -> Scalar:
        return series_coeff(self, exponents)

    def coefficient_in(self, name: str, power: int) -> "TruncatedSeries":
        """
        提取 name^power 的系数级数（结果中 name 的指数为 0）

        Args:
            name: 变量名
            power: 指数
        """
        idx = self.registry.index_of(name)
        bound = self.exact[idx]
        if (bound is not None and power > bound) or power > self.caps[idx]:
            raise CoefficientNotExactError(f"{name}^{power} 超出精确区域（{name} ≤ {bound}）")
        terms = {
            exps[:idx] + (0,) + exps[idx + 1:]: coef
            for exps, coef in self.poly.items()
            if exps[idx] == power
        }
        exact = list(self.exact)
        exact[idx] = None
        floors = list(self.floors)
        floors[idx] = 0
        return TruncatedSeries(SparsePoly._wrap(self.registry, terms), self.caps, tuple(floors), tuple(exact))

    def leading_q_order(self) -> Optional[int]:
        """已知项中 q 的最小指数"""
        if self.poly.is_zero():
            return None
        return self.poly.min_exponents()[self.registry.q_index]


# ---------------------------------------------------------------------- 运算


def series_add(lhs: TruncatedSeries, rhs: TruncatedSeries) -> TruncatedSeries:
    """逐项相加，轮廓取交集，精确区域取交集"""
    lhs.registry.check_same(rhs.registry)
    caps = tuple(map(min, lhs.caps, rhs.caps))
    floors = tuple(map(min, lhs.floors, rhs.floors))
    exact = list(map(_min_bound, lhs.exact, rhs.exact))
    q_index = lhs.registry.q_index
    terms: Dict[Exponents, Scalar] = {}
    for source in (lhs.poly, rhs.poly):
        for exps, coef in source.items():
            idx = _exceeding_index(exps, caps, q_index)
            if idx >= 0:
                exact[idx] = _min_bound(exact[idx], caps[idx])
                continue
            terms[exps] = terms.get(exps, 0) + coef
    terms = {e: normalize(c) for e, c in terms.items() if c}
    return TruncatedSeries(SparsePoly._wrap(lhs.registry, terms), caps, floors, tuple(exact))


def series_mul(lhs: TruncatedSeries, rhs: TruncatedSeries) -> TruncatedSeries:
    """
    截断乘法

    精确区域：exact_v = min(X1_v + lo2_v, X2_v + lo1_v)，并对截断丢弃的方向钳到上限。
    """
    lhs.registry.check_same(rhs.registry)
    registry = lhs.registry
    caps = tuple(map(min, lhs.caps, rhs.caps))
    floors = tuple(map(add, lhs.floors, rhs.floors))
    exact: List[Bound] = []
    for x1, x2, lo1, lo2 in zip(lhs.exact, rhs.exact, lhs.floors, rhs.floors):
        bound = None if x1 is None else x1 + lo2
        bound = _min_bound(bound, None if x2 is None else x2 + lo1)
        exact.append(bound)

    q_index = registry.q_index
    if len(lhs.poly) < len(rhs.poly):
        lhs, rhs = rhs, lhs
    small = sorted(rhs.poly.items(), key=lambda item: item[0][q_index])
    q_cap = caps[q_index]
    dropped = set()
    terms: Dict[Exponents, Scalar] = {}
    for e1, c1 in lhs.poly.items():
        room = q_cap - e1[q_index]
        for e2, c2 in small:
            if e2[q_index] > room:
                dropped.add(q_index)
                break
            key = tuple(map(add, e1, e2))
            idx = _exceeding_index(key, caps, q_index)
            if idx >= 0:
                dropped.add(idx)
                continue
            terms[key] = terms.get(key, 0) + c1 * c2
    for idx in dropped:
        exact[idx] = _min_bound(exact[idx], caps[idx])
    terms = {e: normalize(c) for e, c in terms.items() if c}
    return TruncatedSeries(SparsePoly._wrap(registry, terms), caps, floors, tuple(exact))


def divide_by_one_minus(series: TruncatedSeries, coef, exponents: Exponents) -> TruncatedSeries:
    """
    除以二项式 (1 - coef·m)，m 为非零、非负的单项式

    等价于乘以几何级数 Σ (coef·m)^k，但逐项推进直到超出上限，因此不会额外损失精确区域。

    Args:
        series: 被除级数
        coef: 单项式系数
        exponents: 单项式指数向量
    """
    coef = to_scalar(coef)
    if any(e < 0 for e in exponents) or not any(exponents):
        raise NonUnitError(f"快速除法要求单项式指数非负且非零: {exponents}")
    caps = series.caps
    q_index = series.registry.q_index
    exact = list(series.exact)
    result: Dict[Exponents, Scalar] = dict(series.poly.items())
    current = result
    while current and coef:
        step: Dict[Exponents, Scalar] = {}
        for exps, value in current.items():
            key = tuple(map(add, exps, exponents))
            idx = _exceeding_index(key, caps, q_index)
            if idx >= 0:
                exact[idx] = _min_bound(exact[idx], caps[idx])
                continue
            step[key] = value * coef
        for key, value in step.items():
            result[key] = result.get(key, 0) + value
        current = step
    terms = {e: normalize(c) for e, c in result.items() if c}
    return TruncatedSeries(SparsePoly._wrap(series.registry, terms), caps, series.floors, tuple(exact))


def series_invert(series: TruncatedSeries) -> TruncatedSeries:
    """
    求逆级数 t，使 s·t = 1（在精确区域内）

    Args:
        series: 常数项非零、无负指数的级数

    Returns:
        逆级数
    """
    if any(f < 0 for f in series.floors) or any(e < 0 for e in series.poly.min_exponents()):
        raise NonUnitError("含负指数的级数不能求逆")
    c0 = series.poly.constant_term()
    if not c0:
        raise NonUnitError("常数项为 0，级数不可逆")
    profile = series.profile
    one = TruncatedSeries.one(profile)
    rest = [(e, c) for e, c in series.poly.items() if any(e)]
    if len(rest) == 1 and series.is_complete():
        exps, coef = rest[0]
        inverse = divide_by_one_minus(one, divide(-coef, c0), exps)
        return inverse.scale(divide(1, c0))

    unit = TruncatedSeries(series.poly - c0, series.caps, series.floors, series.exact).scale(divide(1, c0))
    total = one
    power = one
    sign = 1
    while True:
        power = series_mul(power, unit)
        sign = -sign
        total = series_add(total, power.scale(sign))
        if power.poly.is_zero():
            break
    return total.scale(divide(1, c0))


def series_substitute(series: TruncatedSeries, name: str, value: Union["TruncatedSeries", Scalar]) -> TruncatedSeries:
    """
    把变量 name 替换为标量或级数

    Args:
        series: 原级数
        name: 被替换的变量
        value: 标量，或同一变量表上的级数

    Returns:
        代入并重新截断后的级数
    """
    registry = series.registry
    idx = registry.index_of(name)
    bound = series.exact[idx]
    exact = list(series.exact)
    exact[idx] = None
    floors = list(series.floors)
    floors[idx] = 0

    if not isinstance(value, TruncatedSeries):
        if bound is not None:
            raise SubstitutionError(
                f"{name} 方向存在未知尾项（{name} > {bound}），标量代入会污染全部系数"
            )
        poly = series.poly.substitute(name, to_scalar(value))
        return TruncatedSeries(poly, series.caps, tuple(floors), tuple(exact))

    registry.check_same(value.registry)
    grouped: Dict[int, Dict[Exponents, Scalar]] = {}
    for exps, coef in series.poly.items():
        grouped.setdefault(exps[idx], {})[exps[:idx] + (0,) + exps[idx + 1:]] = coef

    if bound is not None:
        positive = [i for i, f in enumerate(value.floors) if f > 0]
        if not positive:
            raise SubstitutionError(
                f"{name} 方向存在未知尾项，而代入值没有正阶变量，无法控制尾项"
            )
        target = registry.q_index if registry.q_index in positive else positive[0]
        tail_floor = series.floors[target] + (bound + 1) * value.floors[target]
        exact[target] = _min_bound(exact[target], tail_floor - 1)

    base = TruncatedSeries(SparsePoly.zero(registry), series.caps, tuple(floors), tuple(exact))
    result = base
    powers: Dict[int, TruncatedSeries] = {}
    for power in sorted(grouped):
        if power not in powers:
            if power >= 0:
                powers[power] = value ** power
            elif value.is_complete() and value.poly.is_monomial():
                powers[power] = TruncatedSeries.from_poly(value.poly ** power, value.profile)
            else:
                raise SubstitutionError(f"{name} 出现负指数，代入值必须是单项式")
        part = TruncatedSeries(SparsePoly._wrap(registry, grouped[power]), series.caps, tuple(floors), tuple(exact))
        result = series_add(result, series_mul(part, powers[power]))
    return result


def series_coeff(series: TruncatedSeries, exponents: Union[Exponents, Mapping[str, int]]) -> Scalar:
    """读取精确系数，超出精确区域时报错"""
    if isinstance(exponents, Mapping):
        exponents = series.registry.vector(exponents)
    bounds = series.region_bounds()
    for name, e, b in zip(series.registry.names, exponents, bounds):
        if e > b:
            raise CoefficientNotExactError(f"{name}^{e} 超出精确区域（{name} ≤ {b}）")
    return series.poly.coefficient(exponents)


def first_mismatch(lhs: TruncatedSeries, rhs: TruncatedSeries) -> Optional[Tuple[Exponents, Scalar, Scalar]]:
    """精确区域交集内分次字典序最小的不一致项"""
    bounds = tuple(map(min, lhs.region_bounds(), rhs.region_bounds()))
    best: Optional[Exponents] = None
    keys = set(e for e, _ in lhs.poly.items())
    keys.update(e for e, _ in rhs.poly.items())
    for exps in keys:
        if any(e > b for e, b in zip(exps, bounds)):
            continue
        if lhs.poly.coefficient(exps) != rhs.poly.coefficient(exps):
            if best is None or term_key(exps) < term_key(best):
                best = exps
    if best is None:
        return None
    return best, lhs.poly.coefficient(best), rhs.poly.coefficient(best)


def series_equal(lhs: TruncatedSeries, rhs: TruncatedSeries) -> VerificationOutcome:
    """
    在两侧精确区域的交集上比较系数

    Returns:
        PASS；FAIL（携带首个不一致项）；交集为空时 INCONCLUSIVE
    """
    lhs.registry.check_same(rhs.registry)
    bounds = tuple(map(min, lhs.region_bounds(), rhs.region_bounds()))
    floors = tuple(map(min, lhs.floors, rhs.floors))
    caps = dict(zip(lhs.registry.names, bounds))
    if any(b < min(f, 0) for b, f in zip(bounds, floors)):
        logger.debug("精确区域为空: %s", caps)
        return VerificationOutcome(status=Status.INCONCLUSIVE, caps=caps, message="精确区域为空")
    mismatch = first_mismatch(lhs, rhs)
    if mismatch is None:
        return VerificationOutcome(status=Status.PASS, caps=caps)
    exps, left, right = mismatch
    return VerificationOutcome(
        status=Status.FAIL,
        witness=Witness(exponents=lhs.registry.as_dict(exps), lhs=left, rhs=right),
        caps=caps,
    )
