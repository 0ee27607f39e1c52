"""
有理函数

分子为稀疏 Laurent 多项式；分母以 (因子, 重数) 的元组保存。每个因子都去掉单项式内容
（并入分子）并按首项系数归一为首一多项式，因此相同的因子总能合并。
加法取因子多重集的最小公倍式，相等性用交叉相乘判定，不需要多元 gcd。
"""

from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple, Union

from algebra.errors import PoleError
from algebra.outcome import Status, VerificationOutcome, Witness
from algebra.registry import Exponents, TruncationProfile, VarRegistry
from algebra.scalar import Scalar, divide, to_scalar
from algebra.series import TruncatedSeries, divide_by_one_minus, series_invert, series_mul
from algebra.sparse_poly import SparsePoly

Factors = Tuple[Tuple[SparsePoly, int], ...]


def _factor_key(poly: SparsePoly):
    return tuple(poly.sorted_terms())


def _normalize_factor(poly: SparsePoly) -> Tuple[Optional[SparsePoly], SparsePoly]:
    """
    拆分因子为 (首一无单项式内容的部分, 需要并入分子的单项式倍数的倒数)

    Returns:
        (g, u) 满足 1/poly = u/g；poly 为单项式时 g 为 None
    """
    if poly.is_zero():
        raise PoleError("分母为零多项式")
    content = poly.min_exponents()
    reduced = poly.shift(tuple(-e for e in content)) if any(content) else poly
    _, lead = reduced.leading_term()
    inv_mono = SparsePoly._wrap(poly.registry, {tuple(-e for e in content): divide(1, lead)})
    if reduced.is_constant():
        return None, inv_mono
    return reduced.scale(divide(1, lead)), inv_mono


class RationalFunction:
    """num / ∏ factor^mult"""

    __slots__ = ("num", "factors")

    def __init__(self, num: SparsePoly, factors: Iterable[Tuple[SparsePoly, int]] = ()):
        merged: Dict[SparsePoly, int] = {}
        for factor, mult in factors:
            if mult == 0:
                continue
            if mult < 0:
                num = num * factor ** (-mult)
                continue
            g, unit = _normalize_factor(factor)
            num = num * unit ** mult
            if g is not None:
                merged[g] = merged.get(g, 0) + mult
        self.num = num
        if num.is_zero():
            self.factors: Factors = ()
        else:
            self.factors = tuple(sorted(merged.items(), key=lambda item: _factor_key(item[0])))

    @classmethod
    def _raw(cls, num: SparsePoly, factors: Dict[SparsePoly, int]) -> "RationalFunction":
        """已归一化的因子直接组装"""
        rf = cls.__new__(cls)
        rf.num = num
        rf.factors = () if num.is_zero() else tuple(
            sorted(((g, m) for g, m in factors.items() if m), key=lambda item: _factor_key(item[0]))
        )
        return rf

    # ------------------------------------------------------------------ 构造

    @classmethod
    def from_poly(cls, poly: SparsePoly) -> "RationalFunction":
        return cls._raw(poly, {})

    @classmethod
    def constant(cls, registry: VarRegistry, value) -> "RationalFunction":
        return cls._raw(SparsePoly.constant(registry, value), {})

    @classmethod
    def one(cls, registry: VarRegistry) -> "RationalFunction":
        return cls.constant(registry, 1)

    @classmethod
    def zero(cls, registry: VarRegistry) -> "RationalFunction":
        return cls.constant(registry, 0)

    @classmethod
    def monomial(cls, registry: VarRegistry, coef=1, exponents=None) -> "RationalFunction":
        return cls._raw(SparsePoly.monomial(registry, coef, exponents), {})

    @classmethod
    def quotient(cls, num: SparsePoly, den: SparsePoly) -> "RationalFunction":
        return cls(num, [(den, 1)])

    # ------------------------------------------------------------------ 属性

    @property
    def registry(self) -> VarRegistry:
        return self.num.registry

    @property
    def den(self) -> SparsePoly:
        result = SparsePoly.one(self.registry)
        for g, m in self.factors:
            result = result * g ** m
        return result

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return not self.factors

    def __repr__(self) -> str:
        if not self.factors:
            return f"RationalFunction({self.num})"
        den = " * ".join(f"({g})" if m == 1 else f"({g})^{m}" for g, m in self.factors)
        return f"RationalFunction(({self.num}) / {den})"

    # ------------------------------------------------------------------ 算术

    def _coerce(self, other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            self.registry.check_same(other.registry)
            return other
        if isinstance(other, SparsePoly):
            self.registry.check_same(other.registry)
            return RationalFunction.from_poly(other)
        return RationalFunction.constant(self.registry, other)

    def _lifted(self, lcm: Dict[SparsePoly, int]) -> SparsePoly:
        """把分子提升到公共分母 lcm 上"""
        num = self.num
        own = dict(self.factors)
        for g, m in lcm.items():
            extra = m - own.get(g, 0)
            for _ in range(extra):
                num = num * g
        return num

    @staticmethod
    def _lcm(*items: "RationalFunction") -> Dict[SparsePoly, int]:
        lcm: Dict[SparsePoly, int] = {}
        for item in items:
            for g, m in item.factors:
                if m > lcm.get(g, 0):
                    lcm[g] = m
        return lcm

    def __add__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        lcm = self._lcm(self, other)
        return RationalFunction._raw(self._lifted(lcm) + other._lifted(lcm), lcm)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction._raw(-self.num, dict(self.factors))

    def __sub__(self, other) -> "RationalFunction":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "RationalFunction":
        return self._coerce(other) - self

    def __mul__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return RationalFunction.zero(self.registry)
        merged = dict(self.factors)
        for g, m in other.factors:
            merged[g] = merged.get(g, 0) + m
        return RationalFunction._raw(self.num * other.num, merged)

    __rmul__ = __mul__

    def reciprocal(self) -> "RationalFunction":
        if self.is_zero():
            raise PoleError("有理函数为零，不能取倒数")
        num = SparsePoly.one(self.registry)
        for g, m in self.factors:
            num = num * g ** m
        return RationalFunction(num, [(self.num, 1)])

    def __truediv__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other.is_zero():
            raise PoleError("除以零有理函数")
        if other.is_polynomial():
            return self * RationalFunction(SparsePoly.one(self.registry), [(other.num, 1)])
        return self * other.reciprocal()

    def __rtruediv__(self, other) -> "RationalFunction":
        return self._coerce(other) / self

    def __pow__(self, power: int) -> "RationalFunction":
        if power < 0:
            return self.reciprocal() ** (-power)
        result = RationalFunction.one(self.registry)
        for _ in range(power):
            result = result * self
        return result

    # ------------------------------------------------------------------ 相等

    def difference_numerator(self, other) -> Tuple[SparsePoly, SparsePoly]:
        """公共分母下的两个分子"""
        other = self._coerce(other)
        lcm = self._lcm(self, other)
        return self._lifted(lcm), other._lifted(lcm)

    def witness(self, other) -> Optional[Tuple[Exponents, Scalar, Scalar]]:
        """
        交叉相乘后首个不一致的项

        Returns:
            None 表示相等；否则 (指数, 左侧系数, 右侧系数)，系数取自公共分母下的分子
        """
        left, right = self.difference_numerator(other)
        diff = left - right
        if diff.is_zero():
            return None
        exps, _ = diff.sorted_terms()[0]
        return exps, left.coefficient(exps), right.coefficient(exps)

    def __eq__(self, other) -> bool:
        if not isinstance(other, (RationalFunction, SparsePoly, int, Fraction)):
            return NotImplemented
        return self.witness(other) is None

    __hash__ = None

    # ------------------------------------------------------------------ 代入与展开

    def substitute(self, name: str, value: Union[Scalar, SparsePoly]) -> "RationalFunction":
        """
        代入标量或多项式

        Raises:
            PoleError: 某个分母因子在代入后变为零
        """
        if not isinstance(value, SparsePoly):
            value = to_scalar(value)
        num = self.num.substitute(name, value)
        factors: List[Tuple[SparsePoly, int]] = []
        for g, m in self.factors:
            image = g.substitute(name, value)
            if image.is_zero():
                raise PoleError(f"代入 {name} 后分母因子 ({g}) 为零")
            factors.append((image, m))
        return RationalFunction(num, factors)

    def to_series(self, profile: TruncationProfile) -> TruncatedSeries:
        """num · ∏ invert(factor)^mult 在给定轮廓上的展开"""
        result = TruncatedSeries.from_poly(self.num, profile)
        for g, m in self.factors:
            for _ in range(m):
                result = divide_series_by_poly(result, g)
        return result


def divide_series_by_poly(series: TruncatedSeries, poly: SparsePoly) -> TruncatedSeries:
    """级数除以多项式；二项式 c0 + c·m 走快速路径"""
    c0 = poly.constant_term()
    rest = [(e, c) for e, c in poly.items() if any(e)]
    if c0 and len(rest) == 1 and all(e >= 0 for e in rest[0][0]):
        exps, coef = rest[0]
        return divide_by_one_minus(series, divide(-coef, c0), exps).scale(divide(1, c0))
    if not rest:
        return series.scale(divide(1, c0))
    return series_mul(series, series_invert(TruncatedSeries.from_poly(poly, series.profile)))


def ratfun_equal(lhs: RationalFunction, rhs: RationalFunction) -> VerificationOutcome:
    """有理函数相等性判定"""
    found = lhs.witness(rhs)
    if found is None:
        return VerificationOutcome(status=Status.PASS)
    exps, left, right = found
    return VerificationOutcome(
        status=Status.FAIL,
        witness=Witness(exponents=lhs.registry.as_dict(exps), lhs=left, rhs=right),
    )
