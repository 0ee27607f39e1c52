"""
q-Pochhammer 符号

(x;q^b)_n = ∏_{j<n} (1 - x·q^{bj})，(x;q^b)_∞ 为无穷乘积。
级数版本逐个因子乘/除到目标级数上，有理函数版本用于有限恒等式。
负长度按 (x;q)_n = (x;q)_∞/(xq^n;q)_∞ 约定处理，1/(q;q)_{m<0} 因此为 0。
"""

import logging
from dataclasses import dataclass
from typing import Optional

from algebra.errors import NonUnitError, PoleError, PreconditionError
from algebra.ratfun import RationalFunction
from algebra.scalar import divide
from algebra.series import TruncatedSeries, divide_by_one_minus, series_invert, series_mul
from algebra.sparse_poly import SparsePoly

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PochSpec:
    """(argument; q^base_exponent)_length，length 为 None 表示无穷"""
    argument: TruncatedSeries
    base_exponent: int = 1
    length: Optional[int] = None

    def __post_init__(self):
        if self.base_exponent < 1:
            raise PreconditionError(f"底数指数必须为正: {self.base_exponent}")


def _factor_count(series: TruncatedSeries, x: TruncatedSeries, base: int, length: Optional[int]) -> int:
    """在轮廓上不恒为 1 的因子个数"""
    q_index = x.registry.q_index
    cap = min(series.caps[q_index], x.caps[q_index])
    start = x.floors[q_index] + series.floors[q_index]
    if cap < start:
        count = 0
    else:
        count = (cap - start) // base + 1
    return count if length is None else min(count, length)


def _shifted(x: TruncatedSeries, power: int) -> TruncatedSeries:
    if not power:
        return x
    return x.shift({"q": power})


def _factor(x: TruncatedSeries, q_power: int) -> TruncatedSeries:
    """1 - x·q^power"""
    return TruncatedSeries.one(x.profile) - _shifted(x, q_power)


def mul_factor(series: TruncatedSeries, x: TruncatedSeries, q_power: int) -> TruncatedSeries:
    """series · (1 - x·q^q_power)"""
    return series_mul(series, _factor(x, q_power))


def div_factor(series: TruncatedSeries, x: TruncatedSeries, q_power: int) -> TruncatedSeries:
    """
    series / (1 - x·q^q_power)

    x 为完整单项式时走几何级数快速路径，否则对因子整体求逆。
    """
    if x.poly.is_zero() and x.is_complete():
        return series
    if not (x.is_complete() and x.poly.is_monomial()):
        return series_mul(series, series_invert(_factor(x, q_power)))
    (exps, coef), = x.poly.items()
    shifted = list(exps)
    shifted[x.registry.q_index] += q_power
    if not any(shifted):
        if coef == 1:
            raise PoleError("分母因子 1 - 1 为零")
        return series.scale(divide(1, 1 - coef))
    if any(e < 0 for e in shifted):
        raise NonUnitError(f"分母因子 1 - x·q^{q_power} 含负指数，无法展开为幂级数")
    return divide_by_one_minus(series, coef, tuple(shifted))


def mul_poch(series: TruncatedSeries, x: TruncatedSeries, length: Optional[int] = None, base: int = 1) -> TruncatedSeries:
    """
    series · (x;q^base)_length

    Args:
        series: 被乘级数
        x: Pochhammer 参数
        length: 长度（None 为无穷；负长度见 div_poch 的约定）
        base: 底数指数
    """
    if length is not None and length < 0:
        return div_poch(series, _shifted(x, base * length), -length, base)
    if x.poly.is_zero() and x.is_complete():
        return series
    if length is None and x.is_complete() and x.poly == 1:
        raise PreconditionError("(1;q)_∞ 的首个因子为 0")
    result = series
    for j in range(_factor_count(series, x, base, length)):
        result = series_mul(result, _factor(x, base * j))
    return result


def div_poch(series: TruncatedSeries, x: TruncatedSeries, length: Optional[int] = None, base: int = 1) -> TruncatedSeries:
    """
    series / (x;q^base)_length

    负长度 -m：1/(x;q)_{-m} = ∏_{j=1}^{m} (1 - x·q^{-bj})，可能恰为 0。
    """
    if length is not None and length < 0:
        result = series
        for j in range(1, -length + 1):
            result = series_mul(result, _factor(x, -base * j))
        return result
    if x.poly.is_zero() and x.is_complete():
        return series
    result = series
    for j in range(_factor_count(series, x, base, length)):
        result = div_factor(result, x, base * j)
    return result


def poch_finite(spec: PochSpec) -> TruncatedSeries:
    """有限 Pochhammer 乘积，截断到参数的轮廓"""
    if spec.length is None:
        raise PreconditionError("poch_finite 需要有限长度")
    if spec.length < 0:
        raise PreconditionError("负长度请在调用处使用倒数约定（div_poch）")
    one = TruncatedSeries.one(spec.argument.profile)
    return mul_poch(one, spec.argument, spec.length, spec.base_exponent)


def poch_infinite(spec: PochSpec) -> TruncatedSeries:
    """无穷 Pochhammer 乘积，只乘到在轮廓上不恒为 1 的因子为止"""
    one = TruncatedSeries.one(spec.argument.profile)
    return mul_poch(one, spec.argument, None, spec.base_exponent)


# ---------------------------------------------------------------------- 多项式 / 有理函数版本


def poch_poly(x: SparsePoly, length: int, base: int = 1) -> SparsePoly:
    """(x;q^base)_length 的多项式展开（length ≥ 0）"""
    if length < 0:
        raise PreconditionError("poch_poly 只接受非负长度")
    registry = x.registry
    q = SparsePoly.variable(registry, "q")
    result = SparsePoly.one(registry)
    for j in range(length):
        result = result * (1 - x * q ** (base * j))
    return result


def poch_rf(x: SparsePoly, length: int, base: int = 1) -> RationalFunction:
    """(x;q^base)_length，任意整数长度"""
    if length >= 0:
        return RationalFunction.from_poly(poch_poly(x, length, base))
    return inv_poch_rf(x * SparsePoly.monomial(x.registry, 1, {"q": base * length}), -length, base)


def inv_poch_rf(x: SparsePoly, length: int, base: int = 1) -> RationalFunction:
    """
    1/(x;q^base)_length

    长度为负时按约定展开为多项式，例如 1/(q;q)_{-m} = 0。
    """
    registry = x.registry
    if length < 0:
        q = SparsePoly.variable(registry, "q")
        result = SparsePoly.one(registry)
        for j in range(1, -length + 1):
            result = result * (1 - x * q ** (-base * j))
        return RationalFunction.from_poly(result)
    q = SparsePoly.variable(registry, "q")
    factors = []
    for j in range(length):
        factor = 1 - x * q ** (base * j)
        if factor.is_zero():
            raise PoleError(f"Pochhammer 分母因子 1 - ({x})·q^{base * j} 为零")
        factors.append((factor, 1))
    return RationalFunction(SparsePoly.one(registry), factors)


def poch_ratio_rf(upper, lower, length: int, base: int = 1) -> RationalFunction:
    """∏ (u;q)_length / ∏ (l;q)_length"""
    result = None
    for u in upper:
        term = poch_rf(u, length, base)
        result = term if result is None else result * term
    for l in lower:
        term = inv_poch_rf(l, length, base)
        result = term if result is None else result * term
    return result


def poch_series(x: SparsePoly, length: Optional[int], profile, base: int = 1) -> TruncatedSeries:
    """由多项式参数直接得到截断级数 (x;q^base)_length"""
    arg = TruncatedSeries.from_poly(x, profile)
    one = TruncatedSeries.one(profile)
    return mul_poch(one, arg, length, base)


__all__ = [
    "PochSpec", "poch_finite", "poch_infinite", "mul_poch", "div_poch", "mul_factor", "div_factor",
    "poch_poly", "poch_rf", "inv_poch_rf", "poch_ratio_rf", "poch_series",
]
