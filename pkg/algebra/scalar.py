"""
精确标量
系数域为任意精度有理数。整数系数保持为 int（运算更快），其余使用 fractions.Fraction
"""

from fractions import Fraction
from typing import Union

from algebra.errors import PoleError

Scalar = Union[int, Fraction]


def normalize(value: Scalar) -> Scalar:
    """把分母为 1 的 Fraction 收缩为 int"""
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    return value


def to_scalar(value) -> Scalar:
    """
    把输入转换为精确标量

    Args:
        value: int、Fraction 或形如 "p/q" 的字符串

    Returns:
        最简形式的精确标量
    """
    if isinstance(value, bool):
        raise TypeError("布尔值不是合法系数")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return normalize(value)
    if isinstance(value, str):
        return normalize(Fraction(value.strip()))
    raise TypeError(f"不支持的系数类型: {type(value).__name__}（禁止浮点数）")


def divide(numerator: Scalar, denominator: Scalar) -> Scalar:
    """精确除法"""
    if denominator == 0:
        raise PoleError("除以零")
    if isinstance(numerator, int) and isinstance(denominator, int):
        return normalize(Fraction(numerator, denominator))
    return normalize(Fraction(numerator) / Fraction(denominator))


def format_scalar(value: Scalar) -> str:
    """格式化为 "p" 或 "p/q" 字符串"""
    value = normalize(value)
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    return str(value)
