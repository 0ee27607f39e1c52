"""
(ax;q²)_∞/(x;q)_∞ = Σ λ_n(a) x^n 的展开系数

三条独立路线：
- lambda_coeffs：₂φ₁(q^{-n}, -q^{-n}; 0; q, q²/a) 乘以前因子，按级数计算
- lambda_rational：同一有限和的精确有理函数
- lambda_oracle：直接展开 (ax;q²)_∞/(x;q)_∞ 并读取 x^n 的系数
另有 lambda_by_inversion，用 q²-二项式反演求解线性关系。
"""

import logging
from typing import List, Union

from algebra.errors import PreconditionError
from algebra.ratfun import RationalFunction
from algebra.registry import TruncationProfile, VarRegistry
from algebra.scalar import Scalar
from algebra.series import TruncatedSeries
from algebra.sparse_poly import SparsePoly
from inversion.kernels import kernel_qsquare_binomial, triangular_solve
from qtoolkit.hypergeometric import phi_series
from qtoolkit.pochhammer import div_poch, inv_poch_rf, mul_poch, poch_poly, poch_rf

logger = logging.getLogger(__name__)


def lambda_coeffs(n: int, profile: TruncationProfile) -> TruncatedSeries:
    """
    λ_n(a) 的级数展开

    q²/a 带来 a 的负幂，先在 a 下限为 -n 的轮廓上求 φ 和，乘以 (-a)^n 后 a 的指数落在 [0, n]。

    Args:
        n: 下标，n ≥ 0
        profile: 含 q、a 的截断轮廓

    Returns:
        λ_n(a)，a 的指数非负
    """
    if n < 0:
        raise PreconditionError(f"λ_n 要求 n ≥ 0: n={n}")
    registry = profile.registry
    floors = dict(zip(registry.names, profile.floors))
    floors["a"] = min(floors.get("a", 0), -n)
    laurent = TruncationProfile.from_caps(registry, dict(zip(registry.names, profile.caps)), floors)
    upper = [
        TruncatedSeries.monomial(laurent, 1, {"q": -n}),
        TruncatedSeries.monomial(laurent, -1, {"q": -n}),
    ]
    lower = [TruncatedSeries.zero(laurent)]
    argument = TruncatedSeries.monomial(laurent, 1, {"q": 2, "a": -1})
    total = phi_series(upper, lower, argument)
    total = total.shift({"a": n, "q": n * (n - 1)}, (-1) ** n)
    q_square = TruncatedSeries.monomial(laurent, 1, {"q": 2})
    return div_poch(total, q_square, n, 2)


def lambda_rational(registry: VarRegistry, n: int, a: Union[SparsePoly, Scalar, None] = None) -> RationalFunction:
    """
    λ_n(a) 的精确有理函数

    (−a)^n q^{n(n−1)}/(q²;q²)_n · Σ_k (q^{−2n};q²)_k/(q;q)_k · q^{2k} a^{−k}，
    a^{−k} 与 (−a)^n 合并为 a^{n−k}。

    Args:
        registry: 变量表
        n: 下标
        a: 参数；缺省为变量 a，也可为 -q 之类的单项式或标量
    """
    if n < 0:
        raise PreconditionError(f"λ_n 要求 n ≥ 0: n={n}")
    if a is None:
        a = SparsePoly.variable(registry, "a")
    elif not isinstance(a, SparsePoly):
        a = SparsePoly.constant(registry, a)
    q = SparsePoly.variable(registry, "q")
    total = RationalFunction.zero(registry)
    for k in range(n + 1):
        num = poch_poly(q ** (-2 * n), k, 2) * q ** (2 * k + n * (n - 1)) * a ** (n - k) * (-1) ** n
        total = total + RationalFunction.from_poly(num) * inv_poch_rf(q, k)
    return total * inv_poch_rf(q ** 2, n, 2)


def lambda_generating(profile: TruncationProfile) -> TruncatedSeries:
    """(ax;q²)_∞/(x;q)_∞ 的截断展开（变量 a、x、q）"""
    one = TruncatedSeries.one(profile)
    ax = TruncatedSeries.monomial(profile, 1, {"a": 1, "x": 1})
    x = TruncatedSeries.monomial(profile, 1, {"x": 1})
    return div_poch(mul_poch(one, ax, None, 2), x, None, 1)


def lambda_oracle(n: int, profile: TruncationProfile) -> TruncatedSeries:
    """
    直接从乘积展开读取 x^n 的系数

    Raises:
        CoefficientNotExactError: n 超过 x 的上限
    """
    return lambda_generating(profile).coefficient_in("x", n)


def lambda_by_inversion(registry: VarRegistry, n_max: int) -> List[RationalFunction]:
    """
    解 α_n = Σ_k [n k]_{q²} β_k，α_n = (−q;q)_n a^{−n}

    Returns:
        β_n = (q²;q²)_n λ_n(a) a^{−n}，n = 0…n_max
    """
    forward, _ = kernel_qsquare_binomial(registry)
    a = SparsePoly.variable(registry, "a")
    minus_q = SparsePoly.monomial(registry, -1, {"q": 1})
    alpha = [poch_rf(minus_q, n) * RationalFunction.from_poly(a ** -n) for n in range(n_max + 1)]
    return triangular_solve(forward, alpha)


def lambda_by_inverse_kernel(registry: VarRegistry, n_max: int) -> List[RationalFunction]:
    """用显式逆核 [n k]_{q²} τ_2(n−k) 直接作用于 α"""
    _, inverse = kernel_qsquare_binomial(registry)
    a = SparsePoly.variable(registry, "a")
    minus_q = SparsePoly.monomial(registry, -1, {"q": 1})
    alpha = [poch_rf(minus_q, n) * RationalFunction.from_poly(a ** -n) for n in range(n_max + 1)]
    return inverse.apply(alpha)


__all__ = [
    "lambda_coeffs", "lambda_rational", "lambda_generating", "lambda_oracle",
    "lambda_by_inversion", "lambda_by_inverse_kernel",
]
