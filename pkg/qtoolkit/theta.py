"""
部分 theta 和与雅可比三重积
"""

import logging
from typing import Optional, Tuple

from algebra.errors import PreconditionError
from algebra.ratfun import RationalFunction
from algebra.registry import TruncationProfile, VarRegistry
from algebra.series import TruncatedSeries
from algebra.sparse_poly import SparsePoly
from qtoolkit.binomial import tau_factor
from qtoolkit.pochhammer import inv_poch_rf, poch_rf

logger = logging.getLogger(__name__)

A_POWER = "a-power-q-2n2"
PENTAGONAL_PAIR = "pentagonal-pair"

_THETA_EXPONENTS = {
    A_POWER: lambda n: 2 * n * n,
    PENTAGONAL_PAIR: lambda n: n * (n - 1) // 2,
}


def _theta_exponent(kind: str):
    try:
        return _THETA_EXPONENTS[kind]
    except KeyError:
        raise PreconditionError(f"未知的部分 theta 类型: {kind}") from None


def theta_reach(kind: str, q_cap: int) -> int:
    """第 n 项 q 阶不超过 q_cap 的最大 n"""
    exponent = _theta_exponent(kind)
    n = 0
    while exponent(n + 1) <= q_cap:
        n += 1
    return n


def _cut_tail(series: TruncatedSeries, q_bound: int) -> TruncatedSeries:
    """未求和的尾项 q 阶都大于 q_bound"""
    exact = list(series.exact)
    index = series.registry.q_index
    exact[index] = q_bound if exact[index] is None else min(exact[index], q_bound)
    return TruncatedSeries(series.poly, series.caps, series.floors, tuple(exact))


def partial_theta(
    kind: str,
    profile: TruncationProfile,
    a: Optional[TruncatedSeries] = None,
    b: Optional[TruncatedSeries] = None,
    limit: Optional[int] = None,
) -> TruncatedSeries:
    """
    两类部分 theta 和

    Args:
        kind: "a-power-q-2n2" 表示 1 + 2Σ_{n≥1} a^n q^{2n²}；
              "pentagonal-pair" 表示 1 + Σ_{n≥1} (-1)^n q^{n(n-1)/2}(a^n + b^n)
        profile: 截断轮廓
        a, b: 参数；缺省时取变量表中的 a、b
        limit: 求和到第 limit 项；缺省为 theta_reach(kind, q 上限)

    Returns:
        截断级数；提前截止时精确区域的 q 上界收缩到尾项阶数之下
    """
    exponent = _theta_exponent(kind)
    if limit is None:
        limit = theta_reach(kind, profile.q_cap)
    if a is None:
        a = TruncatedSeries.monomial(profile, 1, {"a": 1})
    if kind == PENTAGONAL_PAIR and b is None:
        b = TruncatedSeries.monomial(profile, 1, {"b": 1})
    powers = [a] if kind == A_POWER else [a, b]
    scale = 2 if kind == A_POWER else 1
    current = [TruncatedSeries.one(profile) for _ in powers]
    total = TruncatedSeries.one(profile)
    for n in range(1, limit + 1):
        current = [p * x for p, x in zip(current, powers)]
        if all(p.poly.is_zero() and p.is_complete() for p in current):
            return total
        sign = scale if kind == A_POWER else (-1) ** n
        term = current[0] if len(current) == 1 else current[0] + current[1]
        total = total + term.shift({"q": exponent(n)}, sign)
    return _cut_tail(total, exponent(limit + 1) - 1)


def jacobi_triple_series(exponent_scale: int, cap: int, profile: Optional[TruncationProfile] = None) -> TruncatedSeries:
    """
    Σ_{k∈ℤ} (-1)^k q^{s·k²}，只保留 s·k² ≤ cap 的项

    Args:
        exponent_scale: s（≥ 1）
        cap: q 的上限
        profile: 目标轮廓；缺省为只含 q 的轮廓
    """
    if exponent_scale < 1 or cap < 0:
        raise PreconditionError(f"参数无效: exponent_scale={exponent_scale}, cap={cap}")
    if profile is None:
        profile = TruncationProfile.from_caps(VarRegistry(["q"]), {"q": cap})
    terms = {}
    k = 0
    while exponent_scale * k * k <= cap:
        exps = [0] * profile.registry.size
        exps[profile.registry.q_index] = exponent_scale * k * k
        terms[tuple(exps)] = (1 if k == 0 else 2) * (-1) ** k
        k += 1
    series = TruncatedSeries.from_poly(SparsePoly(profile.registry, terms), profile)
    return _cut_tail(series, exponent_scale * k * k - 1)


def neg_shift_pochhammer(registry: VarRegistry, n: int, k: int) -> Tuple[RationalFunction, RationalFunction]:
    """
    (-q^{-n};q)_k 与 (-q;q)_n/(-q;q)_{n-k}·(-1)^k q^{-nk} τ_1(k) 两侧

    Returns:
        (左侧, 右侧)
    """
    if not 0 <= k <= n:
        raise PreconditionError(f"要求 0 ≤ k ≤ n: n={n}, k={k}")
    lhs = poch_rf(SparsePoly.monomial(registry, -1, {"q": -n}), k)
    minus_q = SparsePoly.monomial(registry, -1, {"q": 1})
    factor = SparsePoly.monomial(registry, (-1) ** k, {"q": -n * k}) * tau_factor(registry, 1, k)
    rhs = poch_rf(minus_q, n) * inv_poch_rf(minus_q, n - k) * factor
    return lhs, rhs


__all__ = ["A_POWER", "PENTAGONAL_PAIR", "theta_reach", "partial_theta", "jacobi_triple_series", "neg_shift_pochhammer"]
