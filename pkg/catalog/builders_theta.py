"""
部分 theta 恒等式、雅可比三重积特例，以及 λ_n(-q) 的两条恒等式
"""

from typing import Dict, Tuple

from algebra.series import TruncatedSeries
from bailey.propositions import oldform_family, success_sides
from catalog.context import BuildContext
from qtoolkit.hypergeometric import nested_sum
from qtoolkit.pochhammer import div_factor, mul_factor, mul_poch
from qtoolkit.theta import A_POWER, PENTAGONAL_PAIR, jacobi_triple_series, partial_theta, theta_reach

Sides = Tuple[TruncatedSeries, TruncatedSeries]

THETA = "theta"
EXPANSION = "expansion"


def aw_theta_bound(ctx: BuildContext) -> Dict[str, int]:
    """右侧第 n 项 q 阶至少为 n-1"""
    return {THETA: theta_reach(PENTAGONAL_PAIR, ctx.q_cap), EXPANSION: ctx.q_cap + 1}


def war_theta_bound(ctx: BuildContext) -> Dict[str, int]:
    return {THETA: theta_reach(A_POWER, ctx.q_cap), EXPANSION: ctx.q_cap}


def jacobi3_bound(ctx: BuildContext) -> Dict[str, int]:
    """q 指数上限"""
    return {THETA: ctx.q_cap}


def build_aw_theta(ctx: BuildContext) -> Sides:
    """
    1 + Σ_{n≥1} (-1)^n q^{n(n-1)/2}(a^n + b^n) = (q,a,b;q)_∞ Σ_n (ab/q;q)_{2n} q^n/(q,a,b,ab;q)_n

    右侧第 n 项 q 阶至少为 n-1，因此求和到 n = q 上限 + 1。
    """
    a, b = ctx.param("a"), ctx.param("b")
    ab = ctx.mono(1, a=1, b=1)
    unit = ctx.one()
    first = ctx.series(ctx.mono_poly(1, q=1) - ctx.mono_poly(1, a=1, b=1))

    def ratio(n: int, s: TruncatedSeries) -> TruncatedSeries:
        if n == 1:
            s = div_factor(s * first, unit, 1)
            return div_factor(div_factor(s, a, 0), b, 0)
        s = mul_factor(s, ab, 2 * n - 3)
        s = mul_factor(s, ab, 2 * n - 2)
        s = s.shift({"q": 1})
        s = div_factor(s, unit, n)
        for x in (a, b, ab):
            s = div_factor(s, x, n - 1)
        return s

    total = nested_sum(ctx.profile, ctx.limit(EXPANSION), ratio)
    prefactor = mul_poch(mul_poch(mul_poch(unit, ctx.mono(1, q=1)), a), b)
    lhs = partial_theta(PENTAGONAL_PAIR, ctx.profile, a, b, ctx.limit(THETA))
    return lhs, prefactor * total


def build_war_theta(ctx: BuildContext) -> Sides:
    """1 + 2Σ_{n≥1} a^n q^{2n²} = (q;q)_∞(aq;q²)_∞ Σ_n (-a;q)_{2n} q^n/((q,-aq;q)_n(aq;q²)_n)"""
    a = ctx.param("a")
    minus_a = -a
    unit = ctx.one()

    def ratio(n: int, s: TruncatedSeries) -> TruncatedSeries:
        s = mul_factor(s, minus_a, 2 * n - 2)
        s = mul_factor(s, minus_a, 2 * n - 1)
        s = s.shift({"q": 1})
        s = div_factor(s, unit, n)
        s = div_factor(s, minus_a, n)
        return div_factor(s, a, 2 * n - 1)

    total = nested_sum(ctx.profile, ctx.limit(EXPANSION), ratio)
    prefactor = mul_poch(mul_poch(unit, ctx.mono(1, q=1)), ctx.mono(1, a=1, q=1), None, 2)
    lhs = partial_theta(A_POWER, ctx.profile, a, limit=ctx.limit(THETA))
    return lhs, prefactor * total


def build_jacobi3(ctx: BuildContext) -> Sides:
    """Σ_{k∈ℤ} (-1)^k q^{3k²} = (q³,q³,q⁶;q⁶)_∞"""
    profile = ctx.profile
    unit = ctx.one()
    q3 = ctx.mono(1, q=3)
    rhs = mul_poch(mul_poch(mul_poch(unit, q3, None, 6), q3, None, 6), ctx.mono(1, q=6), None, 6)
    return jacobi_triple_series(3, ctx.limit(THETA), profile), rhs


def build_success(ctx: BuildContext):
    items = []
    for n in range(ctx.depth + 1):
        lhs, rhs = success_sides(n, ctx.registry)
        items.append(({"n": n}, lhs, rhs))
    return items


def build_oldform(ctx: BuildContext):
    return list(oldform_family(ctx.depth, ctx.registry))


__all__ = [
    "THETA", "EXPANSION", "aw_theta_bound", "war_theta_bound", "jacobi3_bound",
    "build_aw_theta", "build_war_theta", "build_jacobi3", "build_success", "build_oldform",
]
