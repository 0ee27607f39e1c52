"""
Andrews 恒等式及其推广的级数两侧

所有无穷和都用 nested_sum 按相邻项之比嵌套求值；迭代上限由下面的 *_bound 函数按主导幂次给出：
q^{n(n+1)/2} 型按 q 的上限截断，Rogers-Szegő 型按参数次数截断。
"""

import logging
from typing import Dict, List, Optional, Tuple

from algebra.ratfun import RationalFunction
from algebra.series import TruncatedSeries
from algebra.sparse_poly import SparsePoly
from catalog.context import BuildContext
from qtoolkit.binomial import rogers_szego, tau_factor
from qtoolkit.hypergeometric import nested_sum
from qtoolkit.pochhammer import div_factor, div_poch, inv_poch_rf, mul_factor, mul_poch, poch_poly

logger = logging.getLogger(__name__)

Sides = Tuple[TruncatedSeries, TruncatedSeries]


def triangular_reach(q_cap: int, offset: int = 1) -> int:
    """满足 n(n+offset)/2 ≤ q_cap 的最大 n"""
    n = 0
    while (n + 1) * (n + 1 + offset) // 2 <= q_cap:
        n += 1
    return n


def _limited(bound: int, *others: Optional[int]) -> int:
    for other in others:
        if other is not None:
            bound = min(bound, other)
    return bound


def _degree_reach(ctx: BuildContext, *names: str) -> int:
    return sum(ctx.cap(name) for name in names)


# ---------------------------------------------------------------------- 迭代上限

ANDREWS = "andrews"
ROGERS_SZEGO = "rogers-szego"
BINOMIAL = "binomial"


def andrews_bound(ctx: BuildContext) -> Dict[str, int]:
    """q^{n(n+1)/2} 型和：n(n+1)/2 ≤ q 上限"""
    return {ANDREWS: triangular_reach(ctx.q_cap)}


def andrews_c_bound(ctx: BuildContext) -> Dict[str, int]:
    """带 c^n 的 Andrews 型和，同时受 c 的上限约束"""
    return {ANDREWS: _limited(triangular_reach(ctx.q_cap), ctx.reach("c"))}


def gen1_bound(ctx: BuildContext) -> Dict[str, int]:
    return {**andrews_c_bound(ctx), ROGERS_SZEGO: _degree_reach(ctx, "a", "b")}


def gen_alpha_beta_bound(ctx: BuildContext) -> Dict[str, int]:
    """a = α²、b = β² 时 h_n 的次数为 2n"""
    return {**andrews_c_bound(ctx), ROGERS_SZEGO: _degree_reach(ctx, "alpha", "beta") // 2}


def c_qinv_bound(ctx: BuildContext) -> Dict[str, int]:
    return {ANDREWS: triangular_reach(ctx.q_cap, -1)}


def rogers_szego_bound(ctx: BuildContext) -> Dict[str, int]:
    return {ROGERS_SZEGO: _degree_reach(ctx, "a", "b")}


def q_binomial_bound(ctx: BuildContext) -> Dict[str, int]:
    return {BINOMIAL: ctx.cap("x")}


def andrews_sum(
    ctx: BuildContext,
    a: TruncatedSeries,
    b: TruncatedSeries,
    a_shift: int = 0,
    b_shift: int = 0,
    ab_den: Optional[Tuple[TruncatedSeries, int]] = None,
    c: Optional[TruncatedSeries] = None,
    extra_den: Tuple[Tuple[TruncatedSeries, int], ...] = (),
) -> TruncatedSeries:
    """
    Σ_n (aq^{a_shift}, bq^{b_shift};q)_n q^{n(n+1)/2} c^n / ((q;q)_n (x q^{s};q²)_n ∏ (y q^{t};q)_n)

    Args:
        ab_den: (x, s)，分母中的 (x q^s;q²)_n
        c: 变元 c；None 表示 c = 1
        extra_den: 额外的 (y, t)，分母中的 (y q^t;q)_n
    """
    unit = ctx.one()
    bound = ctx.limit(ANDREWS)

    def ratio(n: int, s: TruncatedSeries) -> TruncatedSeries:
        s = mul_factor(s, a, a_shift + n - 1)
        s = mul_factor(s, b, b_shift + n - 1)
        s = s.shift({"q": n})
        if c is not None:
            s = s * c
        s = div_factor(s, unit, n)
        if ab_den is not None:
            x, power = ab_den
            s = div_factor(s, x, power + 2 * (n - 1))
        for y, power in extra_den:
            s = div_factor(s, y, power + n - 1)
        return s

    return nested_sum(ctx.profile, bound, ratio)


def _prefactor(ctx: BuildContext, numerators, denominators) -> TruncatedSeries:
    """∏ (x;q^b)_∞ / ∏ (y;q^b)_∞，参数为 (级数, 底数指数)"""
    result = ctx.one()
    for x, base in numerators:
        result = mul_poch(result, x, None, base)
    for y, base in denominators:
        result = div_poch(result, y, None, base)
    return result


def _rs_head(ctx: BuildContext, left: SparsePoly, right: SparsePoly):
    def head(n: int) -> TruncatedSeries:
        return ctx.series(rogers_szego(ctx.registry, n, left, right, 2))
    return head


def _over_q_neg_cq(ctx: BuildContext, c: TruncatedSeries):
    """s / ((1-q^n)(1+cq^n))"""
    unit = ctx.one()
    minus_c = -c

    def ratio(n: int, s: TruncatedSeries) -> TruncatedSeries:
        return div_factor(div_factor(s, unit, n), minus_c, n)
    return ratio


# ---------------------------------------------------------------------- Andrews (a, b)


def build_and11(ctx: BuildContext) -> Sides:
    """Σ (a,b;q)_n q^{n(n+1)/2}/((q;q)_n(abq;q²)_n) = (-q;q)_∞(aq,bq;q²)_∞/(abq;q²)_∞"""
    a, b = ctx.param("a"), ctx.param("b")
    ab = ctx.mono(1, a=1, b=1)
    lhs = andrews_sum(ctx, a, b, ab_den=(ab, 1))
    rhs = _prefactor(
        ctx,
        [(ctx.mono(-1, q=1), 1), (ctx.mono(1, a=1, q=1), 2), (ctx.mono(1, b=1, q=1), 2)],
        [(ctx.mono(1, a=1, b=1, q=1), 2)],
    )
    return lhs, rhs


def build_gen1(ctx: BuildContext) -> Sides:
    """
    Σ (a,b;q)_n q^{n(n+1)/2} c^n/((q;q)_n(abq;q²)_n)
      = (-cq,a,b;q)_∞/(abq;q²)_∞ · Σ h_n(a,b|q²)/(q,-cq;q)_n
    """
    a, b, c = ctx.param("a"), ctx.param("b"), ctx.param("c")
    lhs = andrews_sum(ctx, a, b, ab_den=(ctx.mono(1, a=1, b=1), 1), c=c)
    total = nested_sum(
        ctx.profile,
        ctx.limit(ROGERS_SZEGO),
        _over_q_neg_cq(ctx, c),
        _rs_head(ctx, ctx.param_poly("a"), ctx.param_poly("b")),
    )
    prefactor = _prefactor(
        ctx,
        [(ctx.mono(-1, c=1, q=1), 1), (a, 1), (b, 1)],
        [(ctx.mono(1, a=1, b=1, q=1), 2)],
    )
    return lhs, prefactor * total


def _alpha_beta(ctx: BuildContext):
    """a = α², b = β² 的级数与多项式"""
    return (
        ctx.mono(1, alpha=2), ctx.mono(1, beta=2),
        ctx.mono_poly(1, alpha=2), ctx.mono_poly(1, beta=2),
    )


def _gen_rhs_prefactor(ctx: BuildContext, a: TruncatedSeries, b: TruncatedSeries, ab_q: int) -> TruncatedSeries:
    """(a,b,-cq;q)_∞/(ab q^{ab_q};q²)_∞"""
    return _prefactor(
        ctx,
        [(a, 1), (b, 1), (ctx.mono(-1, c=1, q=1), 1)],
        [(ctx.mono(1, alpha=2, beta=2, q=ab_q), 2)],
    )


def build_gen2(ctx: BuildContext) -> Sides:
    """
    Σ (a,b;q)_n q^{n(n+1)/2} c^n/((q;q)_n(ab;q²)_n)
      = (a,b,-cq;q)_∞/(ab;q²)_∞ · Σ (h_n(a,bq|q²)+h_n(aq,b|q²))/((q,-cq;q)_n(1+q^n))
    """
    a, b, a_poly, b_poly = _alpha_beta(ctx)
    c = ctx.param("c")
    q = ctx.mono_poly(1, q=1)
    lhs = andrews_sum(ctx, a, b, ab_den=(ctx.mono(1, alpha=2, beta=2), 0), c=c)
    minus_one = ctx.mono(-1)

    def head(n: int) -> TruncatedSeries:
        poly = rogers_szego(ctx.registry, n, a_poly, b_poly * q, 2) + rogers_szego(ctx.registry, n, a_poly * q, b_poly, 2)
        return div_factor(ctx.series(poly), minus_one, n)

    total = nested_sum(ctx.profile, ctx.limit(ROGERS_SZEGO), _over_q_neg_cq(ctx, c), head)
    return lhs, _gen_rhs_prefactor(ctx, a, b, 0) * total


def gen3_inner(ctx: BuildContext, c: Optional[TruncatedSeries]) -> TruncatedSeries:
    """Σ (a,b;q)_n q^{n(n+1)/2} c^n/((q,αβ;q)_n(-αβ;q)_{n+1})"""
    a, b, _, _ = _alpha_beta(ctx)
    alpha_beta = ctx.mono(1, alpha=1, beta=1)
    total = andrews_sum(ctx, a, b, c=c, extra_den=((alpha_beta, 0), (-alpha_beta, 1)))
    return div_factor(total, -alpha_beta, 0)


def build_gen3(ctx: BuildContext) -> Sides:
    """
    (α+β)·Σ (a,b;q)_n q^{n(n+1)/2} c^n/((q,αβ;q)_n(-αβ;q)_{n+1})
      = (a,b,-cq;q)_∞/(ab;q²)_∞ · Σ (α h_n(a,bq|q²) + β h_n(aq,b|q²))/(q,-cq;q)_n
    """
    _, _, a_poly, b_poly = _alpha_beta(ctx)
    a, b = ctx.mono(1, alpha=2), ctx.mono(1, beta=2)
    c = ctx.param("c")
    alpha, beta = ctx.param_poly("alpha"), ctx.param_poly("beta")
    q = ctx.mono_poly(1, q=1)
    lhs = gen3_inner(ctx, c) * ctx.series(alpha + beta)

    def head(n: int) -> TruncatedSeries:
        poly = alpha * rogers_szego(ctx.registry, n, a_poly, b_poly * q, 2)
        poly = poly + beta * rogers_szego(ctx.registry, n, a_poly * q, b_poly, 2)
        return ctx.series(poly)

    total = nested_sum(ctx.profile, ctx.limit(ROGERS_SZEGO), _over_q_neg_cq(ctx, c), head)
    return lhs, _gen_rhs_prefactor(ctx, a, b, 0) * total


def build_gen3_split(ctx: BuildContext) -> Sides:
    """
    (α+β)(1-αβ)(1+αβ)·左侧 = α(1-b)L₁ + β(1-a)L₂
    L₁ = Σ (a,bq;q)_n q^{n(n+1)/2} c^n/((q;q)_n(abq²;q²)_n)，L₂ 中 a、b 角色互换
    """
    a, b, a_poly, b_poly = _alpha_beta(ctx)
    c = ctx.param("c")
    alpha, beta = ctx.param_poly("alpha"), ctx.param_poly("beta")
    ab = ctx.mono(1, alpha=2, beta=2)
    scale = (alpha + beta) * (1 - a_poly * b_poly)
    lhs = gen3_inner(ctx, c) * ctx.series(scale)
    first = andrews_sum(ctx, a, b, b_shift=1, ab_den=(ab, 2), c=c)
    second = andrews_sum(ctx, a, b, a_shift=1, ab_den=(ab, 2), c=c)
    rhs = first * ctx.series(alpha * (1 - b_poly)) + second * ctx.series(beta * (1 - a_poly))
    return lhs, rhs


def build_andrews_pp(ctx: BuildContext) -> Sides:
    """(α+β)·左侧(c=1) = (α(aq,b;q²)_∞ + β(a,bq;q²)_∞)/(q,ab;q²)_∞"""
    alpha, beta = ctx.param_poly("alpha"), ctx.param_poly("beta")
    lhs = gen3_inner(ctx, None) * ctx.series(alpha + beta)
    a, b = ctx.mono(1, alpha=2), ctx.mono(1, beta=2)
    aq, bq = ctx.mono(1, alpha=2, q=1), ctx.mono(1, beta=2, q=1)
    first = _prefactor(ctx, [(aq, 2), (b, 2)], []) * ctx.series(alpha)
    second = _prefactor(ctx, [(a, 2), (bq, 2)], []) * ctx.series(beta)
    rhs = _prefactor(ctx, [], [(ctx.mono(1, q=1), 2), (ctx.mono(1, alpha=2, beta=2), 2)]) * (first + second)
    return lhs, rhs


def build_c_qinv(ctx: BuildContext) -> Sides:
    """Σ (a,b;q)_n q^{n(n-1)/2}/((q;q)_n(abq;q²)_n) = ((a,b;q²)_∞ + (aq,bq;q²)_∞)/(q,abq;q²)_∞"""
    a, b = ctx.param("a"), ctx.param("b")
    ab = ctx.mono(1, a=1, b=1)
    unit = ctx.one()

    def ratio(n: int, s: TruncatedSeries) -> TruncatedSeries:
        s = mul_factor(s, a, n - 1)
        s = mul_factor(s, b, n - 1)
        if n > 1:
            s = s.shift({"q": n - 1})
        s = div_factor(s, unit, n)
        return div_factor(s, ab, 2 * n - 1)

    lhs = nested_sum(ctx.profile, ctx.limit(ANDREWS), ratio)
    numerator = _prefactor(ctx, [(a, 2), (b, 2)], []) + _prefactor(
        ctx, [(ctx.mono(1, a=1, q=1), 2), (ctx.mono(1, b=1, q=1), 2)], []
    )
    rhs = _prefactor(ctx, [], [(ctx.mono(1, q=1), 2), (ctx.mono(1, a=1, b=1, q=1), 2)]) * numerator
    return lhs, rhs


def build_rs_gf(ctx: BuildContext) -> Sides:
    """Σ h_n(a,b|q²)/(q;q)_n = (abq;q²)_∞/(a,b;q)_∞"""
    unit = ctx.one()
    lhs = nested_sum(
        ctx.profile,
        ctx.limit(ROGERS_SZEGO),
        lambda n, s: div_factor(s, unit, n),
        _rs_head(ctx, ctx.param_poly("a"), ctx.param_poly("b")),
    )
    rhs = _prefactor(ctx, [(ctx.mono(1, a=1, b=1, q=1), 2)], [(ctx.param("a"), 1), (ctx.param("b"), 1)])
    return lhs, rhs


def build_s_eval(ctx: BuildContext) -> Sides:
    """Σ_n b^n/(q²;q²)_n Σ_k [n k]_{q²}(a/b)^k = Σ h_n(a,b|q²)/(q²;q²)_n = 1/((a;q²)_∞(b;q²)_∞)"""
    unit = ctx.one()
    lhs = nested_sum(
        ctx.profile,
        ctx.limit(ROGERS_SZEGO),
        lambda n, s: div_factor(s, unit, 2 * n),
        _rs_head(ctx, ctx.param_poly("a"), ctx.param_poly("b")),
    )
    rhs = _prefactor(ctx, [], [(ctx.param("a"), 2), (ctx.param("b"), 2)])
    return lhs, rhs


def build_euler_odd(ctx: BuildContext) -> Sides:
    """(-q;q)_∞ = 1/(q;q²)_∞"""
    lhs = _prefactor(ctx, [(ctx.mono(-1, q=1), 1)], [])
    rhs = _prefactor(ctx, [], [(ctx.mono(1, q=1), 2)])
    return lhs, rhs


def build_q_binomial(ctx: BuildContext) -> Sides:
    """(ax;q)_∞/(x;q)_∞ = Σ (a;q)_n x^n/(q;q)_n"""
    a, x = ctx.param("a"), ctx.param("x")
    unit = ctx.one()
    lhs = _prefactor(ctx, [(ctx.mono(1, a=1, x=1), 1)], [(x, 1)])

    def ratio(n: int, s: TruncatedSeries) -> TruncatedSeries:
        return div_factor(mul_factor(s, a, n - 1) * x, unit, n)

    rhs = nested_sum(ctx.profile, ctx.limit(BINOMIAL), ratio)
    return lhs, rhs


# ---------------------------------------------------------------------- s 参数族


def master_coefficient(ctx: BuildContext, n: int, k: int, j: int, s: Optional[int]) -> RationalFunction:
    """
    τ₂(k)(q^{-2k};q²)_j q^{2j}/((q²;q²)_k(q;q)_j(q;q)_{n-2k+j}) · q^{s(k-j)}

    s 为 None 时省略 q^{s(k-j)}（由变量 d^{k-j} 承担）。q 的最低次数为 (k-j)(k-j-1+s) ≥ 0。
    """
    registry = ctx.registry
    q = SparsePoly.variable(registry, "q")
    num = tau_factor(registry, 2, k) * poch_poly(q ** (-2 * k), j, 2) * q ** (2 * j)
    if s is not None:
        num = num * q ** (s * (k - j))
    rf = RationalFunction.from_poly(num) * inv_poch_rf(q ** 2, k, 2) * inv_poch_rf(q, j)
    return rf * inv_poch_rf(q, n - 2 * k + j)


def _master_inner(ctx: BuildContext, n: int, s: Optional[int]) -> TruncatedSeries:
    """Σ_k Σ_j 系数 · a^{n-k} b^k（d 版本再乘 d^{k-j}）"""
    total = TruncatedSeries.zero(ctx.profile)
    for k in range(min(n, ctx.cap("b")) + 1):
        if n - k > ctx.cap("a"):
            continue
        for j in range(max(0, 2 * k - n), k + 1):
            exps = {"a": n - k, "b": k}
            if s is None:
                exps["d"] = k - j
            coefficient = master_coefficient(ctx, n, k, j, s).to_series(ctx.profile)
            total = total + coefficient.shift(exps)
    return total


def _master_sides(ctx: BuildContext, s: Optional[int]) -> Sides:
    a, b, c = ctx.param("a"), ctx.param("b"), ctx.param("c")
    if s is None:
        ab_s = ctx.mono(1, a=1, b=1, d=1)
    else:
        ab_s = ctx.mono(1, a=1, b=1, q=s)
    lhs = andrews_sum(ctx, a, b, ab_den=(ab_s, 0), c=c)
    total = nested_sum(
        ctx.profile,
        ctx.limit(ROGERS_SZEGO),
        lambda n, acc: div_factor(acc, -c, n),
        lambda n: _master_inner(ctx, n, s),
    )
    prefactor = _prefactor(ctx, [(a, 1), (b, 1), (ctx.mono(-1, c=1, q=1), 1)], [(ab_s, 2)])
    return lhs, prefactor * total


MASTER_S_VALUES = (0, 1, 2, 3)


def build_master_s(ctx: BuildContext) -> List[Tuple[dict, TruncatedSeries, TruncatedSeries]]:
    """
    Σ (a,b;q)_n q^{n(n+1)/2} c^n/((q;q)_n(abq^s;q²)_n)
      = (a,b,-cq;q)_∞/(abq^s;q²)_∞ · Σ_n 1/(-cq;q)_n · Σ_k τ₂(k)(bq^s)^k a^{n-k}/(q²;q²)_k · T_{n-k,k}(s)/(q;q)_{n-2k}
    """
    items = []
    for s in MASTER_S_VALUES:
        lhs, rhs = _master_sides(ctx, s)
        items.append(({"s": s}, lhs, rhs))
    return items


def build_master_d(ctx: BuildContext) -> Sides:
    """同一恒等式以 d = q^s 为独立变量"""
    return _master_sides(ctx, None)


__all__ = [
    "ANDREWS", "ROGERS_SZEGO", "BINOMIAL", "andrews_bound", "andrews_c_bound", "gen1_bound",
    "gen_alpha_beta_bound", "c_qinv_bound", "rogers_szego_bound", "q_binomial_bound",
    "triangular_reach", "andrews_sum", "gen3_inner", "master_coefficient", "MASTER_S_VALUES",
    "build_and11", "build_gen1", "build_gen2", "build_gen3", "build_gen3_split", "build_andrews_pp",
    "build_c_qinv", "build_rs_gf", "build_s_eval", "build_euler_odd", "build_q_binomial",
    "build_master_s", "build_master_d",
]
