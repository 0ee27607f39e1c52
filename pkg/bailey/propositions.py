"""
由两对 Bailey 对经 Bailey 引理得到的具体恒等式

每个函数返回 (左侧, 右侧)；有限 n 用有理函数，n → ∞ 的极限形式用截断级数。
"""

import logging

from typing import Dict, Iterable, Optional, Tuple

from algebra.compare import compare_family
from algebra.errors import PreconditionError
from algebra.outcome import VerificationOutcome
from algebra.ratfun import RationalFunction
from algebra.registry import TruncationProfile, VarRegistry
from algebra.series import TruncatedSeries
from algebra.sparse_poly import SparsePoly
from bailey.lemma import RhoSpec, lemma_family
from bailey.pairs import Q_REGISTRY, gamma_sum, pair_3666, pair_chain_family, pair_great
from inversion.kernels import kernel_carlitz
from inversion.lambda_coeffs import lambda_rational
from qtoolkit.pochhammer import div_poch, inv_poch_rf, mul_poch, poch_poly

logger = logging.getLogger(__name__)

RHO_REGISTRY = VarRegistry(["rho1", "rho2", "q"])
A_REGISTRY = VarRegistry(["a", "q"])

Sides = Tuple[RationalFunction, RationalFunction]


def _q(registry: VarRegistry) -> SparsePoly:
    return SparsePoly.variable(registry, "q")


def shifted_a_product(k: int, a: SparsePoly) -> SparsePoly:
    """(1/a;q)_k a^k = ∏_{j<k} (a - q^j)"""
    q = _q(a.registry)
    result = SparsePoly.one(a.registry)
    for j in range(k):
        result = result * (a - q ** j)
    return result


def bilateral_sum(n: int, scale: int, registry: VarRegistry = Q_REGISTRY) -> RationalFunction:
    """Σ_{k=-n}^{n} (-1)^k q^{scale·k²}/((q;q)_{n-k}(q;q)_{n+k})"""
    q = _q(registry)
    total = RationalFunction.zero(registry)
    for k in range(-n, n + 1):
        mono = RationalFunction.monomial(registry, (-1) ** abs(k), {"q": scale * k * k})
        total = total + mono * inv_poch_rf(q, n - k) * inv_poch_rf(q, n + k)
    return total


# ---------------------------------------------------------------------- 显式形式（一般 ρ）


def conc_great_family(rho1: RhoSpec, rho2: RhoSpec, n_max: int, registry: VarRegistry = RHO_REGISTRY):
    """第二对 (α_n = 2(-1)^n q^{2n²}) 经 Bailey 引理的显式形式"""
    return lemma_family(pair_great(registry), rho1, rho2, n_max)


def conc_3666_family(rho1: RhoSpec, rho2: RhoSpec, n_max: int, registry: VarRegistry = RHO_REGISTRY):
    """第一对 (α_n = 2(-1)^n q^{n²}) 经 Bailey 引理的显式形式"""
    return lemma_family(pair_3666(registry), rho1, rho2, n_max)


# ---------------------------------------------------------------------- ρ1 = a, ρ2 → ∞ 的形式


def _a_form_sides(n: int, weight, q_scale: int, a: Optional[SparsePoly], registry: VarRegistry) -> Sides:
    if n < 1:
        raise PreconditionError(f"该形式要求 n ≥ 1: n={n}")
    q = _q(registry)
    if a is None:
        a = SparsePoly.variable(registry, "a")
    aq = a * q
    lhs = RationalFunction.zero(registry)
    rhs = RationalFunction.zero(registry)
    for k in range(n + 1):
        p = shifted_a_product(k, a)
        lhs = lhs + weight(k) * RationalFunction.from_poly(p * poch_poly(a, n - k)) * inv_poch_rf(q, n - k)
        num = p * (1 - q ** k) * q ** (q_scale * k * k) * (-1) ** k
        rhs = rhs + RationalFunction.from_poly(num) * inv_poch_rf(aq, k) * inv_poch_rf(q, n - k) * inv_poch_rf(q, n + k)
    rhs = rhs * RationalFunction.from_poly(poch_poly(q, n - 1) * poch_poly(aq, n) * 2)
    return lhs, rhs


def conc_great_a_sides(n: int, a: Optional[SparsePoly] = None, registry: VarRegistry = A_REGISTRY) -> Sides:
    """
    Σ_k (1/a)_k (a)_{n-k} a^k γ(k)/(q)_{n-k}
      = 2(q)_{n-1}(aq)_n Σ_k (1/a)_k (1-q^k) q^{2k²} (-a)^k/((aq)_k (q)_{n-k} (q)_{n+k})
    """
    return _a_form_sides(n, lambda k: gamma_sum(k, registry), 2, a, registry)


def conc_3666_a_sides(n: int, a: Optional[SparsePoly] = None, registry: VarRegistry = A_REGISTRY) -> Sides:
    """同上，γ(k) 换成 1/(-q;q)_k，q^{2k²} 换成 q^{k²}"""
    minus_q = SparsePoly.monomial(registry, -1, {"q": 1})
    return _a_form_sides(n, lambda k: inv_poch_rf(minus_q, k), 1, a, registry)


def a_limit_terms(profile: TruncationProfile) -> Tuple[int, int]:
    """
    n → ∞ 形式两侧求和的最后一项下标

    左侧第 k 项中 a 的次数为 k-m 的部分 q 阶不低于 m(m-1)/2；右侧第 k 项 q 阶不低于 2k²。
    """
    q_cap, a_cap = profile.cap("q"), profile.cap("a")
    reach = 0
    while (reach + 1) * reach // 2 <= q_cap:
        reach += 1
    last = 0
    while 2 * (last + 1) ** 2 <= q_cap:
        last += 1
    return a_cap + reach, last


def conc_great_a_limit(
    profile: TruncationProfile,
    terms: Optional[Tuple[int, int]] = None,
) -> Tuple[TruncatedSeries, TruncatedSeries]:
    """
    n → ∞：(1-a) Σ_k (1/a)_k a^k γ(k) = 2 Σ_k (1/a)_k (-a)^k (1-q^k) q^{2k²}/(aq;q)_k

    Args:
        profile: 含 a、q 的轮廓
        terms: (左侧, 右侧) 最后一项下标，不得小于 a_limit_terms 给出的值
    """
    registry = profile.registry
    lhs_last, rhs_last = terms or a_limit_terms(profile)
    a = SparsePoly.variable(registry, "a")
    q = _q(registry)
    lhs = TruncatedSeries.zero(profile)
    for k in range(lhs_last + 1):
        term = RationalFunction.from_poly(shifted_a_product(k, a)) * gamma_sum(k, registry)
        lhs = lhs + term.to_series(profile)
    lhs = lhs * (1 - a)
    rhs = TruncatedSeries.zero(profile)
    aq = TruncatedSeries.from_poly(a * q, profile)
    for k in range(rhs_last + 1):
        num = shifted_a_product(k, a) * (1 - q ** k) * q ** (2 * k * k) * (-1) ** k
        rhs = rhs + div_poch(TruncatedSeries.from_poly(num, profile), aq, k)
    return lhs, rhs * 2


# ---------------------------------------------------------------------- ρ1, ρ2 → ∞ 的形式


def conc_great_limit_sides(n: int, registry: VarRegistry = Q_REGISTRY) -> Sides:
    """Σ_k q^{k²} γ(k)/((q)_k (q)_{n-k}) = Σ_{k=-n}^{n} (-1)^k q^{3k²}/((q)_{n-k}(q)_{n+k})"""
    q = _q(registry)
    lhs = RationalFunction.zero(registry)
    for k in range(n + 1):
        lhs = lhs + gamma_sum(k, registry) * q ** (k * k) * inv_poch_rf(q, k) * inv_poch_rf(q, n - k)
    return lhs, bilateral_sum(n, 3, registry)


def conc_3666_limit_sides(n: int, registry: VarRegistry = Q_REGISTRY) -> Sides:
    """Σ_k q^{k²}/((q²;q²)_k (q)_{n-k}) = Σ_{k=-n}^{n} (-1)^k q^{2k²}/((q)_{n-k}(q)_{n+k})"""
    q = _q(registry)
    lhs = RationalFunction.zero(registry)
    for k in range(n + 1):
        lhs = lhs + inv_poch_rf(q ** 2, k, 2) * q ** (k * k) * inv_poch_rf(q, n - k)
    return lhs, bilateral_sum(n, 2, registry)


def closing_sum_sides(n: int, registry: VarRegistry = Q_REGISTRY) -> Sides:
    """Σ_k q^{k²}/((q)_k² (q)_{n-k}) = 1/(q)_n²"""
    q = _q(registry)
    lhs = RationalFunction.zero(registry)
    for k in range(n + 1):
        lhs = lhs + inv_poch_rf(q, k) ** 2 * q ** (k * k) * inv_poch_rf(q, n - k)
    return lhs, inv_poch_rf(q, n) ** 2


def double_limit_terms(profile: TruncationProfile) -> int:
    """k² ≤ q 上限的最大 k"""
    last = 0
    while (last + 1) ** 2 <= profile.q_cap:
        last += 1
    return last


def conc_great_double_limit(
    profile: TruncationProfile,
    last: Optional[int] = None,
) -> Tuple[TruncatedSeries, TruncatedSeries]:
    """Σ_k q^{k²} γ(k)/(q;q)_k = (q³;q⁶)_∞/(q, q²;q³)_∞，左侧求和到 k = last"""
    registry = profile.registry
    q = _q(registry)
    if last is None:
        last = double_limit_terms(profile)
    lhs = TruncatedSeries.zero(profile)
    for k in range(last + 1):
        lhs = lhs + (gamma_sum(k, registry) * q ** (k * k) * inv_poch_rf(q, k)).to_series(profile)
    one = TruncatedSeries.one(profile)
    rhs = mul_poch(one, TruncatedSeries.monomial(profile, 1, {"q": 3}), None, 6)
    rhs = div_poch(rhs, TruncatedSeries.monomial(profile, 1, {"q": 1}), None, 3)
    rhs = div_poch(rhs, TruncatedSeries.monomial(profile, 1, {"q": 2}), None, 3)
    return lhs, rhs


# ---------------------------------------------------------------------- λ_n(-q) 相关


def success_sides(n: int, registry: VarRegistry = Q_REGISTRY) -> Sides:
    """q^{n(n-1)/2}(1+q^n) Σ_k (q^{-n}, q^n;q)_k q^k λ_k(-q) = 2q^{2n²}"""
    q = _q(registry)
    minus_q = -q
    total = RationalFunction.zero(registry)
    for k in range(n + 1):
        num = poch_poly(q ** -n, k) * poch_poly(q ** n, k) * q ** k
        if num.is_zero():
            continue
        total = total + RationalFunction.from_poly(num) * lambda_rational(registry, k, minus_q)
    lhs = total * (q ** (n * (n - 1) // 2) * (1 + q ** n))
    return lhs, RationalFunction.monomial(registry, 2, {"q": 2 * n * n})


def oldform_family(n_max: int, registry: VarRegistry = Q_REGISTRY):
    """
    Carlitz 反演 (a = 1) 求 (q)_n² λ_n(-q)，与直接有限和及双边和比较

    标签 route=0 为反演结果对 (q)_n² λ_n(-q)，route=1 为 λ_n(-q) 对双边和。
    """
    q = _q(registry)
    _, inverse = kernel_carlitz(registry, 1)
    betas = [
        RationalFunction.monomial(registry, 2, {"q": 2 * n * n - n * (n - 1) // 2}) / (1 + q ** n)
        for n in range(n_max + 1)
    ]
    solved = inverse.apply(betas)
    for n in range(n_max + 1):
        direct = lambda_rational(registry, n, -q)
        yield {"n": n, "route": 0}, solved[n], direct * poch_poly(q, n) ** 2
        yield {"n": n, "route": 1}, direct, bilateral_sum(n, 2, registry)


def _indexed(sides_fn, n_values: Iterable[int]):
    for n in n_values:
        lhs, rhs = sides_fn(n)
        yield {"n": n}, lhs, rhs


def verify_success_identity(n_max: int) -> VerificationOutcome:
    return compare_family(_indexed(success_sides, range(n_max + 1)))


def verify_proposition_suite(n_max: int = 6, q_cap: int = 30) -> Dict[str, VerificationOutcome]:
    """
    逐条检查全部具体恒等式（ρ 取 ∞ 与若干有理值）

    Returns:
        {名称: 结果}
    """
    infinite = RhoSpec.infinite()
    two, three = RhoSpec(SparsePoly.constant(RHO_REGISTRY, 2)), RhoSpec(SparsePoly.constant(RHO_REGISTRY, 3))
    profile = TruncationProfile.from_caps(Q_REGISTRY, {"q": q_cap})
    limit_profile = TruncationProfile.from_caps(A_REGISTRY, {"q": min(q_cap, 16), "a": 6})
    results = {
        "great-rho": compare_family(conc_great_family(two, three, n_max)),
        "great-rho-inf": compare_family(conc_great_family(infinite, infinite, n_max)),
        "3666-rho": compare_family(conc_3666_family(two, three, n_max)),
        "great-a": compare_family(_indexed(conc_great_a_sides, range(1, n_max + 1))),
        "3666-a": compare_family(_indexed(conc_3666_a_sides, range(1, n_max + 1))),
        "great-limit": compare_family(_indexed(conc_great_limit_sides, range(n_max + 1))),
        "3666-limit": compare_family(_indexed(conc_3666_limit_sides, range(n_max + 1))),
        "closing": compare_family(_indexed(closing_sum_sides, range(n_max + 1))),
        "chain": compare_family(pair_chain_family(n_max)),
        "double-limit": compare_family([({}, *conc_great_double_limit(profile))]),
        "a-limit": compare_family([({}, *conc_great_a_limit(limit_profile))]),
        "success": verify_success_identity(n_max),
        "oldform": compare_family(oldform_family(n_max)),
    }
    for name, outcome in results.items():
        logger.info("命题 %s: %s", name, outcome.status.value)
    return results


__all__ = [
    "RHO_REGISTRY", "A_REGISTRY", "shifted_a_product", "bilateral_sum",
    "conc_great_family", "conc_3666_family", "conc_great_a_sides", "conc_3666_a_sides",
    "a_limit_terms", "double_limit_terms", "conc_great_a_limit", "conc_great_limit_sides",
    "conc_3666_limit_sides", "closing_sum_sides",
    "conc_great_double_limit", "success_sides", "oldform_family", "verify_success_identity",
    "verify_proposition_suite",
]
