"""
Bailey 对

β_n = Σ_{k=0}^{n} α_k / ((q;q)_{n-k} (aq;q)_{n+k})

内置两对（a = 1）：
- (2(-1)^n q^{n²}, 1/(q²;q²)_n + 1/(q;q)_n²)
- (2(-1)^n q^{2n²}, 1/(q;q)_n² + γ(n)/(q;q)_n)，γ(n) = Σ_k [n k]_q q^{k²}/(-q;q)_k
"""

import logging
from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Callable, List, Sequence, Union

from algebra.compare import compare_family
from algebra.outcome import VerificationOutcome
from algebra.ratfun import RationalFunction
from algebra.registry import VarRegistry
from algebra.scalar import Scalar
from algebra.sparse_poly import SparsePoly
from qtoolkit.binomial import q_binomial
from qtoolkit.pochhammer import inv_poch_rf

logger = logging.getLogger(__name__)

Q_REGISTRY = VarRegistry(["q"])


@dataclass(frozen=True)
class BaileyPair:
    """
    Attributes:
        name: 名称
        registry: 变量表
        alpha: n -> α_n
        beta: n -> β_n
        base_a: Bailey 对的参数 a
    """
    name: str
    registry: VarRegistry
    alpha: Callable[[int], RationalFunction]
    beta: Callable[[int], RationalFunction]
    base_a: SparsePoly

    def perturbed(self, index: int, delta: Union[Scalar, SparsePoly]) -> "BaileyPair":
        """β_index 加上 delta，其余不变（用于变异测试）"""
        original = self.beta

        def beta(n: int) -> RationalFunction:
            value = original(n)
            return value + delta if n == index else value

        return replace(self, name=f"{self.name}+δβ{index}", beta=beta)


def beta_from_alpha(
    alpha: Sequence[RationalFunction],
    base_a: Union[SparsePoly, Scalar],
    n_max: int,
    registry: VarRegistry = Q_REGISTRY,
) -> List[RationalFunction]:
    """
    由 α 计算 β

    Args:
        alpha: α_0…α_{n_max}
        base_a: 参数 a
        n_max: 最大下标

    Returns:
        β_0…β_{n_max}
    """
    if not isinstance(base_a, SparsePoly):
        base_a = SparsePoly.constant(registry, base_a)
    q = SparsePoly.variable(registry, "q")
    aq = base_a * q
    result = []
    for n in range(n_max + 1):
        total = RationalFunction.zero(registry)
        for k in range(n + 1):
            total = total + alpha[k] * inv_poch_rf(q, n - k) * inv_poch_rf(aq, n + k)
        result.append(total)
    return result


@lru_cache(maxsize=None)
def gamma_sum(n: int, registry: VarRegistry = Q_REGISTRY) -> RationalFunction:
    """γ(n) = Σ_k [n k]_q q^{k²}/(-q;q)_k"""
    minus_q = SparsePoly.monomial(registry, -1, {"q": 1})
    total = RationalFunction.zero(registry)
    for k in range(n + 1):
        num = q_binomial(registry, n, k) * SparsePoly.monomial(registry, 1, {"q": k * k})
        total = total + RationalFunction.from_poly(num) * inv_poch_rf(minus_q, k)
    return total


def pair_3666(registry: VarRegistry = Q_REGISTRY) -> BaileyPair:
    """(2(-1)^n q^{n²}, 1/(q²;q²)_n + 1/(q;q)_n²)"""
    q = SparsePoly.variable(registry, "q")

    def alpha(n: int) -> RationalFunction:
        return RationalFunction.monomial(registry, 2 * (-1) ** n, {"q": n * n})

    def beta(n: int) -> RationalFunction:
        return inv_poch_rf(q ** 2, n, 2) + inv_poch_rf(q, n) ** 2

    return BaileyPair("BP-3666", registry, alpha, beta, SparsePoly.one(registry))


def pair_great(registry: VarRegistry = Q_REGISTRY) -> BaileyPair:
    """(2(-1)^n q^{2n²}, 1/(q;q)_n² + γ(n)/(q;q)_n)"""
    q = SparsePoly.variable(registry, "q")

    def alpha(n: int) -> RationalFunction:
        return RationalFunction.monomial(registry, 2 * (-1) ** n, {"q": 2 * n * n})

    def beta(n: int) -> RationalFunction:
        return inv_poch_rf(q, n) ** 2 + gamma_sum(n, registry) * inv_poch_rf(q, n)

    return BaileyPair("BP-GREAT", registry, alpha, beta, SparsePoly.one(registry))


def bailey_pair_family(pair: BaileyPair, n_max: int):
    """(n, β_n, 由 α 算出的 β_n)"""
    alpha = [pair.alpha(n) for n in range(n_max + 1)]
    derived = beta_from_alpha(alpha, pair.base_a, n_max, pair.registry)
    for n in range(n_max + 1):
        yield {"n": n}, pair.beta(n), derived[n]


def verify_bailey_pair(pair: BaileyPair, n_max: int) -> VerificationOutcome:
    """n ≤ n_max 时定义关系逐项精确成立则 PASS"""
    outcome = compare_family(bailey_pair_family(pair, n_max))
    logger.debug("Bailey 对 %s 校验到 n=%d: %s", pair.name, n_max, outcome.status.value)
    return outcome


def pair_chain_family(n_max: int, registry: VarRegistry = Q_REGISTRY):
    """
    把第一对代入 ρ1, ρ2 → ∞ 的 Bailey 引理得到第二对的 β：
    β'_n = Σ_k q^{k²} β_k / (q;q)_{n-k}
    """
    q = SparsePoly.variable(registry, "q")
    source = pair_3666(registry)
    target = pair_great(registry)
    for n in range(n_max + 1):
        total = RationalFunction.zero(registry)
        for k in range(n + 1):
            total = total + source.beta(k) * q ** (k * k) * inv_poch_rf(q, n - k)
        yield {"n": n}, target.beta(n), total


__all__ = [
    "Q_REGISTRY", "BaileyPair", "beta_from_alpha", "gamma_sum", "pair_3666", "pair_great",
    "bailey_pair_family", "verify_bailey_pair", "pair_chain_family",
]
