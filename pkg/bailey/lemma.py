"""
Bailey 引理

给定以 a 为参数的 Bailey 对 (α, β)，
  β'_n = 1/(aq/ρ1, aq/ρ2;q)_n · Σ_k (ρ1, ρ2;q)_k (aq/ρ1ρ2;q)_{n-k}/(q;q)_{n-k} · (aq/ρ1ρ2)^k β_k
  α'_n = (ρ1, ρ2;q)_n/(aq/ρ1, aq/ρ2;q)_n · (aq/ρ1ρ2)^n α_n
仍是 Bailey 对。(aq/ρ1ρ2)^k 拆成 (aq/ρ1)^k (1/ρ2)^k 分配到两个 ρ 槽位，
ρ → ∞ 时 (ρ;q)_k (x/ρ)^k → (-x)^k q^{k(k-1)/2}，(aq/ρ;q)_m → 1。
"""

import logging
from dataclasses import dataclass
from typing import Optional, Tuple, Union

from algebra.compare import compare_family
from algebra.outcome import VerificationOutcome
from algebra.ratfun import RationalFunction
from algebra.scalar import Scalar, divide, to_scalar
from algebra.sparse_poly import SparsePoly
from bailey.pairs import BaileyPair
from qtoolkit.pochhammer import inv_poch_rf, poch_poly

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RhoSpec:
    """ρ 参数：value 为 None 表示 ρ → ∞"""
    value: Optional[Union[SparsePoly, Scalar]] = None

    @classmethod
    def infinite(cls) -> "RhoSpec":
        return cls(None)

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def poly(self, registry) -> SparsePoly:
        if isinstance(self.value, SparsePoly):
            return self.value
        return SparsePoly.constant(registry, self.value)

    def __str__(self) -> str:
        return "∞" if self.is_infinite else str(self.value)


def _over(x: SparsePoly, rho: SparsePoly) -> SparsePoly:
    """x/ρ；ρ 须为非零常数或单项式"""
    if rho.is_constant():
        return x.scale(divide(1, to_scalar(rho.constant_term())))
    return x * rho ** -1


def _slot_numerator(x: SparsePoly, rho: RhoSpec, k: int) -> SparsePoly:
    """(ρ;q)_k (x/ρ)^k，ρ → ∞ 时为 (-x)^k q^{k(k-1)/2}"""
    registry = x.registry
    q = SparsePoly.variable(registry, "q")
    if rho.is_infinite:
        return (-x) ** k * q ** (k * (k - 1) // 2)
    r = rho.poly(registry)
    x_over = _over(x, r)
    result = SparsePoly.one(registry)
    for j in range(k):
        result = result * (x_over - x * q ** j)
    return result


def _slot_denominator(aq: SparsePoly, rho: RhoSpec, length: int) -> RationalFunction:
    """1/(aq/ρ;q)_length，ρ → ∞ 时为 1"""
    if rho.is_infinite:
        return RationalFunction.one(aq.registry)
    return inv_poch_rf(_over(aq, rho.poly(aq.registry)), length)


def bailey_lemma_sides(pair: BaileyPair, rho1: RhoSpec, rho2: RhoSpec, n: int) -> Tuple[RationalFunction, RationalFunction]:
    """
    Bailey 引理作用后的定义关系两侧

    Returns:
        (β'_n, Σ_k α'_k/((q;q)_{n-k}(aq;q)_{n+k}))
    """
    registry = pair.registry
    q = SparsePoly.variable(registry, "q")
    one = SparsePoly.one(registry)
    aq = pair.base_a * q
    finite = not (rho1.is_infinite or rho2.is_infinite)
    mixed = _over(_over(aq, rho1.poly(registry)), rho2.poly(registry)) if finite else None

    lhs = RationalFunction.zero(registry)
    for k in range(n + 1):
        num = _slot_numerator(aq, rho1, k) * _slot_numerator(one, rho2, k)
        if finite:
            num = num * poch_poly(mixed, n - k)
        lhs = lhs + RationalFunction.from_poly(num) * inv_poch_rf(q, n - k) * pair.beta(k)
    lhs = lhs * _slot_denominator(aq, rho1, n) * _slot_denominator(aq, rho2, n)

    rhs = RationalFunction.zero(registry)
    for k in range(n + 1):
        num = _slot_numerator(aq, rho1, k) * _slot_numerator(one, rho2, k)
        term = RationalFunction.from_poly(num) * pair.alpha(k)
        term = term * _slot_denominator(aq, rho1, k) * _slot_denominator(aq, rho2, k)
        rhs = rhs + term * inv_poch_rf(q, n - k) * inv_poch_rf(aq, n + k)
    return lhs, rhs


def lemma_family(pair: BaileyPair, rho1: RhoSpec, rho2: RhoSpec, n_max: int):
    for n in range(n_max + 1):
        lhs, rhs = bailey_lemma_sides(pair, rho1, rho2, n)
        yield {"n": n}, lhs, rhs


def verify_bailey_lemma(pair: BaileyPair, rho1: RhoSpec, rho2: RhoSpec, n_max: int) -> VerificationOutcome:
    outcome = compare_family(lemma_family(pair, rho1, rho2, n_max))
    logger.debug("Bailey 引理 %s (ρ1=%s, ρ2=%s) 到 n=%d: %s", pair.name, rho1, rho2, n_max, outcome.status.value)
    return outcome


__all__ = ["RhoSpec", "bailey_lemma_sides", "lemma_family", "verify_bailey_lemma"]
