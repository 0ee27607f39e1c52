"""
有限恒等式校验：T 的二阶递推、两个闭式求值、有限 q-恒等式
"""

import logging
from typing import Iterable, Optional, Tuple

from algebra.compare import compare_family
from algebra.errors import PreconditionError
from algebra.outcome import VerificationOutcome
from algebra.ratfun import RationalFunction
from algebra.registry import VarRegistry
from algebra.sparse_poly import SparsePoly
from finite.t_sum import T_REGISTRY, TSumSpec, recurrence_coefficients, t_closed_s0, t_closed_s1, t_sum
from qtoolkit.binomial import q_binomial
from qtoolkit.pochhammer import inv_poch_rf, poch_poly

logger = logging.getLogger(__name__)

FIN_Q_REGISTRY = VarRegistry(["a", "q"])


def recurrence_residual(r: int, n: int, perturb: Optional[Tuple[int, SparsePoly]] = None) -> RationalFunction:
    """
    c0·T_{r,n} + c1·T_{r,n+1} + c2·T_{r,n+2}

    Args:
        r, n: 参数
        perturb: (系数下标, 增量)，用于变异测试
    """
    if r < n + 2:
        raise PreconditionError(f"递推校验要求 r ≥ n + 2: r={r}, n={n}")
    coefficients = list(recurrence_coefficients(r, n))
    if perturb is not None:
        index, delta = perturb
        coefficients[index] = coefficients[index] + delta
    total = RationalFunction.zero(T_REGISTRY)
    for offset, coefficient in enumerate(coefficients):
        total = total + t_sum(TSumSpec(r, n + offset)) * coefficient
    return total


def verify_t_recurrence(r: int, n: int, perturb: Optional[Tuple[int, SparsePoly]] = None) -> VerificationOutcome:
    """在 (q, y) 上把递推作为有理函数恒等式校验"""
    zero = RationalFunction.zero(T_REGISTRY)
    return compare_family([({"n": n, "r": r}, recurrence_residual(r, n, perturb), zero)])


def t_recurrence_family(n_max: int, r_span: int = 6):
    """n ≤ n_max、n+2 ≤ r ≤ n+r_span 的递推残差（右侧为 0）"""
    zero = RationalFunction.zero(T_REGISTRY)
    for n in range(n_max + 1):
        for r in range(n + 2, n + r_span + 1):
            yield {"n": n, "r": r}, recurrence_residual(r, n), zero


def chu_vandermonde_family(n_max: int, r_offsets: Iterable[int] = range(1, 7)):
    """
    T_{r,n} 在 s = 1 与 s = 0 处的两个闭式

    s = 0 的闭式只在 r ≥ n+2 时列入。
    """
    offsets = list(r_offsets)
    for n in range(n_max + 1):
        for offset in offsets:
            r = n + offset
            yield {"n": n, "r": r, "s": 1}, t_sum(TSumSpec(r, n, 1)), t_closed_s1(r, n)
            if offset >= 2:
                yield {"n": n, "r": r, "s": 0}, t_sum(TSumSpec(r, n, 0)), t_closed_s0(r, n)


def verify_chu_vandermonde_evals(n_max: int, r_offsets: Iterable[int] = range(1, 7)) -> VerificationOutcome:
    """两个闭式在整个 (n, r) 网格上的精确校验"""
    return compare_family(chu_vandermonde_family(n_max, r_offsets))


def t_specialize_family(n_max: int, r_span: int = 6):
    """符号 y 版本在 y = q、y = 1 处特化，与整数 s 的直接求和比较"""
    q = SparsePoly.variable(T_REGISTRY, "q")
    for n in range(n_max + 1):
        for r in range(n + 1, n + r_span + 1):
            symbolic = t_sum(TSumSpec(r, n))
            yield {"n": n, "r": r, "s": 1}, symbolic.substitute("y", q), t_sum(TSumSpec(r, n, 1))
            yield {"n": n, "r": r, "s": 0}, symbolic.substitute("y", 1), t_sum(TSumSpec(r, n, 0))


def finite_q_sides(m: int, registry: VarRegistry = FIN_Q_REGISTRY) -> Tuple[RationalFunction, RationalFunction]:
    """
    (−a)^M q^{M²} Σ_k (q^{−2M};q²)_k/(q;q)_k (q/a)^k 与 Σ_k [M k]_q (a;q)_k q^{k(k+1)/2}

    a^{−k} 与 (−a)^M 合并为 a^{M−k}，两侧都是 (q, a) 的多项式。
    """
    q = SparsePoly.variable(registry, "q")
    a = SparsePoly.variable(registry, "a")
    lhs = RationalFunction.zero(registry)
    for k in range(m + 1):
        num = poch_poly(q ** (-2 * m), k, 2) * q ** (k + m * m) * a ** (m - k) * (-1) ** m
        lhs = lhs + RationalFunction.from_poly(num) * inv_poch_rf(q, k)
    rhs = SparsePoly.zero(registry)
    for k in range(m + 1):
        rhs = rhs + q_binomial(registry, m, k) * poch_poly(a, k) * q ** (k * (k + 1) // 2)
    return lhs, RationalFunction.from_poly(rhs)


def finite_q_family(m_max: int):
    for m in range(m_max + 1):
        lhs, rhs = finite_q_sides(m)
        yield {"n": m}, lhs, rhs


def verify_finite_q_identity(m_max: int) -> VerificationOutcome:
    """M = 0…m_max 逐个校验"""
    return compare_family(finite_q_family(m_max))


__all__ = [
    "FIN_Q_REGISTRY", "recurrence_residual", "verify_t_recurrence", "t_recurrence_family",
    "chu_vandermonde_family", "verify_chu_vandermonde_evals", "t_specialize_family",
    "finite_q_sides", "finite_q_family", "verify_finite_q_identity",
]
