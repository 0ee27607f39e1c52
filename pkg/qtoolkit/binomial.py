"""
q-二项式系数、τ 因子与 Rogers-Szegő 多项式
"""

from functools import lru_cache
from typing import Tuple

from algebra.errors import PreconditionError
from algebra.registry import VarRegistry
from algebra.sparse_poly import SparsePoly


@lru_cache(maxsize=4096)
def _gaussian_coefficients(n: int, k: int) -> Tuple[int, ...]:
    """
    [n k]_q 关于 q 的整系数列表

    先展开 ∏_{i=1}^{k} (1 - q^{n-k+i})，再逐个除以 (1 - q^i)；
    除以 (1 - q^i) 即 c'_m = c_m + c'_{m-i}，整除时结果仍为多项式。
    """
    coeffs = [1]
    for i in range(1, k + 1):
        step = n - k + i
        grown = coeffs + [0] * step
        for m in range(len(coeffs)):
            grown[m + step] -= coeffs[m]
        coeffs = grown
    for i in range(1, k + 1):
        quotient = [0] * (len(coeffs) - i)
        for m in range(len(quotient)):
            quotient[m] = coeffs[m] + (quotient[m - i] if m >= i else 0)
        coeffs = quotient
    return tuple(coeffs)


def q_binomial(registry: VarRegistry, n: int, k: int, base_exponent: int = 1) -> SparsePoly:
    """
    q-二项式系数 [n k]_{q^b}

    Args:
        registry: 变量表（必须含 q）
        n: 上指标
        k: 下指标；n < 0、k < 0 或 k > n 时为 0
        base_exponent: 底数指数 b

    Returns:
        q 的多项式
    """
    if n < 0 or k < 0 or k > n:
        return SparsePoly.zero(registry)
    k = min(k, n - k)
    q_index = registry.q_index
    terms = {}
    for m, coef in enumerate(_gaussian_coefficients(n, k)):
        if coef:
            exps = [0] * registry.size
            exps[q_index] = base_exponent * m
            terms[tuple(exps)] = coef
    return SparsePoly(registry, terms)


def tau_factor(registry: VarRegistry, r: int, n: int) -> SparsePoly:
    """τ_r(n) = (-1)^n q^{r·n(n-1)/2}"""
    return SparsePoly.monomial(registry, (-1) ** n, {"q": r * n * (n - 1) // 2})


def rogers_szego(registry: VarRegistry, n: int, a: SparsePoly, b: SparsePoly, base_exponent: int = 1) -> SparsePoly:
    """
    Rogers-Szegő 多项式 h_n(a, b | q^b) = Σ_k [n k]_{q^b} a^k b^{n-k}

    a、b 可以是任意多项式（常见为 a、b·q 这类单项式）。
    """
    if n < 0:
        raise PreconditionError(f"Rogers-Szegő 多项式要求 n ≥ 0: n={n}")
    result = SparsePoly.zero(registry)
    for k in range(n + 1):
        result = result + q_binomial(registry, n, k, base_exponent) * (a ** k) * (b ** (n - k))
    return result


__all__ = ["q_binomial", "tau_factor", "rogers_szego"]
