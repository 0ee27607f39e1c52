"""
有限和 T_{r,n}(s) = Σ_{k=0}^{n} (q^{-2n};q²)_k / (q, q^{1+r-n};q)_k · q^{(2-s)k}

s 可以是整数，也可以用符号 y = q^s 表示（y^{-k} 直接作为 Laurent 分子保存）。
"""

import logging
from dataclasses import dataclass
from typing import Optional

from algebra.errors import PoleError, PreconditionError
from algebra.ratfun import RationalFunction
from algebra.registry import VarRegistry
from algebra.sparse_poly import SparsePoly
from qtoolkit.pochhammer import inv_poch_rf, poch_poly, poch_rf

logger = logging.getLogger(__name__)

T_REGISTRY = VarRegistry(["y", "q"])


@dataclass(frozen=True)
class TSumSpec:
    """
    Attributes:
        r: 整数参数
        n: 非负整数
        s: 整数 s；None 表示符号 y = q^s
    """
    r: int
    n: int
    s: Optional[int] = None

    def __post_init__(self):
        if self.n < 0:
            raise PreconditionError(f"T_{{r,n}} 要求 n ≥ 0: n={self.n}")

    @property
    def symbolic(self) -> bool:
        return self.s is None


def t_sum(spec: TSumSpec, registry: VarRegistry = T_REGISTRY) -> RationalFunction:
    """
    直接求和

    Raises:
        PoleError: (q^{1+r-n};q)_k 在求和范围内出现零因子
    """
    q = SparsePoly.variable(registry, "q")
    if spec.symbolic:
        step = q ** 2 * SparsePoly.variable(registry, "y") ** -1
    else:
        step = q ** (2 - spec.s)
    shifted = q ** (1 + spec.r - spec.n)
    total = RationalFunction.zero(registry)
    for k in range(spec.n + 1):
        try:
            den = inv_poch_rf(q, k) * inv_poch_rf(shifted, k)
        except PoleError:
            raise PoleError(f"T_{{{spec.r},{spec.n}}} 的分母 (q^{{{1 + spec.r - spec.n}}};q)_{k} 为零") from None
        total = total + RationalFunction.from_poly(poch_poly(q ** (-2 * spec.n), k, 2) * step ** k) * den
    return total


def t_closed_s1(r: int, n: int, registry: VarRegistry = T_REGISTRY) -> RationalFunction:
    """T_{r,n}(1) = (−q^{1+r};q)_n/(q^{1+r−n};q)_n · (−1)^n q^{−n²}"""
    if r < n:
        raise PreconditionError(f"闭式要求 r ≥ n: r={r}, n={n}")
    q = SparsePoly.variable(registry, "q")
    sign = SparsePoly.monomial(registry, (-1) ** n, {"q": -n * n})
    return poch_rf(-q ** (1 + r), n) * inv_poch_rf(q ** (1 + r - n), n) * sign


def t_closed_s0(r: int, n: int, registry: VarRegistry = T_REGISTRY) -> RationalFunction:
    """T_{r,n}(0) = (q^n+q^r)/(1+q^{r+n}) · (−q^{1+r};q)_n/(q^{1+r−n};q)_n · (−1)^n q^{−n²+n}"""
    if r < n:
        raise PreconditionError(f"闭式要求 r ≥ n: r={r}, n={n}")
    q = SparsePoly.variable(registry, "q")
    ratio = RationalFunction.quotient(q ** n + q ** r, 1 + q ** (r + n))
    sign = SparsePoly.monomial(registry, (-1) ** n, {"q": -n * n + n})
    return ratio * poch_rf(-q ** (1 + r), n) * inv_poch_rf(q ** (1 + r - n), n) * sign


def recurrence_coefficients(r: int, n: int, registry: VarRegistry = T_REGISTRY):
    """
    二阶递推的三个系数（y = q^s 为符号）

    Returns:
        (c0, c1, c2)，满足 c0·T_{r,n} + c1·T_{r,n+1} + c2·T_{r,n+2} = 0
    """
    q = SparsePoly.variable(registry, "q")
    y_inv = SparsePoly.variable(registry, "y") ** -1
    c0 = y_inv * (1 - q ** (2 * n + 2)) * (y_inv + q ** (r + n))
    c1 = q ** n * (q ** n - q ** r) * (-q ** (2 * n + 1) + q ** (r + n) + y_inv + q ** -1 * y_inv)
    c2 = q ** (2 * n) * (q ** n - q ** r) * (q ** (n + 1) - q ** r)
    return c0, c1, c2


__all__ = ["TSumSpec", "T_REGISTRY", "t_sum", "t_closed_s1", "t_closed_s0", "recurrence_coefficients"]
