"""
下三角反演核

两对互逆的下三角矩阵：
- q²-二项式核 [n k]_{q²} 与 [n k]_{q²} τ_2(n-k)
- Carlitz 核 (q^{-n}, aq^n;q)_k/(q, aq;q)_k · q^k 与
  (a, q^{-n};q)_k/(q, aq^{1+n};q)_k · (1-aq^{2k})/(1-a) · q^{kn}
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Sequence, Tuple, Union

from algebra.errors import PreconditionError
from algebra.ratfun import RationalFunction
from algebra.registry import VarRegistry
from algebra.scalar import Scalar
from algebra.sparse_poly import SparsePoly
from qtoolkit.binomial import q_binomial, tau_factor
from qtoolkit.pochhammer import inv_poch_rf, poch_poly

logger = logging.getLogger(__name__)

Entry = Union[RationalFunction, SparsePoly, Scalar]


def as_rational(registry: VarRegistry, value: Entry) -> RationalFunction:
    """把多项式或标量提升为有理函数"""
    if isinstance(value, RationalFunction):
        return value
    if isinstance(value, SparsePoly):
        return RationalFunction.from_poly(value)
    return RationalFunction.constant(registry, value)


@dataclass
class TriangularKernel:
    """
    下三角核 entry(n, k)，n ≥ k ≥ 0；k > n 时为 0

    Attributes:
        name: 描述性名称
        registry: 变量表
        entry_fn: (n, k) -> 有理函数
    """
    name: str
    registry: VarRegistry
    entry_fn: Callable[[int, int], RationalFunction]
    _cache: Dict[Tuple[int, int], RationalFunction] = field(default_factory=dict, repr=False, compare=False)

    def entry(self, n: int, k: int) -> RationalFunction:
        if k < 0 or k > n:
            return RationalFunction.zero(self.registry)
        key = (n, k)
        if key not in self._cache:
            self._cache[key] = as_rational(self.registry, self.entry_fn(n, k))
        return self._cache[key]

    def matrix(self, size: int) -> List[List[RationalFunction]]:
        """前 size 行 size 列"""
        return [[self.entry(n, k) for k in range(size)] for n in range(size)]

    def apply(self, sequence: Sequence[Entry]) -> List[RationalFunction]:
        """(K·β)_n = Σ_k K[n, k] β_k"""
        values = [as_rational(self.registry, v) for v in sequence]
        result = []
        for n in range(len(values)):
            total = RationalFunction.zero(self.registry)
            for k in range(n + 1):
                total = total + self.entry(n, k) * values[k]
            result.append(total)
        return result


def multiply_kernels(left: TriangularKernel, right: TriangularKernel, size: int) -> List[List[RationalFunction]]:
    """两个下三角核的乘积矩阵（前 size 阶）"""
    registry = left.registry
    product = []
    for n in range(size):
        row = []
        for k in range(size):
            total = RationalFunction.zero(registry)
            for j in range(k, n + 1):
                total = total + left.entry(n, j) * right.entry(j, k)
            row.append(total)
        product.append(row)
    return product


def is_identity(matrix: List[List[RationalFunction]]) -> bool:
    for n, row in enumerate(matrix):
        for k, value in enumerate(row):
            if value != (1 if n == k else 0):
                return False
    return True


def kernel_qsquare_binomial(registry: VarRegistry) -> Tuple[TriangularKernel, TriangularKernel]:
    """
    q²-二项式反演对

    Returns:
        (M, M⁻¹)，M[n,k] = [n k]_{q²}，M⁻¹[n,k] = [n k]_{q²} τ_2(n-k)
    """
    forward = TriangularKernel(
        name="q2-binomial",
        registry=registry,
        entry_fn=lambda n, k: q_binomial(registry, n, k, 2),
    )
    inverse = TriangularKernel(
        name="q2-binomial-inverse",
        registry=registry,
        entry_fn=lambda n, k: q_binomial(registry, n, k, 2) * tau_factor(registry, 2, n - k),
    )
    return forward, inverse


def kernel_carlitz(registry: VarRegistry, a: Union[SparsePoly, Scalar]) -> Tuple[TriangularKernel, TriangularKernel]:
    """
    Carlitz 反演对

    逆核里的 (a;q)_k(1-aq^{2k})/(1-a) 约去 (1-a) 后写成 (aq;q)_{k-1}(1-aq^{2k})（k ≥ 1），
    因此 a = 1 时取到的是极限形式。

    Args:
        registry: 变量表（含 q，符号 a 时还需含 a）
        a: 参数，多项式（通常为变量 a）或标量

    Returns:
        (M, M⁻¹)
    """
    if not isinstance(a, SparsePoly):
        a = SparsePoly.constant(registry, a)
    q = SparsePoly.variable(registry, "q")

    def forward(n: int, k: int) -> RationalFunction:
        num = poch_poly(q ** -n, k) * poch_poly(a * q ** n, k) * q ** k
        return RationalFunction.from_poly(num) * inv_poch_rf(q, k) * inv_poch_rf(a * q, k)

    def inverse(n: int, k: int) -> RationalFunction:
        if k == 0:
            return RationalFunction.one(registry)
        num = poch_poly(a * q, k - 1) * (1 - a * q ** (2 * k)) * poch_poly(q ** -n, k) * q ** (k * n)
        return RationalFunction.from_poly(num) * inv_poch_rf(q, k) * inv_poch_rf(a * q ** (1 + n), k)

    label = "carlitz" if a.is_constant() else f"carlitz[{a}]"
    return (
        TriangularKernel(name=label, registry=registry, entry_fn=forward),
        TriangularKernel(name=f"{label}-inverse", registry=registry, entry_fn=inverse),
    )


def triangular_solve(kernel: TriangularKernel, alpha: Sequence[Entry]) -> List[RationalFunction]:
    """
    前代求解 α_n = Σ_k K[n,k] β_k

    Args:
        kernel: 下三角核
        alpha: 已知序列

    Returns:
        β 序列，长度与 alpha 相同

    Raises:
        PreconditionError: 对角元为 0
    """
    registry = kernel.registry
    beta: List[RationalFunction] = []
    for n, value in enumerate(alpha):
        diagonal = kernel.entry(n, n)
        if diagonal.is_zero():
            raise PreconditionError(f"核 {kernel.name} 的对角元 ({n}, {n}) 为 0")
        rest = as_rational(registry, value)
        for k in range(n):
            rest = rest - kernel.entry(n, k) * beta[k]
        beta.append(rest / diagonal)
    logger.debug("核 %s 前代求解完成，长度 %d", kernel.name, len(beta))
    return beta


__all__ = [
    "TriangularKernel", "as_rational", "multiply_kernels", "is_identity",
    "kernel_qsquare_binomial", "kernel_carlitz", "triangular_solve",
]
