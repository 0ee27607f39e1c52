"""
稀疏多元 Laurent 多项式

以 {指数向量: 精确系数} 存储，不保存零系数。对象构造后不再修改，可安全共享与哈希。
"""

from fractions import Fraction
from operator import add
from typing import Dict, Iterator, List, Mapping, Optional, Tuple, Union

from algebra.errors import PoleError, PreconditionError
from algebra.registry import Exponents, VarRegistry, term_key
from algebra.scalar import Scalar, divide, format_scalar, normalize, to_scalar


class SparsePoly:
    """稀疏多项式（允许负指数）"""

    __slots__ = ("registry", "_terms", "_hash")

    def __init__(self, registry: VarRegistry, terms: Optional[Mapping[Exponents, Scalar]] = None):
        self.registry = registry
        clean: Dict[Exponents, Scalar] = {}
        if terms:
            size = registry.size
            for exps, coef in terms.items():
                if len(exps) != size:
                    raise PreconditionError(f"指数向量长度 {len(exps)} 与变量表长度 {size} 不一致")
                if coef:
                    clean[tuple(exps)] = normalize(coef)
        self._terms = clean
        self._hash: Optional[int] = None

    @classmethod
    def _wrap(cls, registry: VarRegistry, terms: Dict[Exponents, Scalar]) -> "SparsePoly":
        """直接包装已清理的字典（内部使用，调用方保证无零系数）"""
        poly = cls.__new__(cls)
        poly.registry = registry
        poly._terms = terms
        poly._hash = None
        return poly

    # ------------------------------------------------------------------ 构造

    @classmethod
    def zero(cls, registry: VarRegistry) -> "SparsePoly":
        return cls._wrap(registry, {})

    @classmethod
    def constant(cls, registry: VarRegistry, value) -> "SparsePoly":
        value = to_scalar(value)
        return cls._wrap(registry, {registry.zero(): value} if value else {})

    @classmethod
    def one(cls, registry: VarRegistry) -> "SparsePoly":
        return cls.constant(registry, 1)

    @classmethod
    def monomial(cls, registry: VarRegistry, coef=1, exponents: Optional[Mapping[str, int]] = None) -> "SparsePoly":
        """单项式 coef·∏ v^e"""
        coef = to_scalar(coef)
        if not coef:
            return cls.zero(registry)
        return cls._wrap(registry, {registry.vector(exponents or {}): coef})

    @classmethod
    def variable(cls, registry: VarRegistry, name: str) -> "SparsePoly":
        return cls.monomial(registry, 1, {name: 1})

    # ------------------------------------------------------------------ 查询

    def items(self) -> Iterator[Tuple[Exponents, Scalar]]:
        return iter(self._terms.items())

    def sorted_terms(self) -> List[Tuple[Exponents, Scalar]]:
        """按分次字典序升序排列的项"""
        return sorted(self._terms.items(), key=lambda item: term_key(item[0]))

    def coefficient(self, exponents: Exponents) -> Scalar:
        return self._terms.get(tuple(exponents), 0)

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and self.registry.zero() in self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def constant_term(self) -> Scalar:
        return self._terms.get(self.registry.zero(), 0)

    def leading_term(self) -> Tuple[Exponents, Scalar]:
        """分次字典序最大的项"""
        if not self._terms:
            raise PreconditionError("零多项式没有首项")
        exps = max(self._terms, key=term_key)
        return exps, self._terms[exps]

    def min_exponents(self) -> Exponents:
        if not self._terms:
            return self.registry.zero()
        return tuple(map(min, *self._terms.keys())) if len(self._terms) > 1 else next(iter(self._terms))

    def max_exponents(self) -> Exponents:
        if not self._terms:
            return self.registry.zero()
        return tuple(map(max, *self._terms.keys())) if len(self._terms) > 1 else next(iter(self._terms))

    def degree(self, name: str) -> int:
        return self.max_exponents()[self.registry.index_of(name)]

    def variables(self) -> List[str]:
        """实际出现的变量"""
        lo, hi = self.min_exponents(), self.max_exponents()
        return [name for name, a, b in zip(self.registry.names, lo, hi) if a or b]

    # ------------------------------------------------------------------ 比较

    def __eq__(self, other) -> bool:
        if isinstance(other, SparsePoly):
            return self.registry == other.registry and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == SparsePoly.constant(self.registry, other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.registry, frozenset(self._terms.items())))
        return self._hash

    # ------------------------------------------------------------------ 算术

    def _coerce(self, other) -> "SparsePoly":
        if isinstance(other, SparsePoly):
            self.registry.check_same(other.registry)
            return other
        return SparsePoly.constant(self.registry, other)

    def __add__(self, other) -> "SparsePoly":
        if not isinstance(other, _OPERANDS):
            return NotImplemented
        other = self._coerce(other)
        terms = dict(self._terms)
        for exps, coef in other._terms.items():
            value = terms.get(exps, 0) + coef
            if value:
                terms[exps] = normalize(value)
            else:
                terms.pop(exps, None)
        return SparsePoly._wrap(self.registry, terms)

    __radd__ = __add__

    def __neg__(self) -> "SparsePoly":
        return SparsePoly._wrap(self.registry, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "SparsePoly":
        if not isinstance(other, _OPERANDS):
            return NotImplemented
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "SparsePoly":
        if not isinstance(other, _OPERANDS):
            return NotImplemented
        return self._coerce(other) - self

    def scale(self, factor) -> "SparsePoly":
        factor = to_scalar(factor)
        if not factor:
            return SparsePoly.zero(self.registry)
        return SparsePoly._wrap(self.registry, {e: normalize(c * factor) for e, c in self._terms.items()})

    def shift(self, exponents: Exponents) -> "SparsePoly":
        """乘以单项式 ∏ v^e（e 为指数向量）"""
        return SparsePoly._wrap(
            self.registry, {tuple(map(add, e, exponents)): c for e, c in self._terms.items()}
        )

    def __mul__(self, other) -> "SparsePoly":
        if not isinstance(other, _OPERANDS):
            return NotImplemented
        if not isinstance(other, SparsePoly):
            return self.scale(other)
        self.registry.check_same(other.registry)
        if len(other._terms) > len(self._terms):
            small, big = self, other
        else:
            small, big = other, self
        terms: Dict[Exponents, Scalar] = {}
        for e1, c1 in small._terms.items():
            for e2, c2 in big._terms.items():
                key = tuple(map(add, e1, e2))
                terms[key] = terms.get(key, 0) + c1 * c2
        return SparsePoly(self.registry, terms)

    __rmul__ = __mul__

    def __pow__(self, power: int) -> "SparsePoly":
        if power < 0:
            if not self.is_monomial():
                raise PoleError("只有单项式可以取负整数次幂")
            (exps, coef), = self._terms.items()
            return SparsePoly._wrap(
                self.registry,
                {tuple(e * power for e in exps): normalize(divide(1, coef) ** (-power))},
            )
        result = SparsePoly.one(self.registry)
        base = self
        while power:
            if power & 1:
                result = result * base
            power >>= 1
            if power:
                base = base * base
        return result

    def monomial_inverse(self) -> "SparsePoly":
        """单项式的逆"""
        return self ** -1

    def exact_divide_scalar(self, value) -> "SparsePoly":
        return self.scale(divide(1, to_scalar(value)))

    # ------------------------------------------------------------------ 代入

    def substitute(self, name: str, value: Union[Scalar, "SparsePoly"]) -> "SparsePoly":
        """
        把变量 name 替换为标量或多项式

        Args:
            name: 被替换的变量
            value: 标量或同一变量表上的多项式；负指数要求 value 可逆（非零标量或单项式）

        Returns:
            代入后的多项式
        """
        idx = self.registry.index_of(name)
        grouped: Dict[int, Dict[Exponents, Scalar]] = {}
        for exps, coef in self._terms.items():
            power = exps[idx]
            rest = exps[:idx] + (0,) + exps[idx + 1:]
            grouped.setdefault(power, {})[rest] = coef
        if not isinstance(value, SparsePoly):
            value = to_scalar(value)
            terms: Dict[Exponents, Scalar] = {}
            for power, part in grouped.items():
                if power < 0 and value == 0:
                    raise PoleError(f"代入 {name}=0 时出现负指数")
                factor = value ** power if power >= 0 else divide(1, value) ** (-power)
                for rest, coef in part.items():
                    terms[rest] = terms.get(rest, 0) + coef * factor
            return SparsePoly(self.registry, terms)
        self.registry.check_same(value.registry)
        result = SparsePoly.zero(self.registry)
        powers: Dict[int, SparsePoly] = {}
        for power, part in sorted(grouped.items()):
            if power not in powers:
                powers[power] = value ** power
            result = result + SparsePoly._wrap(self.registry, part) * powers[power]
        return result

    # ------------------------------------------------------------------ 显示

    def __repr__(self) -> str:
        return f"SparsePoly({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for exps, coef in self.sorted_terms():
            mono = "*".join(
                name if power == 1 else f"{name}^{power}"
                for name, power in zip(self.registry.names, exps)
                if power
            )
            text = format_scalar(coef)
            if mono:
                text = mono if coef == 1 else ("-" + mono if coef == -1 else f"{text}*{mono}")
            pieces.append(text)
        return " + ".join(pieces).replace("+ -", "- ")


_OPERANDS = (SparsePoly, int, Fraction)


def binomial_poly(registry: VarRegistry, coef, exponents: Mapping[str, int]) -> SparsePoly:
    """1 - coef·∏ v^e"""
    return SparsePoly.one(registry) - SparsePoly.monomial(registry, coef, exponents)
