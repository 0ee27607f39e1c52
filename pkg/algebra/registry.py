"""
变量表与截断轮廓

VarRegistry 固定变量顺序（q 永远排在最后），指数向量按该顺序存储为整数元组。
规范项序为分次字典序：先比较总次数，再按变量表顺序逐位比较。
"""

from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple

from algebra.errors import PreconditionError, RegistryMismatchError

Exponents = Tuple[int, ...]

Q = "q"


class VarRegistry:
    """有序变量表"""

    __slots__ = ("names", "_index")

    def __init__(self, names: Iterable[str]):
        """
        Args:
            names: 变量名序列；"q" 若未给出会自动补上，并总是移到末尾
        """
        ordered = [name for name in names if name != Q]
        if len(set(ordered)) != len(ordered):
            raise PreconditionError(f"变量名重复: {ordered}")
        ordered.append(Q)
        self.names: Tuple[str, ...] = tuple(ordered)
        self._index: Dict[str, int] = {name: i for i, name in enumerate(self.names)}

    @property
    def size(self) -> int:
        return len(self.names)

    @property
    def q_index(self) -> int:
        return len(self.names) - 1

    def index_of(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise RegistryMismatchError(f"变量 {name!r} 不在变量表 {self.names} 中") from None

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def __iter__(self) -> Iterator[str]:
        return iter(self.names)

    def __len__(self) -> int:
        return len(self.names)

    def __eq__(self, other) -> bool:
        return isinstance(other, VarRegistry) and self.names == other.names

    def __hash__(self) -> int:
        return hash(self.names)

    def __repr__(self) -> str:
        return f"VarRegistry({', '.join(self.names)})"

    def zero(self) -> Exponents:
        return (0,) * len(self.names)

    def vector(self, exponents: Mapping[str, int]) -> Exponents:
        """由 {变量名: 指数} 构造指数向量，缺省变量的指数为 0"""
        vec = [0] * len(self.names)
        for name, power in exponents.items():
            vec[self.index_of(name)] += int(power)
        return tuple(vec)

    def as_dict(self, exponents: Exponents, skip_zero: bool = True) -> Dict[str, int]:
        """把指数向量转回 {变量名: 指数}"""
        return {
            name: power
            for name, power in zip(self.names, exponents)
            if power or not skip_zero
        }

    def check_same(self, other: "VarRegistry") -> None:
        if self != other:
            raise RegistryMismatchError(f"变量表不一致: {self.names} vs {other.names}")


def term_key(exponents: Exponents) -> Tuple[int, Exponents]:
    """分次字典序排序键"""
    return (sum(exponents), exponents)


@dataclass(frozen=True)
class TruncationProfile:
    """逐变量截断窗口：floors[i] ≤ 指数 ≤ caps[i]"""
    registry: VarRegistry
    caps: Tuple[int, ...]
    floors: Tuple[int, ...]

    def __post_init__(self):
        if len(self.caps) != self.registry.size or len(self.floors) != self.registry.size:
            raise PreconditionError("截断轮廓长度与变量表不一致")
        for name, lo, hi in zip(self.registry.names, self.floors, self.caps):
            if lo > hi:
                raise PreconditionError(f"变量 {name} 的下界 {lo} 大于上界 {hi}")

    @classmethod
    def from_caps(
        cls,
        registry: VarRegistry,
        caps: Mapping[str, int],
        floors: Optional[Mapping[str, int]] = None,
        default_cap: int = 0,
    ) -> "TruncationProfile":
        """
        由 {变量名: 上限} 构造截断轮廓

        Args:
            registry: 变量表
            caps: 各变量上限，未列出的变量取 default_cap
            floors: 各变量下限（Laurent 变量可为负），缺省为 0
            default_cap: 未列出变量的上限
        """
        floors = floors or {}
        return cls(
            registry=registry,
            caps=tuple(int(caps.get(name, default_cap)) for name in registry.names),
            floors=tuple(min(0, int(floors.get(name, 0))) for name in registry.names),
        )

    def cap(self, name: str) -> int:
        return self.caps[self.registry.index_of(name)]

    def floor(self, name: str) -> int:
        return self.floors[self.registry.index_of(name)]

    @property
    def q_cap(self) -> int:
        return self.caps[self.registry.q_index]

    def intersect(self, other: "TruncationProfile") -> "TruncationProfile":
        self.registry.check_same(other.registry)
        return TruncationProfile(
            registry=self.registry,
            caps=tuple(map(min, self.caps, other.caps)),
            floors=tuple(map(max, self.floors, other.floors)),
        )

    def contains(self, exponents: Exponents) -> bool:
        return all(lo <= e <= hi for e, lo, hi in zip(exponents, self.floors, self.caps))

    def to_dict(self) -> Dict[str, int]:
        return dict(zip(self.registry.names, self.caps))
