"""
基本超几何级数 rφs

Σ_n (u_1,…,u_r;q^b)_n / (q^b,l_1,…,l_s;q^b)_n · (τ(n))^{s+1-r} · z^n

按 Horner 方式从内向外嵌套求值：S = 1 + R_1(1 + R_2(1 + … R_N))，
其中 R_n 为相邻两项之比，每一步只做若干个二项式乘除。
"""

import logging
from typing import Callable, List, Optional, Sequence

from algebra.errors import PoleError, PreconditionError
from algebra.registry import TruncationProfile
from algebra.series import TruncatedSeries, divide_by_one_minus
from qtoolkit.pochhammer import div_factor, mul_factor

logger = logging.getLogger(__name__)


def terminating_length(parameter: TruncatedSeries, base: int = 1) -> Optional[int]:
    """
    参数为 q^{-bm}（m ≥ 0）时返回 m，否则返回 None

    (q^{-bm};q^b)_n 在 n > m 时为 0，级数在第 m 项终止。
    """
    if not parameter.is_complete() or not parameter.poly.is_monomial():
        return None
    (exps, coef), = parameter.poly.items()
    q_index = parameter.registry.q_index
    if coef != 1 or any(e for i, e in enumerate(exps) if i != q_index):
        return None
    power = exps[q_index]
    if power > 0 or power % base:
        return None
    return -power // base


def _widened(series: TruncatedSeries, extra: Sequence[int]) -> TruncatedSeries:
    """放宽上限；exact 不变，因此仍然可靠"""
    caps = tuple(c + w for c, w in zip(series.caps, extra))
    return TruncatedSeries(series.poly, caps, series.floors, series.exact)


def _negative_room(series: TruncatedSeries, q_shift: int) -> List[int]:
    """乘以 series·q^q_shift 时各变量最多下移的量"""
    q_index = series.registry.q_index
    room = []
    for i, floor in enumerate(series.floors):
        if i == q_index:
            floor += q_shift
        room.append(max(0, -floor))
    return room


def phi_series(
    upper: Sequence[TruncatedSeries],
    lower: Sequence[TruncatedSeries],
    argument: TruncatedSeries,
    base: int = 1,
    term_bound: Optional[int] = None,
) -> TruncatedSeries:
    """
    基本超几何级数

    Args:
        upper: 上参数 u_1…u_r
        lower: 下参数 l_1…l_s（0 表示该因子恒为 1）
        argument: 变元 z
        base: 底数 q^base 的指数
        term_bound: 非终止级数的求和上限；存在 q^{-bm} 上参数时忽略

    Returns:
        截断到 argument 轮廓的级数

    Raises:
        PreconditionError: 非终止且未给出 term_bound
        PoleError: 下参数因子在求和范围内为零
    """
    profile = argument.profile
    bound = None
    for parameter in upper:
        m = terminating_length(parameter, base)
        if m is not None:
            bound = m if bound is None else min(bound, m)
    terminating = bound is not None
    if not terminating:
        if term_bound is None:
            raise PreconditionError("非终止的 φ 级数必须给出求和上限")
        bound = term_bound

    balance = len(lower) + 1 - len(upper)
    registry = argument.registry
    q_index = registry.q_index

    # 负指数会把截断掉的尾项移回窗口内，先按总下移量放宽上限
    extra = [0] * registry.size
    for n in range(1, bound + 1):
        shifts = [_negative_room(u, base * (n - 1)) for u in upper]
        shifts.append(_negative_room(argument, 0))
        if balance < 0:
            tau_room = [0] * registry.size
            tau_room[q_index] = -balance * base * (n - 1)
            shifts.append(tau_room)
        for room in shifts:
            extra = [e + r for e, r in zip(extra, room)]
    wide_z = _widened(argument, extra)
    wide_upper = [_widened(u, extra) for u in upper]
    wide_lower = [_widened(l, extra) for l in lower]
    wide_profile = TruncationProfile(registry, wide_z.caps, profile.floors)

    q_step = [0] * registry.size
    acc = TruncatedSeries.one(wide_profile)
    for n in range(bound, 0, -1):
        for u in wide_upper:
            acc = mul_factor(acc, u, base * (n - 1))
        for l in wide_lower:
            try:
                acc = div_factor(acc, l, base * (n - 1))
            except PoleError:
                raise PoleError(f"下参数 Pochhammer 因子在第 {n} 项处为零") from None
        q_step[q_index] = base * n
        acc = divide_by_one_minus(acc, 1, tuple(q_step))
        if balance:
            acc = acc.shift({"q": balance * base * (n - 1)}, -1 if balance % 2 else 1)
        acc = acc * wide_z
        acc = acc + 1

    logger.debug("φ 级数求和完成，项数上限 %d，%s", bound, "终止" if terminating else "截断")
    return acc.restrict(dict(zip(registry.names, profile.caps)))


def nested_sum(
    profile: TruncationProfile,
    bound: int,
    apply_ratio: Callable[[int, TruncatedSeries], TruncatedSeries],
    head: Optional[Callable[[int], TruncatedSeries]] = None,
) -> TruncatedSeries:
    """
    Σ_{n=0}^{bound} h_n·w_n，w_0 = 1，w_n = w_{n-1}·R_n

    Horner 形式 h_0 + R_1(h_1 + R_2(h_2 + …))；head 缺省时 h_n = 1。

    Args:
        profile: 截断轮廓
        bound: 求和上限
        apply_ratio: (n, s) -> s·R_n
        head: n -> h_n
    """
    def h(n: int) -> TruncatedSeries:
        return head(n) if head is not None else TruncatedSeries.one(profile)

    acc = h(bound)
    for n in range(bound, 0, -1):
        acc = h(n - 1) + apply_ratio(n, acc)
    return acc


__all__ = ["phi_series", "terminating_length", "nested_sum"]
