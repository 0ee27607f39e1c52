"""
统一比较入口：级数按精确区域比较，有理函数按交叉相乘比较，族按索引逐项比较
"""

from typing import Dict, Iterable, Tuple, Union

from algebra.outcome import Status, VerificationOutcome
from algebra.ratfun import RationalFunction, ratfun_equal
from algebra.series import TruncatedSeries, series_equal
from algebra.sparse_poly import SparsePoly

Value = Union[TruncatedSeries, RationalFunction, SparsePoly]


def _as_rational(value) -> RationalFunction:
    if isinstance(value, SparsePoly):
        return RationalFunction.from_poly(value)
    return value


def compare_values(lhs: Value, rhs: Value) -> VerificationOutcome:
    """两侧同为级数时比较精确区域，否则作为有理函数比较"""
    if isinstance(lhs, TruncatedSeries) or isinstance(rhs, TruncatedSeries):
        if not (isinstance(lhs, TruncatedSeries) and isinstance(rhs, TruncatedSeries)):
            if isinstance(lhs, TruncatedSeries):
                rhs = _as_rational(rhs).to_series(lhs.profile)
            else:
                lhs = _as_rational(lhs).to_series(rhs.profile)
        return series_equal(lhs, rhs)
    return ratfun_equal(_as_rational(lhs), _as_rational(rhs))


def compare_family(items: Iterable[Tuple[Dict[str, int], Value, Value]]) -> VerificationOutcome:
    """
    逐项比较一族恒等式

    Args:
        items: (索引标签, 左侧, 右侧) 序列，例如 ({"n": 3}, lhs, rhs)

    Returns:
        第一个 FAIL（见证附带索引标签）；否则若有 INCONCLUSIVE 则返回它；全部通过时 PASS
    """
    inconclusive = None
    for labels, lhs, rhs in items:
        outcome = compare_values(lhs, rhs)
        if outcome.status is Status.FAIL:
            outcome.witness = outcome.witness.with_labels(labels)
            return outcome
        if outcome.status is Status.INCONCLUSIVE and inconclusive is None:
            label = ", ".join(f"{k}={v}" for k, v in labels.items())
            outcome.message = f"{label}: {outcome.message}" if outcome.message else label
            inconclusive = outcome
    return inconclusive or VerificationOutcome(status=Status.PASS)


__all__ = ["compare_values", "compare_family"]
