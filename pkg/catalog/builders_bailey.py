"""
Bailey 对、Bailey 引理及其推论的记录构建
"""

from typing import Dict, Tuple

from algebra.series import TruncatedSeries
from bailey.lemma import RhoSpec
from bailey.pairs import bailey_pair_family, pair_3666, pair_chain_family, pair_great
from bailey.propositions import (
    a_limit_terms,
    closing_sum_sides,
    conc_3666_a_sides,
    conc_3666_family,
    conc_3666_limit_sides,
    conc_great_a_limit,
    conc_great_a_sides,
    conc_great_double_limit,
    conc_great_family,
    conc_great_limit_sides,
    double_limit_terms,
)
from catalog.context import BuildContext

Sides = Tuple[TruncatedSeries, TruncatedSeries]


def build_pair_3666(ctx: BuildContext):
    return list(bailey_pair_family(pair_3666(ctx.registry), ctx.depth))


def build_pair_great(ctx: BuildContext):
    return list(bailey_pair_family(pair_great(ctx.registry), ctx.depth))


def build_pair_chain(ctx: BuildContext):
    return list(pair_chain_family(ctx.depth, ctx.registry))


def _rho_variants(ctx: BuildContext, family):
    """(ρ1, ρ2) 取参数值、(ρ1, ∞)、(∞, ∞) 三种情形，标签 rho_inf 为无穷槽位个数"""
    rho1 = RhoSpec(ctx.param_poly("rho1"))
    rho2 = RhoSpec(ctx.param_poly("rho2"))
    infinite = RhoSpec.infinite()
    items = []
    for count, (first, second) in enumerate([(rho1, rho2), (rho1, infinite), (infinite, infinite)]):
        for labels, lhs, rhs in family(first, second, ctx.depth, ctx.registry):
            items.append(({**labels, "rho_inf": count}, lhs, rhs))
    return items


def build_conc_great(ctx: BuildContext):
    return _rho_variants(ctx, conc_great_family)


def build_conc_3666(ctx: BuildContext):
    return _rho_variants(ctx, conc_3666_family)


def _indexed(ctx: BuildContext, sides_fn, start: int = 0, **kwargs):
    items = []
    for n in range(start, ctx.depth + 1):
        lhs, rhs = sides_fn(n, registry=ctx.registry, **kwargs)
        items.append(({"n": n}, lhs, rhs))
    return items


def build_conc_great_a(ctx: BuildContext):
    return _indexed(ctx, conc_great_a_sides, 1, a=ctx.param_poly("a"))


def build_conc_3666_a(ctx: BuildContext):
    return _indexed(ctx, conc_3666_a_sides, 1, a=ctx.param_poly("a"))


def build_conc_great_limit(ctx: BuildContext):
    return _indexed(ctx, conc_great_limit_sides)


def build_conc_3666_limit(ctx: BuildContext):
    return _indexed(ctx, conc_3666_limit_sides)


def build_closing_sum(ctx: BuildContext):
    return _indexed(ctx, closing_sum_sides)


def double_limit_bound(ctx: BuildContext) -> Dict[str, int]:
    return {"terms": double_limit_terms(ctx.profile)}


def great_a_limit_bound(ctx: BuildContext) -> Dict[str, int]:
    lhs, rhs = a_limit_terms(ctx.profile)
    return {"lhs": lhs, "rhs": rhs}


def build_conc_great_double_limit(ctx: BuildContext) -> Sides:
    return conc_great_double_limit(ctx.profile, ctx.limit("terms"))


def build_conc_great_a_limit(ctx: BuildContext) -> Sides:
    return conc_great_a_limit(ctx.profile, (ctx.limit("lhs"), ctx.limit("rhs")))


__all__ = [
    "build_pair_3666", "build_pair_great", "build_pair_chain", "build_conc_great", "build_conc_3666",
    "build_conc_great_a", "build_conc_3666_a", "build_conc_great_limit", "build_conc_3666_limit",
    "build_closing_sum", "build_conc_great_double_limit", "build_conc_great_a_limit",
    "double_limit_bound", "great_a_limit_bound",
]
