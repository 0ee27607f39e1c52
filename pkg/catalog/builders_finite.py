"""
λ 系数、T 和与有限 q-恒等式的记录构建
"""

from catalog.context import BuildContext
from finite.finite_checks import chu_vandermonde_family, finite_q_family, t_recurrence_family, t_specialize_family
from inversion.lambda_coeffs import (
    lambda_by_inverse_kernel,
    lambda_by_inversion,
    lambda_coeffs,
    lambda_generating,
    lambda_rational,
)
from qtoolkit.pochhammer import poch_poly
from qtoolkit.theta import neg_shift_pochhammer


def build_lambda(ctx: BuildContext):
    """φ 和给出的 λ_n(a) 与 (ax;q²)_∞/(x;q)_∞ 中 x^n 的系数逐个比较"""
    profile = ctx.profile
    generating = lambda_generating(profile)
    return [
        ({"n": n}, lambda_coeffs(n, profile), generating.coefficient_in("x", n))
        for n in range(ctx.cap("x") + 1)
    ]


def build_lambda_solve(ctx: BuildContext):
    """三角求解与显式逆核两条路线都应给出 (q²;q²)_n λ_n(a) a^{-n}"""
    registry = ctx.registry
    q = ctx.mono_poly(1, q=1)
    a = ctx.mono_poly(1, a=1)
    solved = lambda_by_inversion(registry, ctx.depth)
    applied = lambda_by_inverse_kernel(registry, ctx.depth)
    items = []
    for n in range(ctx.depth + 1):
        expected = lambda_rational(registry, n) * (poch_poly(q ** 2, n, 2) * a ** -n)
        items.append(({"n": n, "route": 0}, solved[n], expected))
        items.append(({"n": n, "route": 1}, applied[n], expected))
    return items


def build_t_recurrence(ctx: BuildContext):
    return list(t_recurrence_family(ctx.depth))


def build_t_closed(ctx: BuildContext):
    return list(chu_vandermonde_family(ctx.depth))


def build_t_specialize(ctx: BuildContext):
    return list(t_specialize_family(ctx.depth))


def build_finite_q(ctx: BuildContext):
    return list(finite_q_family(ctx.depth))


def build_neg_shift(ctx: BuildContext):
    """(-q^{-n};q)_k 的展开，0 ≤ k ≤ n"""
    items = []
    for n in range(ctx.depth + 1):
        for k in range(n + 1):
            lhs, rhs = neg_shift_pochhammer(ctx.registry, n, k)
            items.append(({"n": n, "k": k}, lhs, rhs))
    return items


__all__ = [
    "build_lambda", "build_lambda_solve", "build_t_recurrence", "build_t_closed",
    "build_t_specialize", "build_finite_q", "build_neg_shift",
]
