"""
有限和 T_{r,n}(s) 与有限 q-恒等式测试
"""

import pytest
import sympy

from algebra import PoleError, PreconditionError, SparsePoly, Status, compare_family
from finite import (
    T_REGISTRY,
    TSumSpec,
    recurrence_residual,
    t_closed_s0,
    t_closed_s1,
    t_recurrence_family,
    t_specialize_family,
    t_sum,
    verify_chu_vandermonde_evals,
    verify_finite_q_identity,
    verify_t_recurrence,
)
from tests.sympy_oracle import poly_to_sympy


def _sympy_t_sum(r: int, n: int, s: int):
    """直接按定义用 sympy 求和"""
    q = sympy.Symbol("q")
    total = sympy.Integer(0)
    for k in range(n + 1):
        term = q ** ((2 - s) * k)
        for j in range(k):
            term *= (1 - q ** (-2 * n + 2 * j)) / ((1 - q ** (j + 1)) * (1 - q ** (1 + r - n + j)))
        total += term
    return total


class TestTSum:
    @pytest.mark.parametrize("r,n,s", [(3, 2, 1), (4, 2, 0), (5, 3, 2), (2, 1, -1)])
    def test_direct_sum_matches_sympy(self, r, n, s):
        value = t_sum(TSumSpec(r, n, s))
        den = sympy.Integer(1)
        for factor, mult in value.factors:
            den *= poly_to_sympy(factor) ** mult
        num = poly_to_sympy(value.num)
        assert sympy.simplify(num / den - _sympy_t_sum(r, n, s)) == 0

    def test_closed_forms_on_grid(self):
        assert verify_chu_vandermonde_evals(4, range(1, 5)).status is Status.PASS

    def test_first_closed_form_at_n_one(self):
        assert t_sum(TSumSpec(3, 1, 1)) == t_closed_s1(3, 1)
        assert t_sum(TSumSpec(4, 1, 0)) == t_closed_s0(4, 1)

    def test_zero_denominator_factor(self):
        # (q^{-1};q)_k 在 k ≥ 2 时含因子 1 - 1
        with pytest.raises(PoleError):
            t_sum(TSumSpec(0, 2, 1))

    def test_negative_length(self):
        with pytest.raises(PreconditionError):
            TSumSpec(3, -1)

    def test_symbolic_specializations(self):
        assert compare_family(t_specialize_family(3, 3)).status is Status.PASS


class TestRecurrence:
    @pytest.mark.parametrize("n", range(4))
    def test_holds(self, n):
        assert verify_t_recurrence(n + 3, n).status is Status.PASS

    def test_holds_on_the_full_grid(self):
        # n ≤ 8，n+2 ≤ r ≤ n+6
        assert compare_family(t_recurrence_family(8, 6)).status is Status.PASS

    @pytest.mark.parametrize("slot", range(3))
    @pytest.mark.parametrize("n, r", [(1, 4), (3, 5), (5, 9)])
    def test_perturbed_coefficient_fails(self, slot, n, r):
        outcome = verify_t_recurrence(r, n, perturb=(slot, SparsePoly.one(T_REGISTRY)))
        assert outcome.status is Status.FAIL
        assert outcome.witness.exponents["n"] == n
        assert outcome.witness.exponents["r"] == r

    def test_guard(self):
        with pytest.raises(PreconditionError):
            recurrence_residual(2, 1)


def test_finite_q_identity():
    assert verify_finite_q_identity(5).status is Status.PASS
