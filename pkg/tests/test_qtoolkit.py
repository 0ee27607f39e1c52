"""
q-组合构件测试
"""

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from algebra import (
    CoefficientNotExactError,
    SparsePoly,
    Status,
    TruncatedSeries,
    TruncationProfile,
    VarRegistry,
    series_equal,
)
from qtoolkit import (
    A_POWER,
    PENTAGONAL_PAIR,
    PochSpec,
    div_poch,
    inv_poch_rf,
    jacobi_triple_series,
    mul_poch,
    neg_shift_pochhammer,
    nested_sum,
    partial_theta,
    phi_series,
    poch_infinite,
    poch_poly,
    poch_series,
    q_binomial,
    rogers_szego,
    terminating_length,
)
from tests.sympy_oracle import poly_to_sympy, same_expression

Q = VarRegistry(["q"])
ABQ = VarRegistry(["a", "b", "q"])
AXQ = VarRegistry(["a", "x", "q"])

pairs = st.integers(0, 9).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n)))


class TestQBinomial:
    @settings(max_examples=25, deadline=None)
    @given(pairs)
    def test_matches_product_formula(self, pair):
        n, k = pair
        q = sympy.Symbol("q")
        expected = sympy.Integer(1)
        for i in range(1, k + 1):
            expected *= (1 - q ** (n - k + i)) / (1 - q ** i)
        assert same_expression(poly_to_sympy(q_binomial(Q, n, k)), sympy.cancel(expected))

    @settings(max_examples=25, deadline=None)
    @given(pairs)
    def test_symmetry(self, pair):
        n, k = pair
        assert q_binomial(Q, n, k) == q_binomial(Q, n, n - k)

    @pytest.mark.parametrize("n", range(1, 8))
    def test_pascal_rule(self, n):
        q = SparsePoly.variable(Q, "q")
        for k in range(1, n):
            assert q_binomial(Q, n, k) == q_binomial(Q, n - 1, k - 1) + q ** k * q_binomial(Q, n - 1, k)

    def test_out_of_range_is_zero(self):
        assert q_binomial(Q, 3, 4).is_zero()
        assert q_binomial(Q, 3, -1).is_zero()

    def test_negative_top_is_zero(self):
        assert q_binomial(Q, -1, 0).is_zero()
        assert q_binomial(Q, -3, -2).is_zero()

    def test_base_exponent(self):
        q = SparsePoly.variable(Q, "q")
        assert q_binomial(Q, 2, 1, 2) == 1 + q ** 2


def test_rogers_szego_low_degree():
    a, b, q = (SparsePoly.variable(ABQ, name) for name in ("a", "b", "q"))
    assert rogers_szego(ABQ, 1, a, b) == a + b
    assert rogers_szego(ABQ, 2, a, b) == a ** 2 + (1 + q) * a * b + b ** 2


class TestPochhammer:
    def test_euler_pentagonal(self):
        profile = TruncationProfile.from_caps(Q, {"q": 15})
        q = TruncatedSeries.monomial(profile, 1, {"q": 1})
        product = poch_infinite(PochSpec(argument=q))
        expected = {0: 1, 1: -1, 2: -1, 5: 1, 7: 1, 12: -1, 15: -1}
        assert [product.coefficient({"q": k}) for k in range(16)] == [expected.get(k, 0) for k in range(16)]

    def test_series_and_polynomial_agree(self, q_profile):
        q = SparsePoly.variable(Q, "q")
        assert series_equal(poch_series(q, 3, q_profile), TruncatedSeries.from_poly(poch_poly(q, 3), q_profile)).passed

    def test_reciprocal_of_negative_length_vanishes(self):
        q = SparsePoly.variable(Q, "q")
        assert inv_poch_rf(q, -2).is_zero()

    def test_q_binomial_theorem(self):
        profile = TruncationProfile.from_caps(AXQ, {"a": 5, "x": 5, "q": 10})
        a = TruncatedSeries.monomial(profile, 1, {"a": 1})
        x = TruncatedSeries.monomial(profile, 1, {"x": 1})
        ax = TruncatedSeries.monomial(profile, 1, {"a": 1, "x": 1})
        one = TruncatedSeries.one(profile)
        product = div_poch(mul_poch(one, ax), x)
        assert series_equal(phi_series([a], [], x, term_bound=5), product).status is Status.PASS


def test_terminating_parameter(q_profile):
    assert terminating_length(TruncatedSeries.monomial(q_profile, 1, {"q": -3})) == 3
    assert terminating_length(TruncatedSeries.monomial(q_profile, 2, {"q": -3})) is None


def test_nested_sum_horner_form():
    profile = TruncationProfile.from_caps(Q, {"q": 20})
    total = nested_sum(profile, 5, lambda n, s: s.shift({"q": n}))
    triangular = {0, 1, 3, 6, 10, 15}
    assert [total.coefficient({"q": k}) for k in range(21)] == [int(k in triangular) for k in range(21)]


class TestTheta:
    def test_partial_theta_coefficients(self):
        profile = TruncationProfile.from_caps(VarRegistry(["a", "q"]), {"a": 3, "q": 20})
        theta = partial_theta(A_POWER, profile)
        assert theta.coefficient({"a": 1, "q": 2}) == 2
        assert theta.coefficient({"a": 2, "q": 8}) == 2
        assert theta.coefficient({"a": 1, "q": 3}) == 0

    def test_jacobi_triple_series(self):
        series = jacobi_triple_series(3, 30)
        assert [series.coefficient({"q": k}) for k in (0, 3, 12, 27)] == [1, -2, 2, -2]
        assert series.coefficient({"q": 4}) == 0

    def test_early_stop_records_the_tail(self):
        profile = TruncationProfile.from_caps(VarRegistry(["a", "q"]), {"a": 3, "q": 20})
        theta = partial_theta(A_POWER, profile, limit=1)
        # 第二项从 q^8 开始
        assert theta.exact[-1] == 7
        with pytest.raises(CoefficientNotExactError):
            theta.coefficient({"a": 2, "q": 8})

    def test_early_stop_pentagonal_pair(self):
        profile = TruncationProfile.from_caps(VarRegistry(["a", "b", "q"]), {"a": 4, "b": 4, "q": 20})
        theta = partial_theta(PENTAGONAL_PAIR, profile, limit=2)
        assert theta.exact[-1] == 2

    def test_jacobi_triple_series_records_the_tail(self):
        series = jacobi_triple_series(3, 10)
        assert series.exact[-1] == 11

    @pytest.mark.parametrize("n", range(6))
    def test_negative_shift_pochhammer(self, n):
        for k in range(n + 1):
            lhs, rhs = neg_shift_pochhammer(Q, n, k)
            assert lhs == rhs
