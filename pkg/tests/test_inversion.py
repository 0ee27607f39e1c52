"""
反演核与 λ_n(a) 测试
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from algebra import RationalFunction, SparsePoly, Status, TruncationProfile, VarRegistry, series_equal
from inversion import (
    is_identity,
    kernel_carlitz,
    kernel_qsquare_binomial,
    lambda_by_inverse_kernel,
    lambda_by_inversion,
    lambda_coeffs,
    lambda_oracle,
    lambda_rational,
    multiply_kernels,
    triangular_solve,
)
from qtoolkit import poch_poly

Q = VarRegistry(["q"])
AQ = VarRegistry(["a", "q"])
AXQ = VarRegistry(["a", "x", "q"])

q_polys = st.dictionaries(st.integers(0, 6).map(lambda e: (e,)), st.integers(-3, 3), max_size=4).map(
    lambda terms: SparsePoly(Q, terms)
)


class TestKernels:
    @pytest.mark.parametrize("size", [6, 10])
    def test_qsquare_binomial_pair_is_inverse(self, size):
        forward, inverse = kernel_qsquare_binomial(Q)
        assert is_identity(multiply_kernels(forward, inverse, size))
        assert is_identity(multiply_kernels(inverse, forward, size))

    @pytest.mark.parametrize("size", [5, 10])
    def test_carlitz_pair_at_a_equal_one(self, size):
        forward, inverse = kernel_carlitz(Q, 1)
        assert is_identity(multiply_kernels(inverse, forward, size))

    def test_carlitz_pair_symbolic(self):
        forward, inverse = kernel_carlitz(AQ, SparsePoly.variable(AQ, "a"))
        assert is_identity(multiply_kernels(inverse, forward, 4))

    def test_solve_undoes_apply(self):
        forward, _ = kernel_qsquare_binomial(Q)
        q = SparsePoly.variable(Q, "q")
        sequence = [RationalFunction.from_poly(1 + q ** n) for n in range(5)]
        solved = triangular_solve(forward, forward.apply(sequence))
        assert all(left == right for left, right in zip(solved, sequence))

    @settings(max_examples=20, deadline=None)
    @given(st.lists(q_polys, min_size=1, max_size=8), st.sampled_from(["qsquare", "carlitz"]))
    def test_solve_undoes_apply_for_random_sequences(self, sequence, kind):
        forward, _ = kernel_qsquare_binomial(Q) if kind == "qsquare" else kernel_carlitz(Q, 1)
        solved = triangular_solve(forward, forward.apply(sequence))
        assert solved == [RationalFunction.from_poly(value) for value in sequence]

    def test_entries_above_diagonal_are_zero(self):
        forward, _ = kernel_qsquare_binomial(Q)
        assert forward.entry(2, 3).is_zero()


class TestLambda:
    @pytest.fixture
    def profile(self):
        return TruncationProfile.from_caps(AXQ, {"a": 6, "x": 5, "q": 16})

    @pytest.mark.parametrize("n", range(5))
    def test_phi_sum_matches_product_expansion(self, profile, n):
        assert series_equal(lambda_coeffs(n, profile), lambda_oracle(n, profile)).status is Status.PASS

    @pytest.mark.parametrize("n", range(4))
    def test_rational_form_matches_series(self, profile, n):
        expanded = lambda_rational(AXQ, n).to_series(profile)
        assert series_equal(expanded, lambda_coeffs(n, profile)).status is Status.PASS

    def test_first_coefficient(self):
        # λ_1(a) = (1 + q - a)/(1 - q²)
        q = SparsePoly.variable(AQ, "q")
        a = SparsePoly.variable(AQ, "a")
        assert lambda_rational(AQ, 1) == RationalFunction.quotient(1 + q - a, 1 - q ** 2)

    def test_both_inversion_routes(self):
        a = SparsePoly.variable(AQ, "a")
        q = SparsePoly.variable(AQ, "q")
        solved = lambda_by_inversion(AQ, 5)
        applied = lambda_by_inverse_kernel(AQ, 5)
        for n in range(6):
            expected = lambda_rational(AQ, n) * poch_poly(q ** 2, n, 2) * a ** -n
            assert solved[n] == expected
            assert applied[n] == expected
