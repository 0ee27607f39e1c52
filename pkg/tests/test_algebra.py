"""
精确代数内核测试
"""

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from algebra import (
    CoefficientNotExactError,
    NonUnitError,
    PoleError,
    PreconditionError,
    RationalFunction,
    RegistryMismatchError,
    SparsePoly,
    Status,
    SubstitutionError,
    TruncatedSeries,
    TruncationProfile,
    VarRegistry,
    VerificationOutcome,
    Witness,
    compare_family,
    compare_values,
    divide_by_one_minus,
    format_scalar,
    series_equal,
    series_invert,
    series_substitute,
    to_scalar,
)
from tests.sympy_oracle import poly_to_sympy as _sym

AQ = VarRegistry(["a", "q"])

polys = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 3)),
    st.integers(-4, 4),
    max_size=5,
).map(lambda terms: SparsePoly(AQ, terms))


class TestScalar:
    def test_fraction_string_is_reduced(self):
        assert to_scalar("3/6") == Fraction(1, 2)

    def test_integral_fraction_collapses_to_int(self):
        value = to_scalar(Fraction(4, 2))
        assert value == 2 and isinstance(value, int)

    def test_float_is_rejected(self):
        with pytest.raises(TypeError):
            to_scalar(1.5)

    def test_format(self):
        assert format_scalar(Fraction(-3, 6)) == "-1/2"
        assert format_scalar(7) == "7"


class TestRegistry:
    def test_q_is_last(self):
        assert VarRegistry(["q", "b", "a"]).names == ("b", "a", "q")

    def test_duplicate_names(self):
        with pytest.raises(PreconditionError):
            VarRegistry(["a", "a"])

    def test_unknown_variable(self):
        with pytest.raises(RegistryMismatchError):
            AQ.index_of("z")


class TestSparsePoly:
    @settings(max_examples=40, deadline=None)
    @given(polys, polys)
    def test_product_matches_sympy(self, left, right):
        expected = sympy.expand(_sym(left) * _sym(right))
        assert sympy.expand(_sym(left * right) - expected) == 0

    @settings(max_examples=40, deadline=None)
    @given(polys, polys)
    def test_sum_matches_sympy(self, left, right):
        assert sympy.expand(_sym(left + right) - _sym(left) - _sym(right)) == 0

    @settings(max_examples=30, deadline=None)
    @given(polys, st.fractions(min_value=-3, max_value=3, max_denominator=5))
    def test_scalar_substitution_matches_sympy(self, poly, value):
        a = sympy.Symbol("a")
        expected = _sym(poly).subs(a, sympy.Rational(value.numerator, value.denominator))
        assert sympy.expand(_sym(poly.substitute("a", value)) - expected) == 0

    def test_zero_coefficients_are_dropped(self):
        poly = SparsePoly(AQ, {(1, 0): 0, (0, 2): 3})
        assert len(poly) == 1

    def test_negative_power_of_monomial(self):
        mono = SparsePoly.monomial(AQ, 2, {"a": 1, "q": 3})
        assert mono ** -1 * mono == 1

    def test_negative_power_of_binomial_is_a_pole(self):
        q = SparsePoly.variable(AQ, "q")
        with pytest.raises(PoleError):
            (1 - q) ** -1

    def test_registry_mismatch(self):
        other = SparsePoly.variable(VarRegistry(["b", "q"]), "b")
        with pytest.raises(RegistryMismatchError):
            SparsePoly.variable(AQ, "a") + other


class TestTruncatedSeries:
    def test_geometric_series(self, q_profile):
        one = TruncatedSeries.one(q_profile)
        geometric = divide_by_one_minus(one, 1, (1,))
        assert all(geometric.coefficient({"q": k}) == 1 for k in range(13))

    def test_coefficient_outside_window(self, q_profile):
        one = TruncatedSeries.one(q_profile)
        geometric = divide_by_one_minus(one, 1, (1,))
        with pytest.raises(CoefficientNotExactError):
            geometric.coefficient({"q": 13})

    def test_inverse_gives_fibonacci(self, q_registry, q_profile):
        q = SparsePoly.variable(q_registry, "q")
        inverse = series_invert(TruncatedSeries.from_poly(1 - q - q ** 2, q_profile))
        fib = [1, 1]
        while len(fib) < 13:
            fib.append(fib[-1] + fib[-2])
        assert [inverse.coefficient({"q": k}) for k in range(13)] == fib

    def test_square_of_geometric(self, q_profile):
        geometric = divide_by_one_minus(TruncatedSeries.one(q_profile), 1, (1,))
        square = geometric * geometric
        assert [square.coefficient({"q": k}) for k in range(13)] == list(range(1, 14))

    def test_constant_term_zero_is_not_invertible(self, q_registry, q_profile):
        q = SparsePoly.variable(q_registry, "q")
        with pytest.raises(NonUnitError):
            series_invert(TruncatedSeries.from_poly(q, q_profile))

    def test_scalar_substitution_with_unknown_tail(self):
        profile = TruncationProfile.from_caps(AQ, {"a": 2, "q": 5})
        a = SparsePoly.variable(AQ, "a")
        series = TruncatedSeries.from_poly(1 + a ** 3, profile)
        with pytest.raises(SubstitutionError):
            series_substitute(series, "a", 1)

    def test_mismatch_witness_is_first_in_graded_order(self, q_registry, q_profile):
        q = SparsePoly.variable(q_registry, "q")
        lhs = TruncatedSeries.from_poly(1 + q ** 5, q_profile)
        rhs = TruncatedSeries.from_poly(1 + q ** 3 + q ** 5 + q ** 7, q_profile)
        outcome = series_equal(lhs, rhs)
        assert outcome.status is Status.FAIL
        assert outcome.witness.exponents == {"q": 3}
        assert (outcome.witness.lhs, outcome.witness.rhs) == (0, 1)


SERIES_PROFILE = TruncationProfile.from_caps(AQ, {"a": 4, "q": 6})

series_terms = st.dictionaries(
    st.tuples(st.integers(0, 4), st.integers(0, 6)),
    st.integers(-3, 3),
    max_size=6,
)
series_values = series_terms.map(lambda terms: TruncatedSeries.from_poly(SparsePoly(AQ, terms), SERIES_PROFILE))
unit_values = st.tuples(st.sampled_from([1, -1, 2, -3]), series_terms).map(
    lambda pair: TruncatedSeries.from_poly(SparsePoly(AQ, {**pair[1], (0, 0): pair[0]}), SERIES_PROFILE)
)

Q = VarRegistry(["q"])
DENSE_PROFILE = TruncationProfile.from_caps(Q, {"q": 30})
dense_coefficients = st.lists(st.integers(-5, 5), min_size=1, max_size=31)


def _dense(coefficients):
    terms = {(k,): c for k, c in enumerate(coefficients)}
    return TruncatedSeries.from_poly(SparsePoly(Q, terms), DENSE_PROFILE)


def _passes(lhs, rhs) -> bool:
    return series_equal(lhs, rhs).status is Status.PASS


class TestSeriesRing:
    @settings(max_examples=1000, deadline=None)
    @given(series_values, series_values, series_values)
    def test_multiplication_is_associative(self, x, y, z):
        assert _passes((x * y) * z, x * (y * z))

    @settings(max_examples=1000, deadline=None)
    @given(series_values, series_values)
    def test_multiplication_is_commutative(self, x, y):
        assert _passes(x * y, y * x)

    @settings(max_examples=1000, deadline=None)
    @given(series_values, series_values, series_values)
    def test_distributive(self, x, y, z):
        assert _passes(x * (y + z), x * y + x * z)

    @settings(max_examples=300, deadline=None)
    @given(unit_values)
    def test_inverse_is_two_sided(self, x):
        inverse = series_invert(x)
        one = TruncatedSeries.one(SERIES_PROFILE)
        assert _passes(x * inverse, one)
        assert _passes(inverse * x, one)

    @settings(max_examples=200, deadline=None)
    @given(series_values)
    def test_substituting_a_for_itself(self, x):
        a = TruncatedSeries.monomial(SERIES_PROFILE, 1, {"a": 1})
        assert _passes(series_substitute(x, "a", a), x)

    @settings(max_examples=100, deadline=None)
    @given(dense_coefficients, dense_coefficients)
    def test_product_matches_convolution(self, left, right):
        product = _dense(left) * _dense(right)
        for k in range(31):
            expected = sum(
                left[i] * right[k - i]
                for i in range(k + 1)
                if i < len(left) and k - i < len(right)
            )
            assert product.coefficient({"q": k}) == expected

    @settings(max_examples=100, deadline=None)
    @given(st.sampled_from([1, -1, 2, 3]), dense_coefficients)
    def test_inverse_matches_recurrence(self, c0, rest):
        coefficients = [c0] + rest[:30]
        inverse = series_invert(_dense(coefficients))
        expected = [Fraction(1, c0)]
        for n in range(1, 31):
            acc = sum(
                (coefficients[k] * expected[n - k] for k in range(1, min(n, len(coefficients) - 1) + 1)),
                Fraction(0),
            )
            expected.append(-acc / c0)
        assert [inverse.coefficient({"q": k}) for k in range(31)] == expected


class TestRationalFunction:
    def test_cancellation(self, q_registry):
        q = SparsePoly.variable(q_registry, "q")
        assert RationalFunction.quotient(1 - q ** 2, 1 - q) == 1 + q

    def test_partial_fractions(self, q_registry):
        q = SparsePoly.variable(q_registry, "q")
        one = SparsePoly.one(q_registry)
        total = RationalFunction.quotient(one, 1 - q) + RationalFunction.quotient(one, 1 + q)
        assert total == RationalFunction.quotient(SparsePoly.constant(q_registry, 2), 1 - q ** 2)

    def test_monomial_content_moves_to_numerator(self, q_registry):
        q = SparsePoly.variable(q_registry, "q")
        value = RationalFunction.quotient(SparsePoly.one(q_registry), q ** 2 - q ** 3)
        assert value * (q ** 2) == RationalFunction.quotient(SparsePoly.one(q_registry), 1 - q)

    def test_expansion(self, q_registry, q_profile):
        q = SparsePoly.variable(q_registry, "q")
        value = RationalFunction(SparsePoly.one(q_registry), [(1 - q, 2)])
        series = value.to_series(q_profile)
        assert series.coefficient({"q": 5}) == 6

    def test_substitution_into_a_pole(self):
        a = SparsePoly.variable(AQ, "a")
        value = RationalFunction.quotient(SparsePoly.one(AQ), 1 - a)
        with pytest.raises(PoleError):
            value.substitute("a", 1)

    def test_unequal_gives_witness(self, q_registry):
        q = SparsePoly.variable(q_registry, "q")
        outcome = compare_values(RationalFunction.from_poly(1 + q), RationalFunction.from_poly(1 + 2 * q))
        assert outcome.status is Status.FAIL
        assert outcome.witness.exponents == {"q": 1}


class TestOutcome:
    def test_fail_requires_witness(self):
        with pytest.raises(ValueError):
            VerificationOutcome(status=Status.FAIL)

    def test_family_witness_carries_index(self, q_registry):
        q = SparsePoly.variable(q_registry, "q")
        one = RationalFunction.one(q_registry)
        outcome = compare_family([
            ({"n": 0}, one, one),
            ({"n": 1}, one, RationalFunction.from_poly(1 + q)),
        ])
        assert outcome.status is Status.FAIL
        assert outcome.witness.exponents["n"] == 1

    def test_json_payload(self):
        outcome = VerificationOutcome(
            status=Status.FAIL,
            witness=Witness(exponents={"q": 3, "a": 1}, lhs=Fraction(1, 2), rhs=0),
            caps={"q": 10, "a": 4},
            identity_id="AND-11",
        )
        payload = outcome.to_dict()
        assert payload["witness"] == {"exponents": {"a": 1, "q": 3}, "lhs": "1/2", "rhs": "0"}
        assert list(payload["caps"]) == ["a", "q"]
        assert VerificationOutcome.from_dict(payload).witness.lhs == Fraction(1, 2)
