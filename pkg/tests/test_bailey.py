"""
Bailey 对、Bailey 引理与具体命题测试
"""

import pytest

from algebra import PreconditionError, RationalFunction, SparsePoly, Status, compare_family
from bailey import (
    A_REGISTRY,
    Q_REGISTRY,
    RHO_REGISTRY,
    RhoSpec,
    bailey_lemma_sides,
    closing_sum_sides,
    conc_3666_a_sides,
    conc_great_a_sides,
    conc_great_family,
    gamma_sum,
    pair_3666,
    pair_chain_family,
    pair_great,
    success_sides,
    verify_bailey_lemma,
    verify_bailey_pair,
    verify_proposition_suite,
)

INFINITE = RhoSpec.infinite()


class TestPairs:
    @pytest.mark.parametrize("factory", [pair_3666, pair_great])
    def test_defining_relation(self, factory):
        assert verify_bailey_pair(factory(), 6).status is Status.PASS

    def test_perturbed_beta_is_caught(self):
        pair = pair_3666().perturbed(3, SparsePoly.monomial(Q_REGISTRY, 1, {"q": 2}))
        outcome = verify_bailey_pair(pair, 6)
        assert outcome.status is Status.FAIL
        assert outcome.witness.exponents["n"] == 3

    def test_gamma_low_values(self):
        q = SparsePoly.variable(Q_REGISTRY, "q")
        assert gamma_sum(0) == 1
        assert gamma_sum(1) == 1 + RationalFunction.quotient(q, 1 + q)

    def test_second_pair_from_first(self):
        assert compare_family(pair_chain_family(6)).status is Status.PASS


class TestLemma:
    @pytest.mark.parametrize("rho1,rho2", [
        (RhoSpec(2), RhoSpec(3)),
        (RhoSpec(2), INFINITE),
        (INFINITE, INFINITE),
    ])
    def test_lemma_preserves_pairs(self, rho1, rho2):
        assert verify_bailey_lemma(pair_3666(), rho1, rho2, 4).status is Status.PASS

    def test_symbolic_rho(self):
        rho1 = RhoSpec(SparsePoly.variable(RHO_REGISTRY, "rho1"))
        assert compare_family(conc_great_family(rho1, INFINITE, 3)).status is Status.PASS

    def test_zeroth_term(self):
        lhs, rhs = bailey_lemma_sides(pair_great(), RhoSpec(2), RhoSpec(3), 0)
        assert lhs == rhs == 2


class TestPropositions:
    def test_a_form_at_n_one(self):
        a = SparsePoly.variable(A_REGISTRY, "a")
        q = SparsePoly.variable(A_REGISTRY, "q")
        expected = RationalFunction.quotient(2 * q ** 2 * (1 - a), 1 - q ** 2)
        lhs, rhs = conc_great_a_sides(1)
        assert lhs == expected
        assert rhs == expected

    def test_first_pair_a_form_at_n_one(self):
        a = SparsePoly.variable(A_REGISTRY, "a")
        q = SparsePoly.variable(A_REGISTRY, "q")
        lhs, rhs = conc_3666_a_sides(1)
        assert lhs == rhs == RationalFunction.quotient(2 * q * (1 - a), 1 - q ** 2)

    def test_a_form_needs_positive_n(self):
        with pytest.raises(PreconditionError):
            conc_great_a_sides(0)

    @pytest.mark.parametrize("n", range(5))
    def test_closing_sum(self, n):
        lhs, rhs = closing_sum_sides(n)
        assert lhs == rhs

    @pytest.mark.parametrize("n", range(5))
    def test_success_identity(self, n):
        lhs, rhs = success_sides(n)
        assert lhs == rhs

    def test_whole_suite(self):
        results = verify_proposition_suite(n_max=3, q_cap=20)
        failed = {name: outcome.status for name, outcome in results.items() if outcome.status is not Status.PASS}
        assert not failed
