"""
恒等式目录与校验驱动测试
"""

from fractions import Fraction

import pytest

from algebra import (
    PreconditionError,
    ProfileTooSmallError,
    Status,
    UnknownIdentityError,
    VerificationOutcome,
    compare_values,
)
from catalog import MUTATIONS, RECORDS, BuildContext, catalog_list, get_record, verify, verify_all
from catalog.verifier import ADD_Q, region_note, sample_candidates

SMALL_AND11 = {"q": 12, "a": 4, "b": 4}


@pytest.mark.parametrize("identity_id", [record.id for record in RECORDS])
def test_every_record_passes_at_default_caps(identity_id):
    outcome = verify(identity_id)
    assert outcome.status is Status.PASS, outcome.message or str(outcome.witness)


def test_ids_are_unique():
    ids = [record.id for record in catalog_list()]
    assert len(ids) == len(set(ids))


def test_unknown_id():
    with pytest.raises(UnknownIdentityError):
        verify("NO-SUCH-ID")


def test_profile_below_minimum():
    with pytest.raises(ProfileTooSmallError):
        verify("AND-11", caps={"q": 0})


def test_outcome_reports_requested_caps():
    outcome = verify("EULER-ODD", caps={"q": 20, "a": 3})
    assert outcome.caps == {"q": 20}
    assert verify("CLOSING-SUM", caps={"n": 3}).caps == {"n": 3}


class TestMutation:
    @pytest.mark.parametrize("mutation", MUTATIONS)
    def test_series_record(self, mutation):
        outcome = verify("AND-11", caps=SMALL_AND11, mutation=mutation)
        assert outcome.status is Status.FAIL
        assert outcome.witness.exponents == {"q": 1}

    def test_family_record(self):
        outcome = verify("CLOSING-SUM", caps={"n": 2}, mutation=ADD_Q)
        assert outcome.status is Status.FAIL
        assert outcome.witness.exponents["n"] == 0

    def test_sample_mode_reports_the_sample(self):
        outcome = verify("AND-11", caps={"q": 10}, mode="sample", samples=2, mutation=ADD_Q)
        assert outcome.status is Status.FAIL
        assert "样本 0" in outcome.message


class TestSampleMode:
    def test_passes(self):
        outcome = verify("AND-11", caps={"q": 12}, mode="sample", samples=2, seed=7)
        assert outcome.status is Status.PASS
        assert outcome.mode == "sample"

    def test_is_deterministic(self):
        first = verify("BL-CONC1-I", caps={"n": 3}, mode="sample", samples=2, seed=3).to_dict()
        second = verify("BL-CONC1-I", caps={"n": 3}, mode="sample", samples=2, seed=3).to_dict()
        first.pop("elapsed_ms")
        second.pop("elapsed_ms")
        assert first == second

    def test_series_only_record_falls_back(self):
        outcome = verify("EULER-ODD", caps={"q": 20}, mode="sample")
        assert outcome.status is Status.PASS
        assert outcome.mode == "series"
        assert outcome.message

    def test_candidates(self):
        candidates = sample_candidates()
        assert Fraction(1, 2) in candidates and Fraction(16, 17) in candidates
        assert all(0 < value < 1 for value in candidates)
        assert len(candidates) == len(set(candidates))


def test_gen1_at_c_zero_collapses_to_rogers_szego_generating_function():
    record = get_record("GEN-I")
    ctx = record.context({"q": 10, "a": 4, "b": 4, "c": 4}, {"c": Fraction(0)})
    lhs, rhs = record.build(ctx)
    assert lhs.poly == 1
    assert compare_values(lhs, rhs).status is Status.PASS


def test_verify_all_keeps_requested_order():
    ids = ["CLOSING-SUM", "EULER-ODD", "I10"]
    outcomes = verify_all(caps={"q": 20, "n": 3}, ids=ids, jobs=1)
    assert [o.identity_id for o in outcomes] == ids
    assert all(o.passed for o in outcomes)


def test_verify_all_mutates_only_named_records():
    outcomes = verify_all(caps={"n": 2}, ids=["CLOSING-SUM", "I10"], mutated=["I10"], jobs=1)
    assert [o.status for o in outcomes] == [Status.PASS, Status.FAIL]


def test_every_record_has_a_citation():
    missing = [record.id for record in RECORDS if not record.citation.strip()]
    assert missing == []
    assert all(record.summary()["citation"] == record.citation for record in RECORDS)


# ---------------------------------------------------------------------- 迭代上限


def _reduced_caps(record):
    """默认上限减半（不低于最小值），族深度不超过 3"""
    caps = {}
    for name, value in record.default_caps.items():
        if name == "n":
            caps[name] = min(value, 3)
        else:
            caps[name] = max(value // 2, record.min_caps.get(name, 1))
    return caps


def _items(built):
    if isinstance(built, list):
        return [(labels, lhs, rhs) for labels, lhs, rhs in built]
    lhs, rhs = built
    return [({}, lhs, rhs)]


BOUNDED = [record.id for record in RECORDS if record.term_bound is not None]


@pytest.mark.parametrize("identity_id", BOUNDED)
def test_doubling_term_bounds_changes_nothing_in_the_exact_region(identity_id):
    record = get_record(identity_id)
    caps = _reduced_caps(record)
    tight = _items(record.build(record.context(caps)))
    loose = _items(record.build(record.context(caps, bound_scale=2)))
    assert [labels for labels, _, _ in tight] == [labels for labels, _, _ in loose]
    for (labels, lhs, rhs), (_, lhs2, rhs2) in zip(tight, loose):
        assert compare_values(lhs, lhs2).status is Status.PASS, (labels, "lhs")
        assert compare_values(rhs, rhs2).status is Status.PASS, (labels, "rhs")


def test_undeclared_sum_has_no_limit():
    record = get_record("EULER-ODD")
    ctx = record.context({"q": 10})
    assert ctx.limits == {}
    with pytest.raises(PreconditionError):
        ctx.limit("andrews")


def test_bound_scale_multiplies_limits():
    record = get_record("AND-11")
    plain = record.context(SMALL_AND11)
    scaled = record.context(SMALL_AND11, bound_scale=3)
    assert scaled.limit("andrews") == 3 * plain.limit("andrews")
    # n(n+1)/2 ≤ 12
    assert plain.limit("andrews") == 4


def test_build_context_without_term_bound_rejects_infinite_sums():
    record = get_record("AND-11")
    with pytest.raises(PreconditionError):
        record.build(BuildContext(record.registry, SMALL_AND11))


@pytest.mark.parametrize("identity_id", [record.id for record in RECORDS])
def test_add_q_mutation_is_caught(identity_id):
    record = get_record(identity_id)
    outcome = verify(identity_id, caps=_reduced_caps(record), mutation=ADD_Q)
    assert outcome.status is Status.FAIL
    assert outcome.witness is not None


# ---------------------------------------------------------------------- 记录之间的一致性

MASTER_CAPS = {"q": 8, "a": 3, "b": 3, "c": 3}


def _master_item(s):
    record = get_record("MASTER-s")
    for labels, lhs, rhs in record.build(record.context(MASTER_CAPS)):
        if labels["s"] == s:
            return lhs, rhs
    raise AssertionError(f"MASTER-s 没有 s={s} 的项")


def test_master_at_s1_agrees_with_gen1():
    gen1 = get_record("GEN-I")
    gen_lhs, gen_rhs = gen1.build(gen1.context(MASTER_CAPS))
    lhs, rhs = _master_item(1)
    assert compare_values(lhs, gen_lhs).status is Status.PASS
    assert compare_values(rhs, gen_rhs).status is Status.PASS
    assert compare_values(rhs, gen_lhs).status is Status.PASS


def test_master_at_s0_agrees_with_gen2_after_squaring_parameters():
    gen2 = get_record("GEN-II")
    gen_lhs, _ = gen2.build(gen2.context({"q": 8, "alpha": 6, "beta": 6, "c": 3}))
    master_lhs, _ = _master_item(0)

    # (alpha, beta, c, q) -> (a, b, c, q)，a = α²、b = β²
    halved = {}
    for (alpha, beta, c, q), coef in gen_lhs.poly.items():
        assert alpha % 2 == 0 and beta % 2 == 0
        halved[(alpha // 2, beta // 2, c, q)] = coef
    alpha_b, beta_b, c_b, q_b = gen_lhs.region_bounds()
    bounds = tuple(map(min, (alpha_b // 2, beta_b // 2, c_b, q_b), master_lhs.region_bounds()))
    assert bounds[-1] >= 4

    keys = set(halved) | {exps for exps, _ in master_lhs.poly.items()}
    compared = 0
    for exps in keys:
        if any(e > b for e, b in zip(exps, bounds)):
            continue
        assert halved.get(exps, 0) == master_lhs.poly.coefficient(exps), exps
        compared += 1
    assert compared > 0


# ---------------------------------------------------------------------- 精确区域说明


def test_region_note_lists_only_shrunk_variables():
    assert region_note({"q": 20, "a": 8}, {"q": 18, "a": 8}) == "q≤18"
    assert region_note({"q": 20, "a": 8}, {"q": 20, "a": 8}) == ""
    assert region_note({"n": 3}, {}) == ""


def test_verify_reports_a_shrunk_region(monkeypatch):
    def narrow(record, ctx, mutation=None):
        return VerificationOutcome(status=Status.PASS, caps={"q": 5, "a": 8, "b": 8})

    monkeypatch.setattr("catalog.verifier.evaluate", narrow)
    outcome = verify("AND-11")
    assert outcome.status is Status.PASS
    assert outcome.caps == {"q": 20, "a": 8, "b": 8}
    assert "q≤5" in outcome.message
