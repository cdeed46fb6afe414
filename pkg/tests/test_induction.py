"""Induced relations, recoverability reports, and witness searches."""

import pytest
from goldens import (FIREFLY3_R, FIREFLY3_RP, FIREFLY3_RT, FIREFLY_R,
                     FIREFLY_RP)
from hypothesis import given, settings
from hypothesis import strategies as st

from transop import (InputError, Proposition, PropositionPoset,
                     TransitionFrame, adjunction_holds, chain2, induced_lower,
                     induced_upper, lower_operator, pointwise_leq,
                     recoverability, recovery_transfer_check,
                     uniform_witness_lower, uniform_witness_upper,
                     upper_operator, vector_name)
from transop.oracle import enumerate_unit_maps, enumerate_zero_maps


def test_firefly_induced_relations(firefly):
    t = upper_operator(firefly.frame, firefly.propositions)
    p = lower_operator(firefly.frame, firefly.propositions)
    assert induced_upper(t).pairs == FIREFLY_R
    assert induced_lower(p).pairs == FIREFLY_RP


def test_firefly3_induced_relations(firefly3):
    t = upper_operator(firefly3.frame, firefly3.propositions)
    p = lower_operator(firefly3.frame, firefly3.propositions)
    assert induced_upper(t).pairs == FIREFLY3_RT
    assert induced_lower(p).pairs == FIREFLY3_RP


def test_extremal_relations_are_recovered(firefly):
    b = firefly.propositions
    empty = TransitionFrame.empty(firefly.states)
    full = TransitionFrame.full(firefly.states)
    assert induced_upper(upper_operator(empty, b)).pairs == frozenset()
    assert induced_lower(lower_operator(empty, b)).pairs == frozenset()
    assert induced_upper(upper_operator(full, b)).pairs == full.pairs
    assert induced_lower(lower_operator(full, b)).pairs == full.pairs


def test_induced_kind_checked(firefly):
    t = upper_operator(firefly.frame, firefly.propositions)
    with pytest.raises(InputError):
        induced_lower(t)


def test_firefly_recoverability_report(firefly):
    report = recoverability(firefly.frame, firefly.propositions,
                            firefly.propositions)
    assert report.upper_recovered
    assert not report.lower_recovered
    assert not report.recovered
    assert report.upper_delta.added == frozenset()
    assert report.lower_delta.added == \
        {("s1", "s3"), ("s2", "s2"), ("s3", "s3"), ("s4", "s2")}
    assert not report.lower_delta.removed
    assert set(report.witnesses) == report.lower_delta.added
    for reason in report.witnesses.values():
        assert "lower" in reason


def test_r2_is_recoverable_both_ways(firefly_r2):
    report = recoverability(firefly_r2.frame, firefly_r2.propositions,
                            firefly_r2.propositions)
    assert report.recovered
    assert report.witnesses == {}


def test_empty_relation_recoverable(firefly):
    empty = TransitionFrame.empty(firefly.states)
    report = recoverability(empty, firefly.propositions, firefly.propositions)
    assert report.recovered


def test_uniform_witnesses_firefly(firefly):
    b = firefly.propositions
    upper = uniform_witness_upper(firefly.frame, b)
    assert upper.certified
    assert upper.witnesses == \
        {"s1": "f'", "s2": "l'", "s3": "r'", "s4": "f'", "s5": "b"}
    lower = uniform_witness_lower(firefly.frame, b)
    assert not lower.certified
    assert lower.failures == ("s1", "s2", "s3", "s4")
    assert lower.witnesses == {"s5": "n"}


def test_uniform_witnesses_firefly3(firefly3):
    upper = uniform_witness_upper(firefly3.frame, firefly3.propositions)
    assert "s1" in upper.failures
    assert upper.failures == ("s1", "s3")
    assert upper.witnesses == {"s2": "l'", "s4": "f'", "s5": "n'"}
    lower = uniform_witness_lower(firefly3.frame, firefly3.propositions)
    assert lower.failures == ("s1", "s2", "s3", "s4")


def test_uniform_witnesses_r2(firefly_r2):
    b = firefly_r2.propositions
    upper = uniform_witness_upper(firefly_r2.frame, b)
    assert upper.certified
    assert upper.witnesses == \
        {"s1": "f'", "s2": "n", "s3": "n", "s4": "f'", "s5": "b"}
    lower = uniform_witness_lower(firefly_r2.frame, b)
    assert lower.certified
    assert lower.witnesses == \
        {"s1": "l", "s2": "l", "s3": "r", "s4": "r", "s5": "n"}


def test_full_relation_witnesses_vacuously(firefly):
    full = TransitionFrame.full(firefly.states)
    lower = uniform_witness_lower(full, firefly.propositions)
    assert lower.certified
    assert set(lower.witnesses.values()) == {"0"}


def test_binary_row_space_always_certifies():
    states = ("s1", "s2")
    b = PropositionPoset.power01(chain2, states)
    for mask in range(16):
        fr = TransitionFrame.from_mask(states, mask)
        assert uniform_witness_upper(fr, b).certified
        assert uniform_witness_lower(fr, b).certified


def test_certification_is_consistent_with_induction(firefly, firefly3,
                                                    firefly_r2):
    for desc in (firefly, firefly3, firefly_r2):
        b = desc.propositions
        report = recoverability(desc.frame, b, b)
        if uniform_witness_upper(desc.frame, b).certified:
            assert report.upper_recovered
        if uniform_witness_lower(desc.frame, b).certified:
            assert report.lower_recovered


def test_transfer_check_r2(firefly_r2):
    report = recovery_transfer_check(firefly_r2.frame, firefly_r2.propositions,
                                     firefly_r2.propositions)
    assert report.upper_recovered and report.lower_recovered
    assert report.upper_image_closed and report.lower_image_closed
    assert report.upper_transfer is True
    assert report.lower_transfer is True
    assert report.upper_in_lower is True and report.lower_in_upper is True


def test_transfer_check_firefly(firefly):
    report = recovery_transfer_check(firefly.frame, firefly.propositions,
                                     firefly.propositions)
    assert report.upper_recovered and not report.lower_recovered
    assert not report.upper_image_closed
    assert report.lower_image_closed
    assert report.upper_transfer is None and report.lower_transfer is None
    # closure of the lower table forces the one-sided containment
    assert report.upper_in_lower is True
    assert report.lower_in_upper is None


def test_maps_dominated_by_their_induced_tables():
    b = PropositionPoset.power01(chain2, ("s1", "s2"))
    for t in enumerate_unit_maps(b):
        rebuilt = upper_operator(induced_upper(t), b)
        assert pointwise_leq(t, rebuilt)
    for p in enumerate_zero_maps(b):
        rebuilt = lower_operator(induced_lower(p), b)
        assert pointwise_leq(rebuilt, p)


@st.composite
def random_instance(draw):
    n = draw(st.integers(1, 3))
    states = tuple(f"s{i}" for i in range(1, n + 1))
    pool = [tuple(bits) for bits in
            __import__("itertools").product("01", repeat=n)]
    extras = draw(st.lists(st.sampled_from(pool), max_size=5, unique=True))
    vecs = sorted({pool[0], pool[-1], *extras})
    rows = [Proposition(vector_name(chain2, v), v) for v in vecs]
    mask = draw(st.integers(0, (1 << (n * n)) - 1))
    return PropositionPoset(chain2, states, rows), \
        TransitionFrame.from_mask(states, mask)


@given(random_instance())
@settings(max_examples=80, deadline=None)
def test_induction_is_extensive_and_adjoint(data):
    poset, frame = data
    t = upper_operator(frame, poset)
    p = lower_operator(frame, poset)
    assert frame.pairs <= induced_upper(t).pairs
    assert frame.pairs <= induced_lower(p).pairs
    assert adjunction_holds(p, t).holds
