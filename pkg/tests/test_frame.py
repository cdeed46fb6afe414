"""Transition frames and relation algebra."""

import pytest

from transop import InputError, TransitionFrame, relation_compare


def test_successors_of_s3(firefly):
    assert firefly.frame.successors("s3") == {"s2", "s5"}


def test_predecessors_of_s5(firefly):
    assert firefly.frame.predecessors("s5") == {"s3", "s4", "s5"}


def test_predecessors_in_the_alternative_relation(firefly3):
    assert firefly3.frame.predecessors("s3") == {"s2", "s4", "s5"}


def test_empty_and_full_relations():
    empty = TransitionFrame.empty(("s1", "s2"))
    assert empty.successors("s1") == frozenset()
    assert empty.predecessors("s2") == frozenset()
    full = TransitionFrame.full(("s1", "s2"))
    assert full.successors("s2") == {"s1", "s2"}


def test_unknown_state_rejected(firefly):
    with pytest.raises(InputError, match="unknown state s9"):
        firefly.frame.successors("s9")
    with pytest.raises(InputError, match="unknown state"):
        TransitionFrame(("s1",), [("s1", "s9")])


def test_inverse(firefly, firefly3):
    inv = firefly.frame.inverse()
    assert ("s2", "s1") in inv.pairs
    assert ("s5", "s5") in inv.pairs
    assert firefly3.frame.inverse().inverse() == firefly3.frame


def test_inverse_of_empty_is_empty():
    empty = TransitionFrame.empty(("s1", "s2"))
    assert empty.inverse() == empty


def test_relation_compare_equal(firefly):
    verdict, delta = relation_compare(firefly.frame, firefly.frame)
    assert verdict == "equal"
    assert delta.is_empty


def test_relation_compare_subset(firefly, firefly_r2):
    verdict, delta = relation_compare(firefly.frame, firefly_r2.frame)
    assert verdict == "subset"
    assert delta.added == {("s1", "s3"), ("s2", "s2"), ("s3", "s3"), ("s4", "s2")}
    assert not delta.removed
    back, _ = relation_compare(firefly_r2.frame, firefly.frame)
    assert back == "superset"


def test_relation_compare_incomparable():
    states = ("s1", "s2")
    r1 = TransitionFrame(states, [("s1", "s2")])
    r2 = TransitionFrame(states, [("s2", "s1")])
    verdict, delta = relation_compare(r1, r2)
    assert verdict == "incomparable"
    assert delta.added == {("s2", "s1")}
    assert delta.removed == {("s1", "s2")}


def test_relation_compare_needs_same_states():
    with pytest.raises(InputError):
        relation_compare(TransitionFrame(("s1",)), TransitionFrame(("s2",)))


def test_degree_sums_partition_the_relation(firefly):
    fr = firefly.frame
    assert sum(len(fr.successors(s)) for s in fr.states) == len(fr.pairs)
    assert sum(len(fr.predecessors(t)) for t in fr.states) == len(fr.pairs)


def test_predecessors_equal_successors_of_inverse():
    for mask in range(16):
        fr = TransitionFrame.from_mask(("s1", "s2"), mask)
        inv = fr.inverse()
        for s in fr.states:
            assert fr.predecessors(s) == inv.successors(s)


def test_mask_round_trip():
    states = ("s1", "s2", "s3")
    for mask in (0, 1, 37, 511):
        assert TransitionFrame.from_mask(states, mask).mask == mask
    with pytest.raises(InputError):
        TransitionFrame.from_mask(states, 1 << 9)
