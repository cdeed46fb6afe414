"""Operator tables of the bundled systems, their order, and adjoint links."""

import itertools

import pytest
from goldens import (FIREFLY3_LOWER, FIREFLY3_RP, FIREFLY3_UPPER,
                     FIREFLY_LOWER, FIREFLY_UPPER, R2_UPPER, R4_UPPER)

from transop import (InputError, OperatorTable, Poset, PosetMap, Proposition,
                     PropositionPoset, TransitionFrame, adjunction_holds,
                     chain2, codomain_closed, is_galois_pair, lower_adjoint,
                     lower_operator, operator_compare, pointwise_leq,
                     upper_adjoint, upper_operator)


def table_dict(table):
    return dict(table.items)


def test_firefly_upper_table_matches_golden(firefly):
    t = upper_operator(firefly.frame, firefly.propositions)
    assert table_dict(t) == FIREFLY_UPPER


def test_firefly_lower_table_matches_golden(firefly):
    p = lower_operator(firefly.frame, firefly.propositions)
    assert table_dict(p) == FIREFLY_LOWER
    assert p.entry("l") == firefly.propositions.row("b").values
    assert p.entry("1") == firefly.propositions.row("f'").values


def test_firefly3_tables_match_goldens(firefly3):
    t = upper_operator(firefly3.frame, firefly3.propositions)
    p = lower_operator(firefly3.frame, firefly3.propositions)
    assert table_dict(t) == FIREFLY3_UPPER
    assert table_dict(p) == FIREFLY3_LOWER
    assert t.entry("n") == ("0",) * 5
    assert t.entry("n'") == tuple("11100")
    assert p.entry("b") == tuple("01110")
    assert p.entry("n") == tuple("00101")


def test_empty_relation_tables(firefly):
    b = firefly.propositions
    empty = TransitionFrame.empty(firefly.states)
    t = upper_operator(empty, b)
    p = lower_operator(empty, b)
    for name, _ in t.items:
        assert t.entry(name) == ("1",) * 5
        assert p.entry(name) == ("0",) * 5


def test_operator_requires_matching_states(firefly):
    with pytest.raises(InputError, match="different states"):
        upper_operator(TransitionFrame(("s1",)), firefly.propositions)


def test_adjunction_holds_on_frame_built_tables(firefly, firefly3):
    for desc in (firefly, firefly3):
        p = lower_operator(desc.frame, desc.propositions)
        t = upper_operator(desc.frame, desc.propositions)
        assert adjunction_holds(p, t).holds


def test_adjunction_holds_with_distinct_posets(firefly):
    a = firefly.propositions.subset(("0", "l", "n'", "1"))
    p = lower_operator(firefly.frame, a)
    t = upper_operator(firefly.frame, firefly.propositions)
    assert adjunction_holds(p, t).holds


def test_adjunction_fails_with_witness():
    b = PropositionPoset(chain2, ("s1",), [("0", ("0",)), ("1", ("1",))])
    bottom = {"0": ("0",), "1": ("0",)}
    p = OperatorTable(b, bottom, "lower")
    t = OperatorTable(b, bottom, "upper", strict=False)
    report = adjunction_holds(p, t)
    assert not report.holds
    assert report.witness[:2] == ("1", "1")


def test_adjunction_rejects_mismatched_carriers(firefly):
    other = PropositionPoset(chain2, ("s1",), [("0", ("0",)), ("1", ("1",))])
    p = lower_operator(TransitionFrame(("s1",)), other)
    t = upper_operator(firefly.frame, firefly.propositions)
    with pytest.raises(InputError):
        adjunction_holds(p, t)


def test_codomain_closed(firefly):
    b = firefly.propositions
    t = upper_operator(firefly.frame, b)
    p = lower_operator(firefly.frame, b)
    report = codomain_closed(t, b)
    assert not report.closed
    assert [name for name, _ in report.offenders] == ["l", "r", "l'", "r'"]
    assert codomain_closed(p, b).closed
    full = PropositionPoset.full_power(chain2, firefly.states)
    assert codomain_closed(t, full).closed


def test_operator_compare(firefly3):
    b = firefly3.propositions
    t = upper_operator(firefly3.frame, b)
    assert operator_compare(t, t) == "equal"
    r4 = TransitionFrame(firefly3.states, FIREFLY3_RP)
    t4 = upper_operator(r4, b)
    assert table_dict(t4) == R4_UPPER
    # entries shrank pointwise, so in the reversed upper order t4 sits above t
    assert pointwise_leq(t4, t)
    assert operator_compare(t4, t) == "greater"
    assert operator_compare(t, t4) == "less"


def test_operator_compare_incomparable_and_mismatch(firefly):
    b = firefly.propositions
    t = upper_operator(firefly.frame, b)
    p = lower_operator(firefly.frame, b)
    with pytest.raises(InputError):
        operator_compare(t, p)
    r4 = TransitionFrame(firefly.states, [("s1", "s1")])
    other = upper_operator(r4, b)
    assert operator_compare(t, other) == "incomparable"


def test_lower_equals_upper_of_inverse_in_dual(firefly):
    b = firefly.propositions
    direct = lower_operator(firefly.frame, b)
    via_dual = upper_operator(firefly.frame.inverse(), b.dual())
    assert dict(direct.items) == dict(via_dual.items)
    states = ("s1", "s2")
    b2 = PropositionPoset.power01(chain2, states)
    for mask in range(16):
        fr = TransitionFrame.from_mask(states, mask)
        assert dict(lower_operator(fr, b2).items) == \
            dict(upper_operator(fr.inverse(), b2.dual()).items)


def test_tables_are_antitone_in_the_relation():
    states = ("s1", "s2")
    b = PropositionPoset.power01(chain2, states)
    for m2 in range(16):
        sub = m2
        while True:
            m1 = sub
            small = TransitionFrame.from_mask(states, m1)
            large = TransitionFrame.from_mask(states, m2)
            assert pointwise_leq(upper_operator(large, b), upper_operator(small, b))
            assert pointwise_leq(lower_operator(small, b), lower_operator(large, b))
            if sub == 0:
                break
            sub = (sub - 1) & m2


def test_table_invariants_enforced():
    b = PropositionPoset.power01(chain2, ("s1",))
    with pytest.raises(InputError, match="not monotone"):
        OperatorTable(b, {"v0": ("1",), "v1": ("0",)}, "upper")
    with pytest.raises(InputError, match="constant-top"):
        OperatorTable(b, {"v0": ("0",), "v1": ("0",)}, "upper")
    with pytest.raises(InputError, match="constant-bottom"):
        OperatorTable(b, {"v0": ("1",), "v1": ("1",)}, "lower")
    OperatorTable(b, {"v0": ("0",), "v1": ("0",)}, "upper", strict=False)


def test_proposition_poset_invariants():
    with pytest.raises(InputError, match="share the same truth-value vector"):
        PropositionPoset(chain2, ("s1",),
                         [("0", ("0",)), ("1", ("1",)), ("dup", ("1",))])
    with pytest.raises(InputError, match="constant-top proposition required"):
        PropositionPoset(chain2, ("s1",), [("0", ("0",))])
    with pytest.raises(InputError, match="constant-bottom proposition required"):
        PropositionPoset(chain2, ("s1",), [("1", ("1",))])
    with pytest.raises(InputError, match="unknown lattice element"):
        PropositionPoset(chain2, ("s1",), [("0", ("0",)), ("1", ("2",))])


def test_power01_families():
    b = PropositionPoset.power01(chain2, ("s1", "s2"))
    assert len(b) == 4
    assert b.zero.name == "v00" and b.one.name == "v11"
    assert b.dual().zero.values == ("1", "1")


def test_upper_adjoint_of_lower_table_is_the_stabilized_upper_table(
        firefly, firefly_r2):
    # the lower table maps rows back into the family, so it is a poset map;
    # its synthesized right adjoint is exactly the upper table of the
    # relation one lower step ahead
    b = firefly.propositions
    p = lower_operator(firefly.frame, b)
    order = b.order_poset
    p_map = PosetMap(order, order,
                     {name: b.contains_vector(vec) for name, vec in p.items})
    g = upper_adjoint(p_map)
    assert g is not None
    t2 = upper_operator(firefly_r2.frame, firefly_r2.propositions)
    assert dict(t2.items) == R2_UPPER
    assert g.graph() == {name: b.contains_vector(vec) for name, vec in t2.items}
    assert is_galois_pair(p_map, g).holds


def test_no_total_lower_adjoint_for_the_image_restricted_upper_table(firefly):
    # the upper table leaves the family, and even restricted to its image it
    # has no left adjoint; the pointwise meet formula still reproduces the
    # lower table on every image vector that is a row
    b = firefly.propositions
    t = upper_operator(firefly.frame, b)
    p = lower_operator(firefly.frame, b)
    image = []
    for _, vec in t.items:
        if vec not in image:
            image.append(vec)
    names = {vec: f"i{k}" for k, vec in enumerate(image)}
    image_poset = Poset(tuple(names.values()),
                        [(names[u], names[v]) for u in image for v in image
                         if b.vector_leq(u, v)])
    t_map = PosetMap(b.order_poset, image_poset,
                     {name: names[vec] for name, vec in t.items})
    assert lower_adjoint(t_map) is None
    order = b.order_poset
    matched = {}
    for vec in image:
        candidates = [r.name for r in b.rows if b.vector_leq(vec, t.entry(r.name))]
        in_family = b.contains_vector(vec)
        if in_family is not None:
            matched[in_family] = order.greatest_lower_bound(candidates)
    assert matched == {"0": "0", "n": "n", "l": "b", "1": "f'"}
    for name, value in matched.items():
        assert b.contains_vector(p.entry(name)) == value
