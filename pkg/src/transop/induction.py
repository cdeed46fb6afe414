"""Relations induced by operator tables, recoverability, and witness searches.

An upper table T induces the largest relation compatible with it: (s, t) is
related exactly when every row b satisfies T(b)(s) <= b(t).  Dually a lower
table P induces the relation where every row a satisfies a(s) <= P(a)(t).
A frame's relation is recoverable on a side when inducing from that side's
table gives the relation back; induction never loses pairs, so failure always
means extra pairs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .frame import RelationDelta, TransitionFrame
from .operators import (OperatorTable, PropositionPoset, codomain_closed,
                        lower_operator, upper_operator)


def induced_upper(table: OperatorTable) -> TransitionFrame:
    """The largest relation compatible with an upper table."""
    if table.kind != "upper":
        raise InputError("induced_upper needs an upper table")
    dom = table.domain
    states = dom.states
    lat = dom.lattice
    pairs = []
    for i, s in enumerate(states):
        for j, t in enumerate(states):
            if all(lat.leq(table.entry(p.name)[i], p.values[j]) for p in dom.rows):
                pairs.append((s, t))
    return TransitionFrame(states, pairs)


def induced_lower(table: OperatorTable) -> TransitionFrame:
    """The largest relation compatible with a lower table."""
    if table.kind != "lower":
        raise InputError("induced_lower needs a lower table")
    dom = table.domain
    states = dom.states
    lat = dom.lattice
    pairs = []
    for i, s in enumerate(states):
        for j, t in enumerate(states):
            if all(lat.leq(p.values[i], table.entry(p.name)[j]) for p in dom.rows):
                pairs.append((s, t))
    return TransitionFrame(states, pairs)


@dataclass(frozen=True)
class RecoverabilityReport:
    """Whether a frame's relation survives the round trip through its tables.

    The deltas only ever add pairs.  `witnesses` explains, for every extra
    pair, why no row separates it.
    """

    frame: TransitionFrame
    upper_induced: TransitionFrame
    lower_induced: TransitionFrame
    upper_recovered: bool
    lower_recovered: bool
    upper_delta: RelationDelta
    lower_delta: RelationDelta
    witnesses: dict

    @property
    def recovered(self) -> bool:
        return self.upper_recovered and self.lower_recovered


def recoverability(frame: TransitionFrame, a_poset: PropositionPoset,
                   b_poset: PropositionPoset) -> RecoverabilityReport:
    """Build both tables, induce both relations, and compare with the frame.

    Both sides are always reported, even when one fails, because the two
    inductions are independent diagnostics of the same system.
    """
    if frame.states != a_poset.states or frame.states != b_poset.states:
        raise InputError("frame and proposition posets have different states")
    if a_poset.lattice != b_poset.lattice:
        raise InputError("proposition posets use different lattices")
    upper = upper_operator(frame, b_poset)
    lower = lower_operator(frame, a_poset)
    r_upper = induced_upper(upper)
    r_lower = induced_lower(lower)
    extra_upper = r_upper.pairs - frame.pairs
    extra_lower = r_lower.pairs - frame.pairs
    assert frame.pairs <= r_upper.pairs and frame.pairs <= r_lower.pairs
    witnesses: dict = {}
    for s, t in sorted(extra_upper, key=lambda p: (frame.index(p[0]), frame.index(p[1]))):
        witnesses[(s, t)] = (f"upper: all {len(b_poset)} rows b satisfy "
                             f"upper(b)({s}) <= b({t})")
    for s, t in sorted(extra_lower, key=lambda p: (frame.index(p[0]), frame.index(p[1]))):
        reason = (f"lower: all {len(a_poset)} rows a satisfy "
                  f"a({s}) <= lower(a)({t})")
        if (s, t) in witnesses:
            witnesses[(s, t)] += "; " + reason
        else:
            witnesses[(s, t)] = reason
    return RecoverabilityReport(
        frame=frame,
        upper_induced=r_upper,
        lower_induced=r_lower,
        upper_recovered=not extra_upper,
        lower_recovered=not extra_lower,
        upper_delta=RelationDelta(frozenset(extra_upper), frozenset()),
        lower_delta=RelationDelta(frozenset(extra_lower), frozenset()),
        witnesses=witnesses,
    )


@dataclass(frozen=True)
class UniformWitnessReport:
    """Result of the per-state separating-row search.

    A side is certified when every state obtains a witness; certification is
    sufficient for recovery on that side but not necessary, so a failure list
    by itself proves nothing.
    """

    kind: str
    witnesses: dict
    failures: tuple[str, ...]

    @property
    def certified(self) -> bool:
        return not self.failures


def uniform_witness_upper(frame: TransitionFrame, b_poset: PropositionPoset
                          ) -> UniformWitnessReport:
    """For each target state t, search for one row that separates every non-edge into t.

    A row b works for t when b's value at t is not the top and, for every s
    not related to t, the meet of b over the successors of s fails to sit
    below b(t).  States with no successors contribute the empty meet, the
    top, which the first condition already rules out.  Success for every t
    certifies that the relation equals its upper-induced relation.
    """
    if frame.states != b_poset.states:
        raise InputError("frame and proposition poset have different states")
    lat = b_poset.lattice
    idx = b_poset.state_index
    witnesses: dict = {}
    failures = []
    for t in frame.states:
        non_edges = [s for s in frame.states if (s, t) not in frame.pairs]
        found = None
        for p in b_poset.rows:
            tb = p.values[idx[t]]
            ok = True
            for s in non_edges:
                if tb == lat.top:
                    ok = False
                    break
                m = lat.meet(p.values[idx[u]] for u in frame.successors(s))
                if lat.leq(m, tb):
                    ok = False
                    break
            if ok:
                found = p.name
                break
        if found is None:
            failures.append(t)
        else:
            witnesses[t] = found
    return UniformWitnessReport("upper", witnesses, tuple(failures))


def uniform_witness_lower(frame: TransitionFrame, a_poset: PropositionPoset
                          ) -> UniformWitnessReport:
    """Dual search: for each source state s, one row whose value at s is not
    the bottom and whose join over the predecessors of any non-target t fails
    to dominate it.  Success for every s certifies that the relation equals
    its lower-induced relation."""
    if frame.states != a_poset.states:
        raise InputError("frame and proposition poset have different states")
    lat = a_poset.lattice
    idx = a_poset.state_index
    witnesses: dict = {}
    failures = []
    for s in frame.states:
        non_edges = [t for t in frame.states if (s, t) not in frame.pairs]
        found = None
        for p in a_poset.rows:
            sa = p.values[idx[s]]
            ok = True
            for t in non_edges:
                if sa == lat.bottom:
                    ok = False
                    break
                j = lat.join(p.values[idx[u]] for u in frame.predecessors(t))
                if lat.leq(sa, j):
                    ok = False
                    break
            if ok:
                found = p.name
                break
        if found is None:
            failures.append(s)
        else:
            witnesses[s] = found
    return UniformWitnessReport("lower", witnesses, tuple(failures))


@dataclass(frozen=True)
class TransferReport:
    """Recovery transferred across sides via codomain closure.

    When one side recovers the relation and that side's table lands inside
    the opposite row family, the other side recovers it too; the conclusion
    fields verify this on the instance (None when the hypotheses fail).  The
    containment fields check the one-sided inclusions that follow from
    closure alone.
    """

    upper_recovered: bool
    lower_recovered: bool
    upper_image_closed: bool  # upper table lands inside the A rows
    lower_image_closed: bool  # lower table lands inside the B rows
    upper_transfer: bool | None
    lower_transfer: bool | None
    upper_in_lower: bool | None  # upper-induced inside lower-induced
    lower_in_upper: bool | None  # lower-induced inside upper-induced


def recovery_transfer_check(frame: TransitionFrame, a_poset: PropositionPoset,
                            b_poset: PropositionPoset) -> TransferReport:
    """Evaluate both transfer implications and their closure-only containments."""
    upper = upper_operator(frame, b_poset)
    lower = lower_operator(frame, a_poset)
    r_upper = induced_upper(upper)
    r_lower = induced_lower(lower)
    upper_recovered = r_upper.pairs == frame.pairs
    lower_recovered = r_lower.pairs == frame.pairs
    upper_closed = codomain_closed(upper, a_poset).closed
    lower_closed = codomain_closed(lower, b_poset).closed
    upper_transfer = None
    if upper_recovered and upper_closed:
        upper_transfer = r_lower.pairs == frame.pairs
    lower_transfer = None
    if lower_recovered and lower_closed:
        lower_transfer = r_upper.pairs == frame.pairs
    upper_in_lower = (r_upper.pairs <= r_lower.pairs) if lower_closed else None
    lower_in_upper = (r_lower.pairs <= r_upper.pairs) if upper_closed else None
    return TransferReport(
        upper_recovered=upper_recovered,
        lower_recovered=lower_recovered,
        upper_image_closed=upper_closed,
        lower_image_closed=lower_closed,
        upper_transfer=upper_transfer,
        lower_transfer=lower_transfer,
        upper_in_lower=upper_in_lower,
        lower_in_upper=lower_in_upper,
    )
