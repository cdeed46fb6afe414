"""Propositions over a state set and the transition operator tables of a frame.

A proposition assigns a lattice truth value to every state.  A family of
distinct propositions containing the constant-bottom and constant-top rows is
a bounded poset under the pointwise order.  From a transition frame two
operator tables arise: the upper table sends a row to the state-wise meet of
its values over transition successors (the row holds after every step out of
the state), and the lower table sends a row to the state-wise join over
predecessors (the row held before some step into the state).  Entries live in
the full vector space over the lattice and are deliberately not clipped to
the row family; whether they land inside it is a separate query.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

from .errors import InputError
from .frame import TransitionFrame
from .order import Lattice, Poset


@dataclass(frozen=True)
class Proposition:
    """A named truth-value vector, one value per state in state order."""

    name: str
    values: tuple[str, ...]


def vector_name(lattice: Lattice, values: tuple[str, ...]) -> str:
    """Deterministic row name for an auto-generated vector."""
    if all(len(e) == 1 for e in lattice.elements):
        return "v" + "".join(values)
    return "v" + "-".join(values)


class PropositionPoset:
    """A finite bounded family of propositions under the pointwise order.

    Invariants checked at construction: every value is a lattice element, no
    two rows share a truth-value vector, and the constant-bottom and
    constant-top rows are present (they are the bounds of the family).
    """

    def __init__(self, lattice: Lattice, states: Iterable[str],
                 rows: Iterable[Proposition | tuple]):
        states = tuple(states)
        if not states:
            raise InputError("a proposition poset needs at least one state")
        if len(set(states)) != len(states):
            raise InputError("duplicate state identifiers")
        self.lattice = lattice
        self.states = states
        self.state_index = {s: i for i, s in enumerate(states)}
        normalized: list[Proposition] = []
        for row in rows:
            if not isinstance(row, Proposition):
                name, values = row
                row = Proposition(name, tuple(values))
            if len(row.values) != len(states):
                raise InputError(
                    f"row {row.name}: expected {len(states)} values, got {len(row.values)}")
            for v in row.values:
                if v not in lattice:
                    raise InputError(f"row {row.name}: unknown lattice element {v!r}")
            normalized.append(row)
        names = [p.name for p in normalized]
        if len(set(names)) != len(names):
            dup = next(n for n in names if names.count(n) > 1)
            raise InputError(f"duplicate proposition name {dup}")
        by_vec: dict[tuple, str] = {}
        for p in normalized:
            if p.values in by_vec:
                raise InputError(
                    f"rows {by_vec[p.values]} and {p.name} share the same truth-value vector")
            by_vec[p.values] = p.name
        bottom_vec = (lattice.bottom,) * len(states)
        top_vec = (lattice.top,) * len(states)
        if bottom_vec not in by_vec:
            raise InputError("constant-bottom proposition required")
        if top_vec not in by_vec:
            raise InputError("constant-top proposition required")
        self.rows = tuple(normalized)
        self._by_name = {p.name: p for p in self.rows}
        self._by_vec = by_vec
        self.zero = self._by_name[by_vec[bottom_vec]]
        self.one = self._by_name[by_vec[top_vec]]

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    def __eq__(self, other):
        if not isinstance(other, PropositionPoset):
            return NotImplemented
        return (self.lattice == other.lattice and self.states == other.states
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.lattice, self.states, self.rows))

    def __repr__(self):
        return f"<PropositionPoset {len(self.rows)} rows over {len(self.states)} states>"

    def names(self) -> tuple[str, ...]:
        return tuple(p.name for p in self.rows)

    def row(self, name: str) -> Proposition:
        if name not in self._by_name:
            raise InputError(f"unknown proposition {name}")
        return self._by_name[name]

    def contains_vector(self, values: tuple[str, ...]) -> str | None:
        """The name of the row carrying this vector, or None."""
        return self._by_vec.get(tuple(values))

    def vector_leq(self, u: tuple[str, ...], v: tuple[str, ...]) -> bool:
        return all(self.lattice.leq(a, b) for a, b in zip(u, v))

    def row_leq(self, p, q) -> bool:
        pv = p.values if isinstance(p, Proposition) else self.row(p).values
        qv = q.values if isinstance(q, Proposition) else self.row(q).values
        return self.vector_leq(pv, qv)

    @cached_property
    def order_poset(self) -> Poset:
        """The rows as an abstract poset under the pointwise order."""
        names = self.names()
        pairs = [(p.name, q.name) for p in self.rows for q in self.rows
                 if self.vector_leq(p.values, q.values)]
        return Poset(names, pairs)

    def dual(self) -> "PropositionPoset":
        """The same rows over the order-dual lattice; the bounds swap roles."""
        return PropositionPoset(self.lattice.dual(), self.states, self.rows)

    def subset(self, names: Iterable[str]) -> "PropositionPoset":
        """A sub-family in the order given; must still contain the constants."""
        return PropositionPoset(self.lattice, self.states,
                                [self.row(n) for n in names])

    @classmethod
    def power01(cls, lattice: Lattice, states) -> "PropositionPoset":
        """All vectors with values among the lattice bounds, named canonically."""
        states = tuple(states)
        rows = []
        for combo in itertools.product((lattice.bottom, lattice.top),
                                       repeat=len(states)):
            rows.append(Proposition(vector_name(lattice, combo), combo))
        return cls(lattice, states, rows)

    @classmethod
    def full_power(cls, lattice: Lattice, states) -> "PropositionPoset":
        """The full vector space over the lattice, named canonically."""
        states = tuple(states)
        rows = []
        for combo in itertools.product(lattice.elements, repeat=len(states)):
            rows.append(Proposition(vector_name(lattice, combo), combo))
        return cls(lattice, states, rows)


class OperatorTable:
    """A total, monotone assignment of result vectors to the rows of a poset.

    kind "upper" tables send the constant-top row to the constant-top vector;
    kind "lower" tables send the constant-bottom row to the constant-bottom
    vector.  `validate=False` skips the invariant sweep for generated tables
    that are monotone by construction; `strict=False` skips only the boundary
    condition, for deliberately degenerate counterexamples.
    """

    def __init__(self, domain: PropositionPoset, entries: Mapping[str, tuple],
                 kind: str, validate: bool = True, strict: bool = True):
        if kind not in ("upper", "lower"):
            raise InputError(f"unknown operator kind {kind!r}")
        self.domain = domain
        self.kind = kind
        norm: dict[str, tuple[str, ...]] = {}
        for p in domain.rows:
            if p.name not in entries:
                raise InputError(f"missing entry for row {p.name}")
            vec = tuple(entries[p.name])
            if len(vec) != len(domain.states):
                raise InputError(f"entry for {p.name} has wrong arity")
            for v in vec:
                if v not in domain.lattice:
                    raise InputError(f"entry for {p.name}: unknown lattice element {v!r}")
            norm[p.name] = vec
        extra = set(entries) - set(norm)
        if extra:
            raise InputError(f"entries for unknown rows: {sorted(extra)!r}")
        self._entries = norm
        self.items = tuple((p.name, norm[p.name]) for p in domain.rows)
        if validate:
            for p in domain.rows:
                for q in domain.rows:
                    if domain.vector_leq(p.values, q.values) and \
                            not domain.vector_leq(norm[p.name], norm[q.name]):
                        raise InputError(
                            f"table is not monotone: {p.name} <= {q.name} "
                            f"but entries are unordered")
            if strict:
                lat = domain.lattice
                if kind == "upper":
                    top_vec = (lat.top,) * len(domain.states)
                    if norm[domain.one.name] != top_vec:
                        raise InputError(
                            "an upper table must send the top row to the constant-top vector")
                else:
                    bottom_vec = (lat.bottom,) * len(domain.states)
                    if norm[domain.zero.name] != bottom_vec:
                        raise InputError(
                            "a lower table must send the bottom row to the constant-bottom vector")

    def entry(self, name: str) -> tuple[str, ...]:
        if name not in self._entries:
            raise InputError(f"unknown proposition {name}")
        return self._entries[name]

    __getitem__ = entry

    def __eq__(self, other):
        if not isinstance(other, OperatorTable):
            return NotImplemented
        return (self.domain == other.domain and self.kind == other.kind
                and self.items == other.items)

    def __hash__(self):
        return hash((self.domain, self.kind, self.items))

    def __repr__(self):
        return f"<OperatorTable {self.kind}, {len(self.items)} rows>"

    def named_entries(self):
        """Yield (row name, entry vector, matching row name or None)."""
        for name, vec in self.items:
            yield name, vec, self.domain.contains_vector(vec)


def upper_operator(frame: TransitionFrame, b_poset: PropositionPoset) -> OperatorTable:
    """The upper table of a frame: entry(b)(s) = meet of b over successors of s.

    A state with no successors contributes the empty meet, the top.
    """
    if frame.states != b_poset.states:
        raise InputError("frame and proposition poset have different states")
    lat = b_poset.lattice
    idx = b_poset.state_index
    entries = {}
    for p in b_poset.rows:
        vec = tuple(lat.meet(p.values[idx[t]] for t in frame.successors(s))
                    for s in frame.states)
        entries[p.name] = vec
    return OperatorTable(b_poset, entries, "upper", validate=False)


def lower_operator(frame: TransitionFrame, a_poset: PropositionPoset) -> OperatorTable:
    """The lower table of a frame: entry(a)(t) = join of a over predecessors of t.

    A state with no predecessors contributes the empty join, the bottom.
    """
    if frame.states != a_poset.states:
        raise InputError("frame and proposition poset have different states")
    lat = a_poset.lattice
    idx = a_poset.state_index
    entries = {}
    for p in a_poset.rows:
        vec = tuple(lat.join(p.values[idx[s]] for s in frame.predecessors(t))
                    for t in frame.states)
        entries[p.name] = vec
    return OperatorTable(a_poset, entries, "lower", validate=False)


@dataclass(frozen=True)
class AdjunctionReport:
    holds: bool
    witness: tuple[str, str, str] | None = None  # (a row, b row, failing direction)

    def __bool__(self) -> bool:
        return self.holds


def adjunction_holds(lower_table: OperatorTable, upper_table: OperatorTable
                     ) -> AdjunctionReport:
    """Check the residuation P(a) <= b iff a <= T(b) over all row pairs.

    Comparisons happen pointwise in the vector space, so the tables need not
    land inside the row families.
    """
    a_poset = lower_table.domain
    b_poset = upper_table.domain
    if a_poset.states != b_poset.states or a_poset.lattice != b_poset.lattice:
        raise InputError("carriers do not match")
    if lower_table.kind != "lower" or upper_table.kind != "upper":
        raise InputError("expected a lower table and an upper table")
    for a in a_poset.rows:
        pa = lower_table.entry(a.name)
        for b in b_poset.rows:
            left = a_poset.vector_leq(pa, b.values)
            right = a_poset.vector_leq(a.values, upper_table.entry(b.name))
            if left != right:
                direction = ("P(a) <= b holds but a <= T(b) fails" if left
                             else "a <= T(b) holds but P(a) <= b fails")
                return AdjunctionReport(False, (a.name, b.name, direction))
    return AdjunctionReport(True)


@dataclass(frozen=True)
class ClosureReport:
    closed: bool
    offenders: tuple[tuple[str, tuple[str, ...]], ...]  # (row name, image vector)

    def __bool__(self) -> bool:
        return self.closed


def codomain_closed(table: OperatorTable, target: PropositionPoset) -> ClosureReport:
    """True when every entry vector is a row of `target`; offenders otherwise."""
    if table.domain.states != target.states or table.domain.lattice != target.lattice:
        raise InputError("carriers do not match")
    offenders = tuple((name, vec) for name, vec in table.items
                      if target.contains_vector(vec) is None)
    return ClosureReport(not offenders, offenders)


def pointwise_leq(t1: OperatorTable, t2: OperatorTable) -> bool:
    """Entry-wise vector order between tables over the same domain."""
    if t1.domain != t2.domain:
        raise InputError("tables have different domains")
    dom = t1.domain
    return all(dom.vector_leq(v1, v2)
               for (_, v1), (_, v2) in zip(t1.items, t2.items))


def operator_compare(t1: OperatorTable, t2: OperatorTable) -> str:
    """Compare two tables of the same kind in that kind's canonical order.

    Lower tables compare pointwise.  Upper tables compare in the reversed
    pointwise order, under which a table is smaller when its entries are
    everywhere larger; the constant-top table is then the least element.
    Returns "equal", "less", "greater", or "incomparable" for t1 against t2.
    """
    if t1.domain != t2.domain or t1.kind != t2.kind:
        raise InputError("tables are not comparable: different domain or kind")
    le = pointwise_leq(t1, t2)
    ge = pointwise_leq(t2, t1)
    if t1.kind == "upper":
        le, ge = ge, le
    if le and ge:
        return "equal"
    if le:
        return "less"
    if ge:
        return "greater"
    return "incomparable"
