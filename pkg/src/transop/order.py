"""Finite posets, finite complete lattices, and Galois connections.

Orders are extensional over opaque string identifiers.  A lattice is built
from its Hasse diagram (cover pairs); the order is the reflexive-transitive
closure of the covers, and the constructor certifies that every pair of
elements has a unique meet and join, which together with finiteness makes the
lattice complete.  Arbitrary-subset meets and joins are folds seeded with the
empty-meet/empty-join conventions: meet of nothing is the top, join of
nothing is the bottom.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

from .errors import InputError


def _toggle_op(name: str) -> str:
    return name[:-3] if name.endswith("^op") else name + "^op"


class Poset:
    """A finite partially ordered set.

    `pairs` lists comparabilities ``a <= b``; the constructor closes them
    reflexively and transitively and rejects cycles through distinct elements
    (antisymmetry).  Instances are immutable after construction.
    """

    def __init__(self, elements: Iterable[str], pairs: Iterable[tuple[str, str]] = (),
                 name: str = ""):
        elems = tuple(elements)
        if not elems:
            raise InputError("a poset needs at least one element")
        if len(set(elems)) != len(elems):
            raise InputError("duplicate element identifiers")
        self.name = name
        self.elements = elems
        self._index = {e: i for i, e in enumerate(elems)}
        succ: dict[str, set[str]] = {e: set() for e in elems}
        for a, b in pairs:
            self._check_element(a)
            self._check_element(b)
            succ[a].add(b)
        up: dict[str, set[str]] = {}
        for e in elems:
            seen = {e}
            stack = [e]
            while stack:
                for nxt in succ[stack.pop()]:
                    if nxt not in seen:
                        seen.add(nxt)
                        stack.append(nxt)
            up[e] = seen
        for a, b in itertools.combinations(elems, 2):
            if b in up[a] and a in up[b]:
                raise InputError(f"order cycle through {a!r} and {b!r}")
        self._up = {e: frozenset(s) for e, s in up.items()}

    def _check_element(self, e) -> None:
        if e not in self._index:
            raise InputError(f"unknown element {e!r}")

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, e) -> bool:
        return e in self._index

    def __repr__(self) -> str:
        label = self.name or f"{len(self.elements)} elements"
        return f"<{type(self).__name__} {label}>"

    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        return self.elements == other.elements and self.relation == other.relation

    def __hash__(self):
        return hash((self.elements, self.relation))

    def index(self, e) -> int:
        self._check_element(e)
        return self._index[e]

    def leq(self, a, b) -> bool:
        self._check_element(a)
        self._check_element(b)
        return b in self._up[a]

    def lt(self, a, b) -> bool:
        return a != b and self.leq(a, b)

    def upset(self, a) -> frozenset:
        self._check_element(a)
        return self._up[a]

    def downset(self, b) -> frozenset:
        self._check_element(b)
        return frozenset(x for x in self.elements if b in self._up[x])

    @cached_property
    def relation(self) -> frozenset:
        """All ordered pairs (a, b) with a <= b, reflexive pairs included."""
        return frozenset((a, b) for a in self.elements for b in self._up[a])

    @cached_property
    def bottom(self) -> str | None:
        least = [e for e in self.elements if len(self._up[e]) == len(self.elements)]
        return least[0] if least else None

    @cached_property
    def top(self) -> str | None:
        greatest = [e for e in self.elements
                    if all(e in self._up[x] for x in self.elements)]
        return greatest[0] if greatest else None

    @property
    def is_bounded(self) -> bool:
        return self.bottom is not None and self.top is not None

    def covers(self) -> tuple[tuple[str, str], ...]:
        """Hasse edges (a, b): a < b with nothing strictly between."""
        out = []
        for a in self.elements:
            for b in self.elements:
                if self.lt(a, b) and not any(
                        self.lt(a, c) and self.lt(c, b) for c in self.elements):
                    out.append((a, b))
        return tuple(out)

    def least_upper_bound(self, subset: Iterable[str]) -> str | None:
        """The unique smallest upper bound of `subset`, or None if absent."""
        items = tuple(subset)
        for e in items:
            self._check_element(e)
        ubs = [y for y in self.elements if all(self.leq(x, y) for x in items)]
        least = [y for y in ubs if all(self.leq(y, z) for z in ubs)]
        return least[0] if least else None

    def greatest_lower_bound(self, subset: Iterable[str]) -> str | None:
        """The unique largest lower bound of `subset`, or None if absent."""
        items = tuple(subset)
        for e in items:
            self._check_element(e)
        lbs = [y for y in self.elements if all(self.leq(y, x) for x in items)]
        greatest = [y for y in lbs if all(self.leq(z, y) for z in lbs)]
        return greatest[0] if greatest else None

    def dual(self) -> "Poset":
        return Poset(self.elements, ((b, a) for (a, b) in self.relation),
                     name=_toggle_op(self.name))


class Lattice(Poset):
    """A finite complete lattice given by its Hasse diagram.

    Certified at construction: the declared bottom and top are the least and
    greatest elements, bottom != top, and every pair of elements has a unique
    greatest lower bound and least upper bound.  Binary meets and joins are
    precomputed tables.
    """

    def __init__(self, name: str, elements: Iterable[str], bottom: str, top: str,
                 covers: Iterable[tuple[str, str]]):
        super().__init__(elements, covers, name=name)
        if self.bottom != bottom:
            raise InputError(f"declared bottom {bottom!r} is not the least element")
        if self.top != top:
            raise InputError(f"declared top {top!r} is not the greatest element")
        if bottom == top:
            raise InputError("trivial lattice: bottom equals top")
        meet_table: dict[tuple[str, str], str] = {}
        join_table: dict[tuple[str, str], str] = {}
        for a in self.elements:
            for b in self.elements:
                m = self.greatest_lower_bound((a, b))
                if m is None:
                    raise InputError(f"not a lattice: {a!r} and {b!r} have no meet")
                j = self.least_upper_bound((a, b))
                if j is None:
                    raise InputError(f"not a lattice: {a!r} and {b!r} have no join")
                meet_table[a, b] = m
                join_table[a, b] = j
        self._meet = meet_table
        self._join = join_table

    def meet(self, subset: Iterable[str]) -> str:
        """Greatest lower bound of any subset; the empty meet is the top."""
        out = self.top
        for e in subset:
            self._check_element(e)
            out = self._meet[out, e]
        return out

    def join(self, subset: Iterable[str]) -> str:
        """Least upper bound of any subset; the empty join is the bottom."""
        out = self.bottom
        for e in subset:
            self._check_element(e)
            out = self._join[out, e]
        return out

    def meet_pair(self, a, b) -> str:
        self._check_element(a)
        self._check_element(b)
        return self._meet[a, b]

    def join_pair(self, a, b) -> str:
        self._check_element(a)
        self._check_element(b)
        return self._join[a, b]

    def dual(self) -> "Lattice":
        return Lattice(_toggle_op(self.name), self.elements, self.top, self.bottom,
                       tuple((b, a) for (a, b) in self.covers()))


def chain(size: int, name: str | None = None) -> Lattice:
    """The totally ordered lattice 0 < 1 < ... < size-1."""
    if size < 2:
        raise InputError("a non-trivial chain needs at least two elements")
    elems = tuple(str(i) for i in range(size))
    covers = tuple((str(i), str(i + 1)) for i in range(size - 1))
    return Lattice(name or f"chain{size}", elems, "0", elems[-1], covers)


#: The two-element truth-value lattice 0 < 1.
chain2 = chain(2)


class PosetMap:
    """A total map between finite posets.

    Monotonicity is the expected invariant and is checked at construction;
    pass ``check_monotone=False`` to build deliberate counterexamples for the
    Galois-connection diagnostics.
    """

    def __init__(self, source: Poset, target: Poset, mapping: Mapping[str, str],
                 check_monotone: bool = True):
        self.source = source
        self.target = target
        graph = {}
        for a in source.elements:
            if a not in mapping:
                raise InputError(f"map is not total: no image for {a!r}")
            v = mapping[a]
            if v not in target:
                raise InputError(f"image {v!r} of {a!r} is not in the target poset")
            graph[a] = v
        extra = set(mapping) - set(source.elements)
        if extra:
            raise InputError(f"map defined on non-elements: {sorted(extra)!r}")
        self._graph = graph
        if check_monotone and self.monotone_witness is not None:
            a, b = self.monotone_witness
            raise InputError(
                f"map is not monotone: {a!r} <= {b!r} but images are unordered")

    def __call__(self, a) -> str:
        if a not in self._graph:
            raise InputError(f"unknown element {a!r}")
        return self._graph[a]

    def __eq__(self, other):
        if not isinstance(other, PosetMap):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and self._graph == other._graph)

    def __hash__(self):
        return hash((self.source, self.target, tuple(sorted(self._graph.items()))))

    def __repr__(self):
        return f"<PosetMap {len(self._graph)} points>"

    @cached_property
    def monotone_witness(self) -> tuple[str, str] | None:
        """First pair a <= b whose images violate the target order, or None."""
        for a in self.source.elements:
            for b in self.source.elements:
                if self.source.leq(a, b) and not self.target.leq(self._graph[a],
                                                                 self._graph[b]):
                    return (a, b)
        return None

    @property
    def is_monotone(self) -> bool:
        return self.monotone_witness is None

    def graph(self) -> dict[str, str]:
        return dict(self._graph)

    def then(self, other: "PosetMap") -> "PosetMap":
        """The composite other(self(.)); self's target must be other's source."""
        if self.target != other.source:
            raise InputError("composition mismatch: target and source posets differ")
        return PosetMap(self.source, other.target,
                        {a: other(self(a)) for a in self.source.elements},
                        check_monotone=False)

    def dual(self) -> "PosetMap":
        return PosetMap(self.source.dual(), self.target.dual(), dict(self._graph),
                        check_monotone=False)

    @classmethod
    def identity(cls, poset: Poset) -> "PosetMap":
        return cls(poset, poset, {e: e for e in poset.elements})


@dataclass(frozen=True)
class GaloisReport:
    """Outcome of an adjointness check between two poset maps.

    When the pair fails, `failed_condition` names the first failing
    characterization in diagnostic order: (2) monotonicity and the unit laws,
    (1) the defining equivalence, (3) the pointwise adjoint formulas.  The
    three are equivalent, so a sound pair passes all of them.
    """

    holds: bool
    failed_condition: int | None = None
    witness: tuple | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.holds


def is_galois_pair(f: PosetMap, g: PosetMap) -> GaloisReport:
    """Decide whether (f, g) is a residuated pair: f(a) <= b iff a <= g(b)."""
    if f.source != g.target or f.target != g.source:
        raise InputError("posets of f and g do not match up")
    A, B = f.source, f.target
    if f.monotone_witness is not None:
        return GaloisReport(False, 2, f.monotone_witness, "f is not monotone")
    if g.monotone_witness is not None:
        return GaloisReport(False, 2, g.monotone_witness, "g is not monotone")
    for a in A.elements:
        if not A.leq(a, g(f(a))):
            return GaloisReport(False, 2, (a,), "a <= g(f(a)) fails")
    for b in B.elements:
        if not B.leq(f(g(b)), b):
            return GaloisReport(False, 2, (b,), "f(g(b)) <= b fails")
    for a in A.elements:
        for b in B.elements:
            left = B.leq(f(a), b)
            if left != A.leq(a, g(b)):
                detail = ("f(a) <= b but a <= g(b) fails" if left
                          else "a <= g(b) but f(a) <= b fails")
                return GaloisReport(False, 1, (a, b), detail)
    for b in B.elements:
        lub = A.least_upper_bound([x for x in A.elements if B.leq(f(x), b)])
        if lub != g(b):
            return GaloisReport(False, 3, (b,),
                                "g(b) is not the join of all x with f(x) <= b")
    for a in A.elements:
        glb = B.greatest_lower_bound([y for y in B.elements if A.leq(a, g(y))])
        if glb != f(a):
            return GaloisReport(False, 3, (a,),
                                "f(a) is not the meet of all y with a <= g(y)")
    return GaloisReport(True)


def upper_adjoint(f: PosetMap) -> PosetMap | None:
    """Synthesize the right adjoint of f, if one exists.

    The candidate is g(b) = join of {x | f(x) <= b}, computed in f's source.
    Returns None when some join is missing or the synthesized pair fails the
    adjointness check.
    """
    if not f.is_monotone:
        raise InputError("an adjoint is only defined for a monotone map")
    graph = {}
    for b in f.target.elements:
        lub = f.source.least_upper_bound(
            [x for x in f.source.elements if f.target.leq(f(x), b)])
        if lub is None:
            return None
        graph[b] = lub
    g = PosetMap(f.target, f.source, graph, check_monotone=False)
    return g if is_galois_pair(f, g).holds else None


def lower_adjoint(g: PosetMap) -> PosetMap | None:
    """Synthesize the left adjoint of g, if one exists, via the order duals."""
    if not g.is_monotone:
        raise InputError("an adjoint is only defined for a monotone map")
    f_dual = upper_adjoint(g.dual())
    return None if f_dual is None else f_dual.dual()


def compose_galois(first: tuple[PosetMap, PosetMap],
                   second: tuple[PosetMap, PosetMap]) -> tuple[PosetMap, PosetMap]:
    """Compose two residuated pairs end to end.

    Given (f, g) between A and B and (u, v) between B and C, returns
    (u then f-side composite, g then v-side composite), i.e. (u(f(.)), g(v(.))),
    which is again a residuated pair between A and C.
    """
    f, g = first
    u, v = second
    r1 = is_galois_pair(f, g)
    if not r1:
        raise InputError(f"first pair is not a Galois connection: {r1.detail}")
    r2 = is_galois_pair(u, v)
    if not r2:
        raise InputError(f"second pair is not a Galois connection: {r2.detail}")
    if f.target != u.source:
        raise InputError("middle posets do not coincide")
    return f.then(u), v.then(g)


def is_order_reflecting_embedding(abstract: Poset, concrete: Poset,
                                  bijection: Mapping[str, str]
                                  ) -> tuple[bool, tuple[str, str] | None]:
    """Check that `bijection` carries the abstract order exactly onto the concrete one.

    True when a <= b abstractly holds exactly when the images are ordered,
    for every ordered pair; otherwise the first offending pair is returned.
    """
    if set(bijection) != set(abstract.elements):
        raise InputError("bijection is not total on the abstract poset")
    images = list(bijection.values())
    if len(set(images)) != len(images) or set(images) != set(concrete.elements):
        raise InputError("bijection is not onto the concrete poset")
    for a in abstract.elements:
        for b in abstract.elements:
            if abstract.leq(a, b) != concrete.leq(bijection[a], bijection[b]):
                return False, (a, b)
    return True, None
