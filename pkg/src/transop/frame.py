"""Transition frames: a finite ordered state set with a transition relation."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import InputError


class TransitionFrame:
    """States in declaration order plus a set of ordered transition pairs.

    Self-loops and states with no incoming or outgoing pair are permitted.
    Immutable after construction.
    """

    def __init__(self, states: Iterable[str], pairs: Iterable[tuple[str, str]] = ()):
        states = tuple(states)
        if not states:
            raise InputError("a frame needs at least one state")
        if len(set(states)) != len(states):
            raise InputError("duplicate state identifiers")
        self.states = states
        self._index = {s: i for i, s in enumerate(states)}
        rel = set()
        for s, t in pairs:
            self._check_state(s)
            self._check_state(t)
            rel.add((s, t))
        self.pairs = frozenset(rel)
        succ: dict[str, set[str]] = {s: set() for s in states}
        pred: dict[str, set[str]] = {s: set() for s in states}
        for s, t in self.pairs:
            succ[s].add(t)
            pred[t].add(s)
        self._succ = {s: frozenset(v) for s, v in succ.items()}
        self._pred = {s: frozenset(v) for s, v in pred.items()}

    def _check_state(self, s) -> None:
        if s not in self._index:
            raise InputError(f"unknown state {s}")

    def __eq__(self, other):
        if not isinstance(other, TransitionFrame):
            return NotImplemented
        return self.states == other.states and self.pairs == other.pairs

    def __hash__(self):
        return hash((self.states, self.pairs))

    def __repr__(self):
        return f"<TransitionFrame {len(self.states)} states, {len(self.pairs)} pairs>"

    @classmethod
    def empty(cls, states) -> "TransitionFrame":
        return cls(states)

    @classmethod
    def full(cls, states) -> "TransitionFrame":
        states = tuple(states)
        return cls(states, ((s, t) for s in states for t in states))

    @classmethod
    def from_mask(cls, states, mask: int) -> "TransitionFrame":
        """Decode a relation from a bitmask: bit i*n + j holds pair (states[i], states[j])."""
        states = tuple(states)
        n = len(states)
        if mask < 0 or mask >= 1 << (n * n):
            raise InputError(f"mask out of range for {n} states")
        pairs = [(states[i], states[j]) for i in range(n) for j in range(n)
                 if mask >> (i * n + j) & 1]
        return cls(states, pairs)

    @property
    def mask(self) -> int:
        n = len(self.states)
        out = 0
        for s, t in self.pairs:
            out |= 1 << (self._index[s] * n + self._index[t])
        return out

    def index(self, s) -> int:
        self._check_state(s)
        return self._index[s]

    def successors(self, s) -> frozenset:
        self._check_state(s)
        return self._succ[s]

    def predecessors(self, t) -> frozenset:
        self._check_state(t)
        return self._pred[t]

    def inverse(self) -> "TransitionFrame":
        return TransitionFrame(self.states, ((t, s) for (s, t) in self.pairs))

    def with_pairs(self, pairs) -> "TransitionFrame":
        return TransitionFrame(self.states, pairs)

    def sorted_pairs(self) -> tuple[tuple[str, str], ...]:
        """All pairs ordered by state declaration indices; used for rendering."""
        return tuple(sorted(self.pairs,
                            key=lambda p: (self._index[p[0]], self._index[p[1]])))


@dataclass(frozen=True)
class RelationDelta:
    """Symmetric difference between two relations on the same state set."""

    added: frozenset
    removed: frozenset

    def __post_init__(self):
        if self.added & self.removed:
            raise InputError("a pair cannot be both added and removed")

    @property
    def is_empty(self) -> bool:
        return not self.added and not self.removed


def relation_compare(r1: TransitionFrame, r2: TransitionFrame
                     ) -> tuple[str, RelationDelta]:
    """Classify r1 against r2 under inclusion.

    Returns one of "equal", "subset" (r1 strictly below r2), "superset", or
    "incomparable", together with the delta turning r1 into r2.
    """
    if r1.states != r2.states:
        raise InputError("state sets differ")
    added = r2.pairs - r1.pairs
    removed = r1.pairs - r2.pairs
    if not added and not removed:
        verdict = "equal"
    elif not removed:
        verdict = "subset"
    elif not added:
        verdict = "superset"
    else:
        verdict = "incomparable"
    return verdict, RelationDelta(frozenset(added), frozenset(removed))
