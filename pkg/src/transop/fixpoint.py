"""Closure iteration of relation -> induced relation and fixpoint enumeration.

One step replaces the relation by the one induced from its upper or lower
table.  Each step can only add pairs, so every schedule terminates within
|S| squared productive steps; a schedule has converged once a full cycle of
its step kinds leaves the relation unchanged.  A single unchanged step is not
enough under alternation: a relation can be fixed for one side and not the
other.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .frame import TransitionFrame
from .induction import induced_lower, induced_upper
from .operators import OperatorTable, PropositionPoset, lower_operator, upper_operator

SCHEDULES = ("alternating", "upper", "lower")


def step(frame: TransitionFrame, a_poset: PropositionPoset,
         b_poset: PropositionPoset, kind: str) -> TransitionFrame:
    """Induce a new relation from one side's table of the current frame."""
    if kind == "upper":
        return induced_upper(upper_operator(frame, b_poset))
    if kind == "lower":
        return induced_lower(lower_operator(frame, a_poset))
    raise InputError(f"unknown step kind {kind!r}")


@dataclass(frozen=True)
class StepRecord:
    kind: str
    table: OperatorTable  # the operator the step inducted from
    relation: TransitionFrame  # the relation after the step
    added: frozenset


@dataclass(frozen=True)
class IterationTrace:
    initial: TransitionFrame
    steps: tuple[StepRecord, ...]
    converged: bool

    @property
    def relations(self) -> tuple[TransitionFrame, ...]:
        return (self.initial,) + tuple(s.relation for s in self.steps)

    @property
    def schedule(self) -> tuple[str, ...]:
        return tuple(s.kind for s in self.steps)

    @property
    def operators(self) -> tuple[OperatorTable, ...]:
        return tuple(s.table for s in self.steps)

    @property
    def steps_taken(self) -> int:
        return len(self.steps)

    @property
    def productive_steps(self) -> int:
        return sum(1 for s in self.steps if s.added)

    @property
    def final(self) -> TransitionFrame:
        return self.steps[-1].relation if self.steps else self.initial


def iterate(frame: TransitionFrame, a_poset: PropositionPoset,
            b_poset: PropositionPoset, schedule: str = "alternating",
            first: str = "upper", max_steps: int | None = None) -> IterationTrace:
    """Apply induction steps until a full cycle leaves the relation fixed.

    `schedule` is "alternating", "upper", or "lower"; under alternation
    `first` picks the side applied first, and the two orders may pass through
    different intermediate relations.  Non-convergence within `max_steps`
    (default |S| squared plus two) is reported in the trace, not raised.
    """
    if schedule not in SCHEDULES:
        raise InputError(f"unknown schedule {schedule!r}")
    if first not in ("upper", "lower"):
        raise InputError(f"unknown step kind {first!r}")
    n = len(frame.states)
    if max_steps is None:
        max_steps = n * n + 2
    if max_steps < 1:
        raise InputError("max_steps must be at least 1")
    if schedule == "alternating":
        cycle = (first, "lower" if first == "upper" else "upper")
    else:
        cycle = (schedule,)
    current = frame
    steps: list[StepRecord] = []
    unchanged_streak = 0
    while len(steps) < max_steps and unchanged_streak < len(cycle):
        kind = cycle[len(steps) % len(cycle)]
        if kind == "upper":
            table = upper_operator(current, b_poset)
            new = induced_upper(table)
        else:
            table = lower_operator(current, a_poset)
            new = induced_lower(table)
        added = new.pairs - current.pairs
        assert current.pairs <= new.pairs, "induction step lost pairs"
        steps.append(StepRecord(kind, table, new, frozenset(added)))
        unchanged_streak = 0 if added else unchanged_streak + 1
        current = new
    trace = IterationTrace(frame, tuple(steps), unchanged_streak >= len(cycle))
    assert trace.productive_steps <= n * n, "more productive steps than pairs"
    return trace


def enumerate_fixpoints(states, a_poset: PropositionPoset,
                        b_poset: PropositionPoset, kind: str = "upper",
                        cap: int = 3) -> list[TransitionFrame]:
    """All relations unchanged by one induction step, in canonical mask order.

    Exhausts the full relation space, so the state count is capped; raise the
    cap explicitly if you can afford 2**(n*n) steps.
    """
    states = tuple(states)
    n = len(states)
    if n > cap:
        raise InputError(f"enumeration cap exceeded: {n} states > cap {cap}")
    out = []
    for mask in range(1 << (n * n)):
        frame = TransitionFrame.from_mask(states, mask)
        if step(frame, a_poset, b_poset, kind).pairs == frame.pairs:
            out.append(frame)
    return out
