"""Reading and writing system descriptions.

The format is line-oriented UTF-8 with `#` comments:

    system <name>
    lattice chain2            # or an inline block, see below
    states s1 s2 ... sn
    prop <name> = <v1> ... <vn>
    rel si sj
    posetA <name> <name> ...  # optional second row family
    hasse <p> <q>             # optional cover pairs for cross-validation

A custom lattice block replaces the `lattice chain2` line:

    lattice <name>
    elements e1 e2 ...
    bottom e
    top e
    cover ei ej

Proposition values are lattice element names in state order, so a table of
two-valued rows reads exactly like a 0/1 truth table.  The full row family is
the B side of the system; `posetA` selects a sub-family used as the A side
(default: A is B).  When a `hasse` block is present, its cover pairs must
generate exactly the pointwise order of the rows.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .errors import InputError, ParseError
from .frame import TransitionFrame
from .operators import PropositionPoset
from .order import Lattice, Poset, chain2, is_order_reflecting_embedding

_DIRECTIVES = ("system", "lattice", "elements", "bottom", "top", "cover",
               "states", "prop", "rel", "posetA", "hasse")


@dataclass(frozen=True)
class SystemDescription:
    """A validated system: lattice, state set, row families, and relation."""

    name: str
    lattice: Lattice
    propositions: PropositionPoset
    poset_a: PropositionPoset
    frame: TransitionFrame
    hasse: frozenset | None

    @property
    def states(self) -> tuple[str, ...]:
        return self.frame.states


def parse_system(text: str) -> SystemDescription:
    """Parse and fully validate a system description."""
    name = None
    lattice_name = None
    lattice_line = None
    elements = None
    bottom = None
    top = None
    covers: list[tuple[str, str]] = []
    states = None
    states_line = None
    props: list[tuple[int, str, tuple[str, ...]]] = []
    rels: list[tuple[int, str, str]] = []
    poset_a_names: list[str] = []
    hasse: list[tuple[int, str, str]] = []

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        kw = tok[0]
        if kw == "system":
            if len(tok) != 2:
                raise ParseError("expected: system <name>", lineno)
            if name is not None:
                raise ParseError("system already declared", lineno)
            name = tok[1]
        elif kw == "lattice":
            if len(tok) != 2:
                raise ParseError("expected: lattice <name>", lineno)
            if lattice_name is not None:
                raise ParseError("lattice already declared", lineno)
            lattice_name = tok[1]
            lattice_line = lineno
        elif kw == "elements":
            if len(tok) < 2:
                raise ParseError("expected: elements e1 e2 ...", lineno)
            if elements is not None:
                raise ParseError("elements already declared", lineno)
            elements = tuple(tok[1:])
        elif kw == "bottom":
            if len(tok) != 2:
                raise ParseError("expected: bottom <element>", lineno)
            bottom = tok[1]
        elif kw == "top":
            if len(tok) != 2:
                raise ParseError("expected: top <element>", lineno)
            top = tok[1]
        elif kw == "cover":
            if len(tok) != 3:
                raise ParseError("expected: cover <lower> <upper>", lineno)
            covers.append((tok[1], tok[2]))
        elif kw == "states":
            if len(tok) < 2:
                raise ParseError("expected: states s1 s2 ...", lineno)
            if states is not None:
                raise ParseError("states already declared", lineno)
            states = tuple(tok[1:])
            states_line = lineno
        elif kw == "prop":
            if len(tok) < 4 or tok[2] != "=":
                raise ParseError("expected: prop <name> = <v1> ... <vn>", lineno)
            props.append((lineno, tok[1], tuple(tok[3:])))
        elif kw == "rel":
            if len(tok) != 3:
                raise ParseError("expected: rel <from> <to>", lineno)
            rels.append((lineno, tok[1], tok[2]))
        elif kw == "posetA":
            if len(tok) < 2:
                raise ParseError("expected: posetA <name> ...", lineno)
            poset_a_names.extend(tok[1:])
        elif kw == "hasse":
            if len(tok) != 3:
                raise ParseError("expected: hasse <lower> <upper>", lineno)
            hasse.append((lineno, tok[1], tok[2]))
        else:
            raise ParseError(f"unknown directive {kw!r}", lineno)

    if name is None:
        raise ParseError("missing system line")
    if lattice_name is None:
        raise ParseError("missing lattice line")
    if lattice_name == chain2.name:
        if elements is not None or covers or bottom is not None or top is not None:
            raise ParseError(f"{chain2.name} is predefined and takes no lattice block",
                             lattice_line)
        lattice = chain2
    else:
        if elements is None or bottom is None or top is None:
            raise ParseError(f"custom lattice {lattice_name} needs elements, bottom "
                             f"and top lines", lattice_line)
        try:
            lattice = Lattice(lattice_name, elements, bottom, top, covers)
        except InputError as exc:
            raise ParseError(str(exc), lattice_line) from exc
    if states is None:
        raise ParseError("missing states line")
    if len(set(states)) != len(states):
        raise ParseError("duplicate state identifiers", states_line)

    rows = []
    for lineno, pname, values in props:
        if len(values) != len(states):
            raise ParseError(f"prop {pname}: expected {len(states)} values, "
                             f"got {len(values)}", lineno)
        for v in values:
            if v not in lattice:
                raise ParseError(f"prop {pname}: unknown lattice element {v}", lineno)
        rows.append((pname, values))
    try:
        propositions = PropositionPoset(lattice, states, rows)
    except InputError as exc:
        raise ParseError(str(exc)) from exc

    pairs = []
    state_set = set(states)
    for lineno, s, t in rels:
        for x in (s, t):
            if x not in state_set:
                raise ParseError(f"unknown state {x}", lineno)
        pairs.append((s, t))
    frame = TransitionFrame(states, pairs)

    if poset_a_names:
        for n in poset_a_names:
            if n not in propositions.names():
                raise ParseError(f"posetA: unknown proposition {n}")
        try:
            poset_a = propositions.subset(poset_a_names)
        except InputError as exc:
            raise ParseError(f"posetA: {exc}") from exc
    else:
        poset_a = propositions

    hasse_covers = None
    if hasse:
        row_names = propositions.names()
        for lineno, a, b in hasse:
            for x in (a, b):
                if x not in row_names:
                    raise ParseError(f"hasse: unknown proposition {x}", lineno)
        try:
            abstract = Poset(row_names, [(a, b) for _, a, b in hasse])
        except InputError as exc:
            raise ParseError(f"hasse: {exc}") from exc
        ok, witness = is_order_reflecting_embedding(
            abstract, propositions.order_poset,
            {n: n for n in row_names})
        if not ok:
            raise ParseError(
                f"hasse block does not match the pointwise order at rows "
                f"{witness[0]} and {witness[1]}")
        hasse_covers = frozenset(abstract.covers())

    return SystemDescription(name, lattice, propositions, poset_a, frame,
                             hasse_covers)


def render_system(desc: SystemDescription) -> str:
    """Canonical text for a system; `parse_system` is a left inverse."""
    lines = [f"system {desc.name}"]
    if desc.lattice == chain2:
        lines.append(f"lattice {chain2.name}")
    else:
        lat = desc.lattice
        lines.append(f"lattice {lat.name}")
        lines.append(f"elements {' '.join(lat.elements)}")
        lines.append(f"bottom {lat.bottom}")
        lines.append(f"top {lat.top}")
        for a, b in sorted(lat.covers(), key=lambda c: (lat.index(c[0]), lat.index(c[1]))):
            lines.append(f"cover {a} {b}")
    lines.append(f"states {' '.join(desc.states)}")
    for p in desc.propositions.rows:
        lines.append(f"prop {p.name} = {' '.join(p.values)}")
    for s, t in desc.frame.sorted_pairs():
        lines.append(f"rel {s} {t}")
    if desc.poset_a != desc.propositions:
        lines.append(f"posetA {' '.join(desc.poset_a.names())}")
    if desc.hasse is not None:
        order = {n: i for i, n in enumerate(desc.propositions.names())}
        for a, b in sorted(desc.hasse, key=lambda c: (order[c[0]], order[c[1]])):
            lines.append(f"hasse {a} {b}")
    return "\n".join(lines) + "\n"


def load_system(path) -> SystemDescription:
    return parse_system(Path(path).read_text(encoding="utf-8"))


def fixture_path(name: str) -> Path:
    """Path of a bundled example system (firefly.system and friends)."""
    from importlib import resources

    path = Path(str(resources.files("transop").joinpath("data", name)))
    if not path.exists():
        raise InputError(f"no bundled fixture named {name}")
    return path
