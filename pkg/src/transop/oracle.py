"""Brute-force verification of the package's core laws on small instances.

Everything here is recomputed from the raw defining formulas: operator tables
by folding meets and joins over the relation, induced relations by the double
loop over state pairs and rows.  The oracle never calls the engine's
induction or fixpoint code for its ground truth, so agreement between the two
(see `verify_engine_equivalence`) is a genuine cross-check rather than the
same code run twice.

Suites are exhaustive up to three states and switch to seeded sampling at
four; anything larger is refused.  Every result line states exactly what was
swept, because a "verified" claim is only as good as its declared range.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .errors import InputError
from .frame import TransitionFrame
from .induction import induced_lower, induced_upper
from .operators import (OperatorTable, Proposition, PropositionPoset,
                        lower_operator, upper_operator, vector_name)
from .order import Lattice, Poset, PosetMap, chain2

DEFAULT_SEARCH_CAP = 5_000_000
EXHAUSTIVE_LIMIT = 3
HARD_LIMIT = 4


@dataclass(frozen=True)
class OracleConfig:
    """Verification sweep parameters.

    `poset_mode` selects the row family: "power01" for all bound-valued
    vectors, "full" for the whole vector space, "explicit" for `rows`.
    `max_states` caps full relation enumeration and may not exceed 4.
    """

    max_states: int = EXHAUSTIVE_LIMIT
    lattice: Lattice = field(default_factory=lambda: chain2)
    poset_mode: str = "power01"
    rows: tuple | None = None
    sample_count: int = 1000
    seed: int = 0
    search_cap: int = DEFAULT_SEARCH_CAP

    def __post_init__(self):
        if self.max_states > HARD_LIMIT:
            raise InputError(f"max_states may not exceed {HARD_LIMIT}")


def states_for(n: int) -> tuple[str, ...]:
    return tuple(f"s{i}" for i in range(1, n + 1))


def poset_for(config: OracleConfig, n: int) -> PropositionPoset:
    states = states_for(n)
    if config.poset_mode == "power01":
        return PropositionPoset.power01(config.lattice, states)
    if config.poset_mode == "full":
        return PropositionPoset.full_power(config.lattice, states)
    if config.poset_mode == "explicit":
        if config.rows is None:
            raise InputError("explicit poset mode needs rows")
        return PropositionPoset(config.lattice, states, config.rows)
    raise InputError(f"unknown poset mode {config.poset_mode!r}")


def mask_pairs(states: tuple[str, ...], mask: int) -> frozenset:
    n = len(states)
    return frozenset((states[i], states[j]) for i in range(n) for j in range(n)
                     if mask >> (i * n + j) & 1)


def pairs_mask(states: tuple[str, ...], pairs) -> int:
    n = len(states)
    idx = {s: i for i, s in enumerate(states)}
    out = 0
    for s, t in pairs:
        out |= 1 << (idx[s] * n + idx[t])
    return out


def enumerate_relations(n: int, max_states: int = EXHAUSTIVE_LIMIT):
    """All 2**(n*n) relations on n states, in canonical bitmask order."""
    if n > max_states:
        raise InputError(f"enumeration cap exceeded: {n} states > cap {max_states}")
    states = states_for(n)
    for mask in range(1 << (n * n)):
        yield TransitionFrame.from_mask(states, mask)


# ---------------------------------------------------------------------------
# Raw ground truth: tables and induced relations straight from the formulas.

def raw_upper_table(lattice, states, pairs, rows):
    """Row-aligned tuple of vectors: meet of the row over successors, per state."""
    idx = {s: i for i, s in enumerate(states)}
    succ: dict[str, list] = {s: [] for s in states}
    for s, t in pairs:
        succ[s].append(t)
    return tuple(
        tuple(lattice.meet(row.values[idx[u]] for u in succ[s]) for s in states)
        for row in rows)


def raw_lower_table(lattice, states, pairs, rows):
    """Row-aligned tuple of vectors: join of the row over predecessors, per state."""
    idx = {s: i for i, s in enumerate(states)}
    pred: dict[str, list] = {s: [] for s in states}
    for s, t in pairs:
        pred[t].append(s)
    return tuple(
        tuple(lattice.join(row.values[idx[u]] for u in pred[t]) for t in states)
        for row in rows)


def raw_induced_upper(lattice, states, rows, table) -> frozenset:
    """Double-loop evaluation: (s, t) related iff every row b has T(b)(s) <= b(t)."""
    pairs = set()
    for i, s in enumerate(states):
        for j, t in enumerate(states):
            if all(lattice.leq(table[k][i], rows[k].values[j])
                   for k in range(len(rows))):
                pairs.add((s, t))
    return frozenset(pairs)


def raw_induced_lower(lattice, states, rows, table) -> frozenset:
    """Double-loop evaluation: (s, t) related iff every row a has a(s) <= P(a)(t)."""
    pairs = set()
    for i, s in enumerate(states):
        for j, t in enumerate(states):
            if all(lattice.leq(rows[k].values[i], table[k][j])
                   for k in range(len(rows))):
                pairs.add((s, t))
    return frozenset(pairs)


def table_leq(t1, t2, lattice) -> bool:
    """Pointwise order between row-aligned table tuples."""
    for v1, v2 in zip(t1, t2):
        for a, b in zip(v1, v2):
            if not lattice.leq(a, b):
                return False
    return True


def table_tuple(table: OperatorTable):
    return tuple(vec for _, vec in table.items)


# ---------------------------------------------------------------------------
# Map enumeration.

def map_search_bound(poset: PropositionPoset) -> int:
    pool = len(poset.lattice) ** len(poset.states)
    return pool ** max(len(poset.rows) - 1, 0)


def _topo_rows(poset: PropositionPoset):
    remaining = list(poset.rows)
    placed = []
    placed_names: set[str] = set()
    while remaining:
        for k, p in enumerate(remaining):
            below = [q for q in poset.rows
                     if q.name != p.name and poset.vector_leq(q.values, p.values)]
            if all(q.name in placed_names for q in below):
                placed.append(p)
                placed_names.add(p.name)
                del remaining[k]
                break
    return placed


def enumerate_unit_maps(b_poset: PropositionPoset,
                        search_cap: int = DEFAULT_SEARCH_CAP):
    """Every monotone map from the rows into the vector space sending the top
    row to the constant-top vector, each exactly once, in a deterministic
    order.  Refuses up front when the search space bound exceeds the cap."""
    bound = map_search_bound(b_poset)
    if bound > search_cap:
        raise InputError(
            f"enumeration cap exceeded: about {bound} candidate assignments "
            f"> cap {search_cap}")
    lat = b_poset.lattice
    n = len(b_poset.states)
    pool = [tuple(c) for c in itertools.product(lat.elements, repeat=n)]
    top_vec = (lat.top,) * n
    order = _topo_rows(b_poset)
    below_assigned = []
    for k, p in enumerate(order):
        below_assigned.append([q.name for q in order[:k]
                               if b_poset.vector_leq(q.values, p.values)])
    assign: dict[str, tuple] = {}

    def rec(k):
        if k == len(order):
            yield OperatorTable(b_poset, dict(assign), "upper", validate=False)
            return
        p = order[k]
        if p.name == b_poset.one.name:
            candidates = [top_vec]
        else:
            candidates = [v for v in pool
                          if all(b_poset.vector_leq(assign[q], v)
                                 for q in below_assigned[k])]
        for v in candidates:
            assign[p.name] = v
            yield from rec(k + 1)
            del assign[p.name]

    yield from rec(0)


def enumerate_zero_maps(a_poset: PropositionPoset,
                        search_cap: int = DEFAULT_SEARCH_CAP):
    """Every monotone map sending the bottom row to the constant-bottom
    vector; enumerated through the order dual of `enumerate_unit_maps`."""
    for t in enumerate_unit_maps(a_poset.dual(), search_cap):
        yield OperatorTable(a_poset, {name: vec for name, vec in t.items},
                            "lower", validate=False)


# ---------------------------------------------------------------------------
# Result plumbing.

@dataclass(frozen=True)
class VerificationResult:
    suite: str
    passed: bool
    stats: str
    counterexample: str | None = None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{self.suite}: {status} ({self.stats})"


def render_relation(states, pairs) -> str:
    idx = {s: i for i, s in enumerate(states)}
    ordered = sorted(pairs, key=lambda p: (idx[p[0]], idx[p[1]]))
    if not ordered:
        return "(empty relation)"
    return "\n".join(f"rel {s} {t}" for s, t in ordered)


def render_table(rows, table, kind) -> str:
    return "\n".join(f"{kind} {row.name} = {' '.join(vec)}"
                     for row, vec in zip(rows, table))


# ---------------------------------------------------------------------------
# Suites.

def verify_theorem3(config: OracleConfig, n: int) -> VerificationResult:
    """The relation-to-upper-table assignment is left adjoint to induction:
    T_R below T in the reversed pointwise order iff R is inside the relation
    induced from T.  Exhaustive over relations and enumerable maps for up to
    three states; seeded frame-constructed sampling at four."""
    b_poset = poset_for(config, n)
    states, lat, rows = b_poset.states, b_poset.lattice, b_poset.rows
    label = f"theorem3 n={n} |B|={len(rows)}"
    if n <= EXHAUSTIVE_LIMIT:
        masks = range(1 << (n * n))
        rel = {m: mask_pairs(states, m) for m in masks}
        t_r = {m: raw_upper_table(lat, states, rel[m], rows) for m in masks}
        maps = [table_tuple(t) for t in enumerate_unit_maps(b_poset, config.search_cap)]
        induced = [raw_induced_upper(lat, states, rows, t) for t in maps]
        for m in masks:
            for k, t in enumerate(maps):
                if table_leq(t, t_r[m], lat) != (rel[m] <= induced[k]):
                    cex = (render_relation(states, rel[m]) + "\n"
                           + render_table(rows, t, "upper"))
                    return VerificationResult(label, False,
                                              "adjunction equivalence fails", cex)
        return VerificationResult(label, True,
                                  f"{len(range(1 << (n * n)))} relations, {len(maps)} maps")
    if n == HARD_LIMIT:
        rng = random.Random(config.seed)
        count = config.sample_count
        for _ in range(count):
            m = rng.getrandbits(n * n)
            m2 = rng.getrandbits(n * n)
            rel_m = mask_pairs(states, m)
            t_r = raw_upper_table(lat, states, rel_m, rows)
            t = raw_upper_table(lat, states, mask_pairs(states, m2), rows)
            ind = raw_induced_upper(lat, states, rows, t)
            if table_leq(t, t_r, lat) != (rel_m <= ind):
                cex = (render_relation(states, rel_m) + "\n"
                       + render_table(rows, t, "upper"))
                return VerificationResult(label, False,
                                          "adjunction equivalence fails", cex)
        return VerificationResult(
            label, True,
            f"sampled {count} relation/map pairs, seed={config.seed}")
    raise InputError(f"enumeration cap exceeded: {n} states > cap {HARD_LIMIT}")


def verify_theorem4(config: OracleConfig, n: int) -> VerificationResult:
    """Dual adjunction for lower tables, P_R pointwise below P iff R inside
    the induced relation, plus the reduction identity: the lower table of R
    equals the upper table of the inverse relation computed in the order-dual
    lattice."""
    a_poset = poset_for(config, n)
    states, lat, rows = a_poset.states, a_poset.lattice, a_poset.rows
    dual_rows = a_poset.dual().rows
    dual_lat = lat.dual()
    label = f"theorem4 n={n} |B|={len(rows)}"

    def dual_identity_holds(rel_pairs) -> bool:
        inverse = frozenset((t, s) for s, t in rel_pairs)
        direct = raw_lower_table(lat, states, rel_pairs, rows)
        via_dual = raw_upper_table(dual_lat, states, inverse, dual_rows)
        return direct == via_dual

    if n <= EXHAUSTIVE_LIMIT:
        masks = range(1 << (n * n))
        rel = {m: mask_pairs(states, m) for m in masks}
        p_r = {m: raw_lower_table(lat, states, rel[m], rows) for m in masks}
        for m in masks:
            if not dual_identity_holds(rel[m]):
                return VerificationResult(label, False, "dual-construction identity fails",
                                          render_relation(states, rel[m]))
        maps = [table_tuple(t) for t in enumerate_zero_maps(a_poset, config.search_cap)]
        induced = [raw_induced_lower(lat, states, rows, t) for t in maps]
        for m in masks:
            for k, t in enumerate(maps):
                if table_leq(p_r[m], t, lat) != (rel[m] <= induced[k]):
                    cex = (render_relation(states, rel[m]) + "\n"
                           + render_table(rows, t, "lower"))
                    return VerificationResult(label, False,
                                              "adjunction equivalence fails", cex)
        return VerificationResult(
            label, True,
            f"{len(range(1 << (n * n)))} relations, {len(maps)} maps, dual identity")
    if n == HARD_LIMIT:
        rng = random.Random(config.seed)
        count = config.sample_count
        for _ in range(count):
            m = rng.getrandbits(n * n)
            m2 = rng.getrandbits(n * n)
            rel_m = mask_pairs(states, m)
            if not dual_identity_holds(rel_m):
                return VerificationResult(label, False, "dual-construction identity fails",
                                          render_relation(states, rel_m))
            p_r = raw_lower_table(lat, states, rel_m, rows)
            p = raw_lower_table(lat, states, mask_pairs(states, m2), rows)
            ind = raw_induced_lower(lat, states, rows, p)
            if table_leq(p_r, p, lat) != (rel_m <= ind):
                cex = (render_relation(states, rel_m) + "\n"
                       + render_table(rows, p, "lower"))
                return VerificationResult(label, False,
                                          "adjunction equivalence fails", cex)
        return VerificationResult(
            label, True,
            f"sampled {count} relation/map pairs, seed={config.seed}, dual identity")
    raise InputError(f"enumeration cap exceeded: {n} states > cap {HARD_LIMIT}")


def verify_lemma2(config: OracleConfig, n: int) -> list[VerificationResult]:
    """The seven relation/operator laws, each reported separately:

    (a) growing the relation shrinks upper tables and grows lower tables;
    (b) shrinking an upper table (reversed order) grows its induced relation;
    (c) growing a lower table grows its induced relation;
    (d) every relation sits inside both of its induced relations;
    (e) every unit map sits below the upper table of its induced relation;
    (f) the lower table of an induced relation sits below the inducing map;
    (g) the empty and full relations are recovered exactly.
    """
    if n > EXHAUSTIVE_LIMIT:
        raise InputError(
            f"enumeration cap exceeded: exhaustive law sweep needs n <= {EXHAUSTIVE_LIMIT}")
    b_poset = poset_for(config, n)
    states, lat, rows = b_poset.states, b_poset.lattice, b_poset.rows
    prefix = f"lemma2({{}}) n={n} |B|={len(rows)}"
    masks = list(range(1 << (n * n)))
    rel = {m: mask_pairs(states, m) for m in masks}
    t_r = {m: raw_upper_table(lat, states, rel[m], rows) for m in masks}
    p_r = {m: raw_lower_table(lat, states, rel[m], rows) for m in masks}
    ind_u = {m: raw_induced_upper(lat, states, rows, t_r[m]) for m in masks}
    ind_l = {m: raw_induced_lower(lat, states, rows, p_r[m]) for m in masks}
    results = []

    # (a) antitone upper / monotone lower construction, over all subset pairs
    checked = 0
    cex = None
    for m2 in masks:
        sub = m2
        while True:
            m1 = sub
            checked += 1
            if not table_leq(t_r[m2], t_r[m1], lat) or \
                    not table_leq(p_r[m1], p_r[m2], lat):
                cex = (render_relation(states, rel[m1]) + "\n--\n"
                       + render_relation(states, rel[m2]))
                break
            if sub == 0:
                break
            sub = (sub - 1) & m2
        if cex:
            break
    results.append(VerificationResult(prefix.format("a"), cex is None,
                                      f"{checked} subset pairs", cex))

    # enumerated maps, reused by (b), (c), (e), (f) when feasible
    try:
        unit_maps = [table_tuple(t)
                     for t in enumerate_unit_maps(b_poset, config.search_cap)]
        zero_maps = [table_tuple(t)
                     for t in enumerate_zero_maps(b_poset, config.search_cap)]
    except InputError:
        unit_maps = None
        zero_maps = None

    # (b) upper induction is antitone in the table
    cex = None
    frame_pairs = 0
    for i in masks:
        for j in masks:
            if table_leq(t_r[j], t_r[i], lat):
                frame_pairs += 1
                if not (ind_u[i] <= ind_u[j]):
                    cex = (render_table(rows, t_r[i], "upper") + "\n--\n"
                           + render_table(rows, t_r[j], "upper"))
                    break
        if cex:
            break
    stats = f"{frame_pairs} frame-table pairs"
    if unit_maps is not None and not cex and len(unit_maps) ** 2 <= config.search_cap:
        ind_by_map = [raw_induced_upper(lat, states, rows, t) for t in unit_maps]
        map_pairs = 0
        for i, t1 in enumerate(unit_maps):
            for j, t2 in enumerate(unit_maps):
                if table_leq(t2, t1, lat):
                    map_pairs += 1
                    if not (ind_by_map[i] <= ind_by_map[j]):
                        cex = (render_table(rows, t1, "upper") + "\n--\n"
                               + render_table(rows, t2, "upper"))
                        break
            if cex:
                break
        stats += f", {map_pairs} enumerated-map pairs"
    results.append(VerificationResult(prefix.format("b"), cex is None, stats, cex))

    # (c) lower induction is monotone in the table
    cex = None
    frame_pairs = 0
    for i in masks:
        for j in masks:
            if table_leq(p_r[i], p_r[j], lat):
                frame_pairs += 1
                if not (ind_l[i] <= ind_l[j]):
                    cex = (render_table(rows, p_r[i], "lower") + "\n--\n"
                           + render_table(rows, p_r[j], "lower"))
                    break
        if cex:
            break
    stats = f"{frame_pairs} frame-table pairs"
    if zero_maps is not None and not cex and len(zero_maps) ** 2 <= config.search_cap:
        ind_by_map = [raw_induced_lower(lat, states, rows, t) for t in zero_maps]
        map_pairs = 0
        for i, t1 in enumerate(zero_maps):
            for j, t2 in enumerate(zero_maps):
                if table_leq(t1, t2, lat):
                    map_pairs += 1
                    if not (ind_by_map[i] <= ind_by_map[j]):
                        cex = (render_table(rows, t1, "lower") + "\n--\n"
                               + render_table(rows, t2, "lower"))
                        break
            if cex:
                break
        stats += f", {map_pairs} enumerated-map pairs"
    results.append(VerificationResult(prefix.format("c"), cex is None, stats, cex))

    # (d) extensivity of both inductions
    cex = None
    for m in masks:
        if not (rel[m] <= ind_u[m] and rel[m] <= ind_l[m]):
            cex = render_relation(states, rel[m])
            break
    results.append(VerificationResult(prefix.format("d"), cex is None,
                                      f"{len(masks)} relations", cex))

    # (e) every unit map is dominated by the table of its induced relation
    cex = None
    if unit_maps is not None:
        for t in unit_maps:
            rt = raw_induced_upper(lat, states, rows, t)
            if not table_leq(t, raw_upper_table(lat, states, rt, rows), lat):
                cex = render_table(rows, t, "upper")
                break
        stats = f"{len(unit_maps)} enumerated maps"
    else:
        for m in masks:
            t = t_r[m]
            rt = raw_induced_upper(lat, states, rows, t)
            if not table_leq(t, raw_upper_table(lat, states, rt, rows), lat):
                cex = render_table(rows, t, "upper")
                break
        stats = f"{len(masks)} frame-constructed maps"
    results.append(VerificationResult(prefix.format("e"), cex is None, stats, cex))

    # (f) the table of an induced relation is dominated by the inducing map
    cex = None
    if zero_maps is not None:
        for t in zero_maps:
            rp = raw_induced_lower(lat, states, rows, t)
            if not table_leq(raw_lower_table(lat, states, rp, rows), t, lat):
                cex = render_table(rows, t, "lower")
                break
        stats = f"{len(zero_maps)} enumerated maps"
    else:
        for m in masks:
            t = p_r[m]
            rp = raw_induced_lower(lat, states, rows, t)
            if not table_leq(raw_lower_table(lat, states, rp, rows), t, lat):
                cex = render_table(rows, t, "lower")
                break
        stats = f"{len(masks)} frame-constructed maps"
    results.append(VerificationResult(prefix.format("f"), cex is None, stats, cex))

    # (g) extremal relations are recovered exactly
    full_mask = (1 << (n * n)) - 1
    ok = (ind_u[full_mask] == rel[full_mask] and ind_u[0] == frozenset()
          and ind_l[full_mask] == rel[full_mask] and ind_l[0] == frozenset())
    results.append(VerificationResult(prefix.format("g"), ok,
                                      "2 extremal relations",
                                      None if ok else "extremal recovery failed"))
    return results


def verify_engine_equivalence(config: OracleConfig, n: int = 4,
                              count: int | None = None) -> VerificationResult:
    """Engine-computed induced relations against the raw double-loop, on
    seeded random frames and row families."""
    rng = random.Random(config.seed)
    count = count or config.sample_count
    states = states_for(n)
    lat = config.lattice
    all01 = list(itertools.product((lat.bottom, lat.top), repeat=n))
    middle = all01[1:-1]
    label = f"engine-equivalence n={n}"
    for _ in range(count):
        extras = rng.sample(middle, rng.randint(0, len(middle)))
        vecs = sorted({all01[0], all01[-1], *extras})
        poset = PropositionPoset(lat, states,
                                 [Proposition(vector_name(lat, v), v) for v in vecs])
        frame = TransitionFrame.from_mask(states, rng.getrandbits(n * n))
        engine_u = induced_upper(upper_operator(frame, poset)).pairs
        raw_u = raw_induced_upper(lat, states, poset.rows,
                                  raw_upper_table(lat, states, frame.pairs, poset.rows))
        engine_l = induced_lower(lower_operator(frame, poset)).pairs
        raw_l = raw_induced_lower(lat, states, poset.rows,
                                  raw_lower_table(lat, states, frame.pairs, poset.rows))
        if engine_u != raw_u or engine_l != raw_l:
            cex = render_relation(states, frame.pairs)
            return VerificationResult(label, False, "engine and oracle disagree", cex)
    return VerificationResult(label, True,
                              f"{count} seeded instances, seed={config.seed}")


def materialize_upper_connection(b_poset: PropositionPoset,
                                 search_cap: int = DEFAULT_SEARCH_CAP
                                 ) -> tuple[PosetMap, PosetMap]:
    """The relation poset and the unit-map poset as explicit finite posets,
    with the table-construction and induction assignments as poset maps.
    Feasible only at desk scale; used to feed the generic adjointness check."""
    states = b_poset.states
    lat = b_poset.lattice
    rows = b_poset.rows
    n = len(states)
    masks = list(range(1 << (n * n)))
    rel_names = [f"R{m}" for m in masks]
    rel_poset = Poset(rel_names,
                      ((f"R{a}", f"R{b}") for a in masks for b in masks
                       if a & ~b == 0),
                      name="relations")
    tables = [table_tuple(t) for t in enumerate_unit_maps(b_poset, search_cap)]
    map_names = [f"T{k}" for k in range(len(tables))]
    map_poset = Poset(map_names,
                      ((map_names[i], map_names[j])
                       for i in range(len(tables)) for j in range(len(tables))
                       if table_leq(tables[j], tables[i], lat)),
                      name="unit maps")
    by_table = {t: name for t, name in zip(tables, map_names)}
    phi = PosetMap(rel_poset, map_poset,
                   {f"R{m}": by_table[raw_upper_table(lat, states,
                                                      mask_pairs(states, m), rows)]
                    for m in masks})
    psi = PosetMap(map_poset, rel_poset,
                   {map_names[k]: f"R{pairs_mask(states, raw_induced_upper(lat, states, rows, tables[k]))}"
                    for k in range(len(tables))})
    return phi, psi


def run_suites(config: OracleConfig, n: int, which: str) -> list[VerificationResult]:
    """Dispatch for the CLI: one result per suite, lemma2 one per clause."""
    if which == "theorem3":
        return [verify_theorem3(config, n)]
    if which == "theorem4":
        return [verify_theorem4(config, n)]
    if which == "lemma2":
        return verify_lemma2(config, n)
    if which == "all":
        out = [verify_theorem3(config, n), verify_theorem4(config, n)]
        out.extend(verify_lemma2(config, n))
        return out
    raise InputError(f"unknown suite {which!r}")
