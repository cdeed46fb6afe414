"""DOT text emission for relations, row orders, and operator tables.

Output is byte-deterministic: nodes appear in declaration order, edges sorted
by declaration indices.
"""

from __future__ import annotations

from .frame import TransitionFrame
from .operators import OperatorTable, PropositionPoset


def relation_dot(frame: TransitionFrame, name: str = "relation") -> str:
    lines = [f'digraph "{name}" {{', "  rankdir=LR;"]
    for s in frame.states:
        lines.append(f'  "{s}";')
    for s, t in frame.sorted_pairs():
        lines.append(f'  "{s}" -> "{t}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def hasse_dot(poset: PropositionPoset, name: str = "hasse") -> str:
    """Cover edges of the pointwise row order, drawn bottom-up."""
    order = poset.order_poset
    idx = {n: i for i, n in enumerate(order.elements)}
    lines = [f'digraph "{name}" {{', "  rankdir=BT;"]
    for n in order.elements:
        lines.append(f'  "{n}";')
    for a, b in sorted(order.covers(), key=lambda c: (idx[c[0]], idx[c[1]])):
        lines.append(f'  "{a}" -> "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def operator_dot(table: OperatorTable, name: str | None = None) -> str:
    """Each row points at its entry; entries matching a row reuse its node."""
    name = name or f"{table.kind}_operator"
    lines = [f'digraph "{name}" {{', "  rankdir=LR;"]
    for p in table.domain.rows:
        lines.append(f'  "{p.name}";')
    seen = []
    edges = []
    for row, vec, match in table.named_entries():
        if match is not None:
            edges.append((row, match))
        else:
            label = " ".join(vec)
            if label not in seen:
                seen.append(label)
            edges.append((row, label))
    for label in seen:
        lines.append(f'  "{label}" [shape=box];')
    for a, b in edges:
        lines.append(f'  "{a}" -> "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
