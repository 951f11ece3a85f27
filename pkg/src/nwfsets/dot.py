"""Graphviz export of a node's membership graph."""
from __future__ import annotations

from . import kernels
from .serial import render, serialize
from .system import SetSystem

LABEL_LIMIT = 40


def _label(sys: SetSystem, n: int) -> str:
    text = render(sys, n)
    if len(text) > LABEL_LIMIT:
        text = text[: LABEL_LIMIT - 3] + "..."
    return text.replace("\\", "\\\\").replace('"', '\\"')


def export_dot(sys: SetSystem, s: int) -> str:
    """Digraph of everything reachable from s; edges inside a membership cycle are dashed."""
    reach = sys.reachable(s)
    order = sorted(reach, key=lambda v: (len(serialize(sys, v)), serialize(sys, v)))
    local = {v: i for i, v in enumerate(order)}
    indptr = [0]
    indices: list[int] = []
    for v in order:
        indices.extend(local[w] for w in sys.members(v))
        indptr.append(len(indices))
    comp = kernels.scc(indptr, indices)
    lines = ["digraph membership {", "  rankdir=TB;", "  node [shape=circle];"]
    for v in order:
        shape = ", shape=doublecircle" if v == s else ""
        lines.append(f'  n{local[v]} [label="{_label(sys, v)}"{shape}];')
    for v in order:
        for w in sorted(sys.members(v), key=lambda x: local[x]):
            style = " [style=dashed]" if comp[local[v]] == comp[local[w]] else ""
            lines.append(f"  n{local[v]} -> n{local[w]}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"
