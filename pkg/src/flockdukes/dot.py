"""Graphviz export: one shaded cluster per flock."""

from __future__ import annotations

from .dukes import DukeProfile
from .graph import MultiFlockGraph


def to_dot(g: MultiFlockGraph, annotations: DukeProfile | None = None, name: str = "flocks") -> str:
    """DOT text for ``g``.

    With ``annotations``, each node label is the least m for which the chicken
    is an m-Duke, or ``-`` when it is not one for any m up to ``max_m``.
    """
    out = [f"digraph {name} {{"]
    for f in range(g.num_flocks):
        out.append(f"  subgraph cluster_{f} {{")
        out.append(f'    label="flock {f}"; style=filled; color=lightgrey;')
        for c in g.chickens(f):
            if annotations is None:
                label = str(c)
            else:
                m = annotations.least_duke_level(c)
                label = "-" if m is None else str(m)
            out.append(f'    c{c} [label="{label}", style=filled, fillcolor=white];')
        out.append("  }")
    for u, v in g.arcs():
        out.append(f"  c{u} -> c{v};")
    out.append("}")
    return "\n".join(out) + "\n"
