"""Hasse diagrams as Graphviz DOT text.

Nodes are labelled by element names, edges are covering pairs drawn
upwards (``rankdir=BT``) and elements of equal height share a rank.
"""

from __future__ import annotations

from typing import Iterable


def _quote(s: str) -> str:
    return '"' + str(s).replace("\\", "\\\\").replace('"', '\\"') + '"'


def hasse_dot(A, title: str | None = None, highlight: Iterable[int] = ()) -> str:
    """DOT source for the order of ``A`` (a lattice or anything with
    ``.lattice``); ``highlight`` elements are drawn boxed."""
    L = getattr(A, "lattice", A)
    title = title or getattr(A, "name", None) or "hasse"
    marked = set(highlight)
    out = [f"digraph {_quote(title)} {{", "  rankdir=BT;", '  node [shape=plaintext, fontname="Helvetica"];']
    for x, nm in enumerate(L.names):
        attrs = f"label={_quote(nm)}"
        if x in marked:
            attrs += ", shape=box"
        out.append(f"  n{x} [{attrs}];")
    levels: dict[int, list[int]] = {}
    for x, h in enumerate(L.heights()):
        levels.setdefault(h, []).append(x)
    for h in sorted(levels):
        if len(levels[h]) > 1:
            out.append("  { rank=same; " + " ".join(f"n{x};" for x in levels[h]) + " }")
    for a, b in L.covers():
        out.append(f"  n{a} -> n{b} [arrowhead=none];")
    out.append("}")
    return "\n".join(out) + "\n"


def srl_dot(S, title: str | None = None) -> str:
    """Hasse diagram of an sr-lattice with ``D`` boxed."""
    return hasse_dot(S, title, S.d_set)
