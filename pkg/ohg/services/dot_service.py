"""
DOT export of the incidence graph.

Vertices are circles, edges are boxes; every incidence is one arc labelled
with its slot. A +1 incidence points into its vertex, a -1 incidence points
out of it. Node and arc order follow G's declaration order.
"""
from typing import List

from ohg.models.hypergraph import OrientedHypergraph


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def vertex_node(v: str) -> str:
    return _quote(f"v:{v}")


def edge_node(e: str) -> str:
    return _quote(f"e:{e}")


def dot_export(G: OrientedHypergraph, name: str = "incidence") -> str:
    lines: List[str] = [f"digraph {_quote(name) if name != 'incidence' else name} {{"]
    for v in G.vertices:
        lines.append(f"  {vertex_node(v)} [shape=circle, label={_quote(v)}];")
    for e in G.edges:
        lines.append(f"  {edge_node(e)} [shape=box, label={_quote(e)}];")
    for inc in G.incidences:
        if inc.sign > 0:
            tail, head = edge_node(inc.edge), vertex_node(inc.vertex)
        else:
            tail, head = vertex_node(inc.vertex), edge_node(inc.edge)
        lines.append(f"  {tail} -> {head} [label=\"{inc.slot}\"];")
    lines.append("}")
    return "\n".join(lines) + "\n"
