"""
Structure-preserving operations: deletion, breaking, switching, 2-contractions
and subdivision. Inputs are never modified; each operation builds a new value.
"""
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import networkx as nx

from ohg.models.errors import (
    BadBipartition,
    InvalidSign,
    LoopEdge,
    NotA2Edge,
    NotDegree2,
    SameEdge,
    TransformError,
    UnknownId,
)
from ohg.models.hypergraph import Incidence, IncidenceKey, OrientedHypergraph, build, has_mixed_signs
from ohg.models.results import COMPATIBLE, INCOMPATIBLE, SubdivisionResult
from ohg.services.hypergraph_service import incidence_dual, incidence_network
from ohg.services.structure_service import is_artery

Target = Union[str, IncidenceKey]

# (vertex, edge, sign, rank); slots are reassigned per pair in rank order
_Draft = Tuple[str, str, int, Tuple[int, int]]


def _assemble(
    vertices: Sequence[str],
    edges: Sequence[str],
    drafts: Sequence[_Draft],
    strict: bool,
) -> OrientedHypergraph:
    """
    Renumber slots and build. A result that puts both signs on one pair is
    returned non-strict even when the input was strict.
    """
    ranks: Dict[Tuple[str, str], List[Tuple[int, int]]] = {}
    for vertex, edge, _, rank in drafts:
        ranks.setdefault((vertex, edge), []).append(rank)
    slot_of = {
        (pair, rank): position + 1
        for pair, used in ranks.items()
        for position, rank in enumerate(sorted(used))
    }
    incidences = [
        Incidence(vertex, edge, slot_of[((vertex, edge), rank)], sign)
        for vertex, edge, sign, rank in drafts
    ]
    return build(vertices, edges, incidences, strict=strict and not has_mixed_signs(incidences))


def _drafts(incidences: Iterable[Incidence]) -> List[_Draft]:
    return [(inc.vertex, inc.edge, inc.sign, (0, inc.slot)) for inc in incidences]


def break_incidences(G: OrientedHypergraph, keys: Iterable[IncidenceKey]) -> OrientedHypergraph:
    """Remove several incidences at once; the remaining slots of each pair are renumbered 1..n."""
    doomed = {tuple(key) for key in keys}
    for key in doomed:
        if not G.has_incidence(key):  # type: ignore[arg-type]
            raise UnknownId(f"unknown incidence {key!r}")
    kept = [inc for inc in G.incidences if inc.key not in doomed]
    return _assemble(G.vertices, G.edges, _drafts(kept), G.strict)


def weak_delete(G: OrientedHypergraph, target: Target) -> OrientedHypergraph:
    """
    Weak deletion of a vertex, an edge or a single incidence.

    Deleting a vertex (edge) removes it with its incidences and leaves the
    edges (vertices) it met in place. Deleting an incidence breaks it.
    """
    if isinstance(target, tuple):
        return break_incidences(G, [target])
    if G.has_vertex(target):
        return build(
            [v for v in G.vertices if v != target],
            G.edges,
            [inc for inc in G.incidences if inc.vertex != target],
            strict=G.strict,
        )
    if G.has_edge(target):
        return build(
            G.vertices,
            [e for e in G.edges if e != target],
            [inc for inc in G.incidences if inc.edge != target],
            strict=G.strict,
        )
    raise UnknownId(f"unknown id {target!r}")


def strong_delete(G: OrientedHypergraph, target: str) -> OrientedHypergraph:
    """Strong deletion: a vertex goes with every edge it meets; an edge with every vertex it contains."""
    if G.has_vertex(target):
        doomed = {inc.edge for inc in G.incidences_at(target)}
        return build(
            [v for v in G.vertices if v != target],
            [e for e in G.edges if e not in doomed],
            [inc for inc in G.incidences if inc.vertex != target and inc.edge not in doomed],
            strict=G.strict,
        )
    if G.has_edge(target):
        doomed = {inc.vertex for inc in G.incidences_of(target)}
        return build(
            [v for v in G.vertices if v not in doomed],
            [e for e in G.edges if e != target],
            [inc for inc in G.incidences if inc.edge != target and inc.vertex not in doomed],
            strict=G.strict,
        )
    raise UnknownId(f"unknown id {target!r}")


def switch(G: OrientedHypergraph, theta: Mapping[str, int]) -> OrientedHypergraph:
    """sigma'(v,e,k) = theta(v) * sigma(v,e,k) * theta(e); unlisted ids count as +1."""
    for ident, value in theta.items():
        if not G.has_vertex(ident) and not G.has_edge(ident):
            raise UnknownId(f"unknown id {ident!r}")
        if value not in (1, -1):
            raise InvalidSign(f"switching value for {ident!r} must be +1 or -1, got {value!r}")
    return build(
        G.vertices,
        G.edges,
        [inc.with_sign(theta.get(inc.vertex, 1) * inc.sign * theta.get(inc.edge, 1)) for inc in G.incidences],
        strict=G.strict,
    )


def contract_2edge(G: OrientedHypergraph, e: str, merged_id: Optional[str] = None) -> OrientedHypergraph:
    """
    Signed contraction of a 2-edge.

    A negative edge is made positive by switching its smaller endpoint; the
    endpoints are then identified (under the smaller id unless merged_id is
    given) and the edge is deleted.
    """
    members = G.incidences_of(e)
    if len(members) != 2:
        raise NotA2Edge(f"edge {e!r} has size {len(members)}")
    first, second = members
    if first.vertex == second.vertex:
        raise LoopEdge(f"both incidences of {e!r} lie at {first.vertex!r}")
    keep, gone = sorted((first.vertex, second.vertex))
    if first.sign == second.sign:
        G = switch(G, {keep: -1})
    name = merged_id if merged_id is not None else keep

    drafts: List[_Draft] = []
    for inc in G.incidences:
        if inc.edge == e:
            continue
        if inc.vertex == keep:
            drafts.append((name, inc.edge, inc.sign, (0, inc.slot)))
        elif inc.vertex == gone:
            drafts.append((name, inc.edge, inc.sign, (1, inc.slot)))
        else:
            drafts.append((inc.vertex, inc.edge, inc.sign, (0, inc.slot)))
    vertices = [name if v == keep else v for v in G.vertices if v != gone]
    return _assemble(vertices, [x for x in G.edges if x != e], drafts, G.strict)


def contract_2vertex(G: OrientedHypergraph, v: str, merged_id: Optional[str] = None) -> OrientedHypergraph:
    """
    2-vertex contraction, the incidence dual of contract_2edge: an incompatible
    vertex first has its smaller incident edge switched, then the two edges
    merge (under the smaller edge id unless merged_id is given).
    """
    if not G.has_vertex(v):
        raise UnknownId(f"unknown vertex {v!r}")
    try:
        return incidence_dual(contract_2edge(incidence_dual(G), v, merged_id))
    except NotA2Edge as exc:
        raise NotDegree2(f"vertex {v!r} has degree {G.degree(v)}") from exc
    except LoopEdge as exc:
        raise SameEdge(f"both incidences of {v!r} lie in one edge") from exc


def _fresh_ids(G: OrientedHypergraph) -> Tuple[str, str, str]:
    taken = G.vertex_set | G.edge_set
    n = 1
    while True:
        ids = (f"u#{n}", f"e#{n}.1", f"e#{n}.2")
        if not any(ident in taken for ident in ids):
            return ids
        n += 1


def _on_circle(H: OrientedHypergraph, u: str, e1: str, e2: str) -> bool:
    network = incidence_network(H)
    network.remove_nodes_from([u] + [inc.key for inc in H.incidences_at(u)])
    return nx.has_path(network, e1, e2)


def subdivide_edge(
    G: OrientedHypergraph,
    e: str,
    part1: Iterable[IncidenceKey],
    part2: Iterable[IncidenceKey],
    sign1: int,
    sign2: int,
) -> SubdivisionResult:
    """
    Split edge e at a new vertex.

    The incidences of e are bipartitioned into part1 and part2 (either may be
    empty); e is replaced by two edges carrying them, and a new vertex joins
    both new edges with signs sign1 and sign2.
    """
    members = {inc.key for inc in G.incidences_of(e)}
    first = [tuple(key) for key in part1]
    second = [tuple(key) for key in part2]
    if (
        len(set(first)) != len(first)
        or len(set(second)) != len(second)
        or set(first) & set(second)
        or set(first) | set(second) != members
    ):
        raise BadBipartition(f"parts do not bipartition the incidences of {e!r}")
    if sign1 not in (1, -1) or sign2 not in (1, -1):
        raise InvalidSign("subdivision signs must be +1 or -1")

    u, e1, e2 = _fresh_ids(G)
    to_first = set(first)
    edges: List[str] = []
    for x in G.edges:
        edges.extend([e1, e2] if x == e else [x])
    drafts: List[_Draft] = []
    for inc in G.incidences:
        if inc.edge == e:
            target = e1 if inc.key in to_first else e2
            drafts.append((inc.vertex, target, inc.sign, (0, inc.slot)))
        else:
            drafts.append((inc.vertex, inc.edge, inc.sign, (0, inc.slot)))
    drafts.append((u, e1, sign1, (0, 1)))
    drafts.append((u, e2, sign2, (0, 1)))
    H = _assemble(list(G.vertices) + [u], edges, drafts, G.strict)

    compatibility = COMPATIBLE if sign1 * sign2 == -1 else INCOMPATIBLE
    balanced = compatibility == COMPATIBLE or not _on_circle(H, u, e1, e2)
    return SubdivisionResult(H, u, (e1, e2), compatibility, balanced)


def contract_artery(A: OrientedHypergraph) -> OrientedHypergraph:
    """Vertex-contract every internal vertex of a k-artery (k >= 2) into a single k-edge."""
    ok, externals = is_artery(A)
    if not ok or not A.edges:
        raise TransformError("only arteries with at least one edge contract to a k-edge")
    H = A
    for v in A.vertices:
        if v not in externals:
            H = contract_2vertex(H, v)
    return H
