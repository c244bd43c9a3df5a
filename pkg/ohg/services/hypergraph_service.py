"""
Basic operations on oriented hypergraphs: signs of adjacencies and walks,
incidence duality, the incidence graph, connectivity and sub-hypergraphs.
"""
from collections import Counter
from typing import Iterable, List, Optional, Set, Tuple

import networkx as nx

from ohg.models.errors import InvalidWalk, UnknownId
from ohg.models.hypergraph import (
    CIRCLE,
    PATH,
    Adjacency,
    Incidence,
    IncidenceGraph,
    IncidenceKey,
    OrientedHypergraph,
    Walk,
    build,
    circle_from_sequence,
)

CROSS_INDUCED = "cross-induced"
EDGE_RESTRICTION = "edge-restriction"
EDGE_INDUCED = "edge-induced"

VERTEX_PATH = "vertex-path"
EDGE_PATH = "edge-path"
CROSS_PATH = "cross-path"


def adjacency_sign(G: OrientedHypergraph, adjacency: Adjacency) -> int:
    """Return -sigma(v,e,k1)*sigma(w,e,k2), or 0 when the adjacency does not exist."""
    first, second = adjacency.first, adjacency.second
    if first == second or not G.has_incidence(first) or not G.has_incidence(second):
        return 0
    return -G.sign_of(first) * G.sign_of(second)


def adjacencies(G: OrientedHypergraph, edge: Optional[str] = None) -> List[Adjacency]:
    """All unordered adjacencies of G (or of one edge), in incidence order."""
    edges = [edge] if edge is not None else list(G.edges)
    found = []
    for e in edges:
        members = G.incidences_of(e)
        for a in range(len(members)):
            for b in range(a + 1, len(members)):
                x, y = members[a], members[b]
                found.append(Adjacency(x.vertex, x.slot, y.vertex, y.slot, e))
    return found


def validate_walk(G: OrientedHypergraph, walk: Walk) -> None:
    """Raise InvalidWalk unless walk is a path or circle of G."""
    nodes, hops = walk.nodes, walk.incidences
    if len(nodes) != len(hops) + 1:
        raise InvalidWalk("a walk has exactly one more element than incidences")
    for position, node in enumerate(nodes):
        expect_vertex = (position % 2 == 0) == walk.starts_with_vertex
        if expect_vertex and not G.has_vertex(node):
            raise InvalidWalk(f"{node!r} at position {position} is not a vertex")
        if not expect_vertex and not G.has_edge(node):
            raise InvalidWalk(f"{node!r} at position {position} is not an edge")
    for j, key in enumerate(hops):
        if not G.has_incidence(key):
            raise InvalidWalk(f"incidence {key!r} is not in the hypergraph")
        if {key[0], key[1]} != {nodes[j], nodes[j + 1]}:
            raise InvalidWalk(f"incidence {key!r} does not join {nodes[j]!r} and {nodes[j + 1]!r}")
    if len(set(hops)) != len(hops):
        raise InvalidWalk("an incidence repeats")
    if walk.kind == CIRCLE:
        if len(hops) < 2 or len(hops) % 2 or nodes[0] != nodes[-1] or not walk.starts_with_vertex:
            raise InvalidWalk("a circle is closed, starts at a vertex and has length at least 1")
        if len(set(nodes[:-1])) != len(nodes) - 1:
            raise InvalidWalk("a circle element repeats")
    elif walk.kind == PATH:
        if len(set(nodes)) != len(nodes):
            raise InvalidWalk("a path element repeats")
    else:
        raise InvalidWalk(f"unknown walk kind {walk.kind!r}")


def walk_sign(G: OrientedHypergraph, walk: Walk) -> int:
    """Return (-1)^floor(n/2) times the product of the n incidence signs."""
    validate_walk(G, walk)
    sign = -1 if (len(walk.incidences) // 2) % 2 else 1
    for key in walk.incidences:
        sign *= G.sign_of(key)
    return sign


def path_kind(walk: Walk) -> str:
    """vertex-path, edge-path or cross-path, by the kinds of the two end-points."""
    if walk.kind != PATH:
        raise InvalidWalk("only paths have a path kind")
    starts_vertex = walk.starts_with_vertex
    ends_vertex = (len(walk.nodes) % 2 == 1) == starts_vertex
    if starts_vertex and ends_vertex:
        return VERTEX_PATH
    if not starts_vertex and not ends_vertex:
        return EDGE_PATH
    return CROSS_PATH


def incidence_dual(G: OrientedHypergraph) -> OrientedHypergraph:
    """Swap the roles of vertices and edges, keeping every sign and slot."""
    return build(
        G.edges,
        G.vertices,
        [Incidence(inc.edge, inc.vertex, inc.slot, inc.sign) for inc in G.incidences],
        strict=G.strict,
    )


def dual_walk(walk: Walk) -> Walk:
    """The walk read in the incidence dual."""
    swapped: List[IncidenceKey] = [(key[1], key[0], key[2]) for key in walk.incidences]
    if walk.kind == CIRCLE:
        return circle_from_sequence(walk.nodes, swapped, starts_with_vertex=False)
    return Walk(walk.nodes, tuple(swapped), PATH, not walk.starts_with_vertex)


def to_incidence_graph(G: OrientedHypergraph) -> IncidenceGraph:
    return IncidenceGraph(G.vertices, G.edges, G.incidences)


def incidence_network(G: OrientedHypergraph) -> nx.Graph:
    """
    Simple graph on vertices, edges and incidences, every incidence subdividing
    its vertex-edge link. Parallel incidences become cycles of length 4, so
    blocks, articulation points and cycles of this graph are exactly those of
    the incidence graph.
    """
    graph = nx.Graph()
    graph.add_nodes_from(G.vertices, kind="vertex")
    graph.add_nodes_from(G.edges, kind="edge")
    for inc in G.incidences:
        graph.add_node(inc.key, kind="incidence", sign=inc.sign)
        graph.add_edge(inc.vertex, inc.key)
        graph.add_edge(inc.key, inc.edge)
    return graph


def connected_components(G: OrientedHypergraph) -> List[Tuple[str, ...]]:
    """
    Partition of V and E into connected components.

    Each component lists its vertices then its edges in G's order; components
    are ordered by their first element.
    """
    network = incidence_network(G)
    order = list(G.vertices) + list(G.edges)
    position = {ident: i for i, ident in enumerate(order)}
    assigned: Set[str] = set()
    components = []
    for ident in order:
        if ident in assigned:
            continue
        members = [node for node in nx.node_connected_component(network, ident) if isinstance(node, str)]
        assigned.update(members)
        vertices = sorted((m for m in members if G.has_vertex(m)), key=position.__getitem__)
        edges = sorted((m for m in members if G.has_edge(m)), key=position.__getitem__)
        components.append(tuple(vertices + edges))
    return components


def is_connected(G: OrientedHypergraph) -> bool:
    return len(connected_components(G)) == 1


def sub_hypergraph(
    G: OrientedHypergraph,
    U: Iterable[str],
    F: Iterable[str],
    mode: str = CROSS_INDUCED,
) -> OrientedHypergraph:
    """
    Restrict G to a vertex set and an edge set.

    Args:
        G: Source hypergraph
        U: Vertex subset (ignored by edge-restriction and edge-induced)
        F: Edge subset
        mode: cross-induced | edge-restriction | edge-induced

    Returns:
        The sub-hypergraph; vertices and edges keep G's order
    """
    vertex_pick = set(U)
    edge_pick = set(F)
    unknown = sorted(x for x in vertex_pick if not G.has_vertex(x)) + sorted(x for x in edge_pick if not G.has_edge(x))
    if unknown:
        raise UnknownId(f"unknown ids {unknown!r}")

    if mode == EDGE_RESTRICTION:
        vertex_pick = set(G.vertices)
    elif mode == EDGE_INDUCED:
        vertex_pick = {inc.vertex for inc in G.incidences if inc.edge in edge_pick}
    elif mode != CROSS_INDUCED:
        raise ValueError(f"unknown sub-hypergraph mode {mode!r}")

    return build(
        [v for v in G.vertices if v in vertex_pick],
        [e for e in G.edges if e in edge_pick],
        [inc for inc in G.incidences if inc.vertex in vertex_pick and inc.edge in edge_pick],
        strict=G.strict,
    )


def labeled_equal(G: OrientedHypergraph, H: OrientedHypergraph) -> bool:
    """Equal ids and equal multisets of (vertex, edge, sign), ignoring order and slots."""
    if G.vertex_set != H.vertex_set or G.edge_set != H.edge_set:
        return False
    left = Counter((inc.vertex, inc.edge, inc.sign) for inc in G.incidences)
    right = Counter((inc.vertex, inc.edge, inc.sign) for inc in H.incidences)
    return left == right
