"""
Circles, thetas, the cyclomatic number and the structural inventory.

Circles are enumerated as cycles of the subdivided incidence network (see
hypergraph_service.incidence_network): a circle of length k is a cycle of
length 4k there.
"""
from collections import Counter, defaultdict, deque
from typing import Dict, FrozenSet, Iterator, List, Optional, Set, Tuple

import networkx as nx

from ohg.config import settings
from ohg.models.errors import InvalidWalk, LimitExceeded, NotACircle
from ohg.models.hypergraph import CIRCLE, PATH, IncidenceKey, OrientedHypergraph, Walk, circle_from_sequence
from ohg.models.results import (
    CROSS_THETA,
    EDGE_THETA,
    VERTEX_THETA,
    AnalysisLimits,
    CircleClass,
    StructureReport,
    Theta,
    resolve_limits,
)
from ohg.services.hypergraph_service import (
    connected_components,
    incidence_network,
    is_connected,
    validate_walk,
    walk_sign,
)


def _circle_from_cycle(G: OrientedHypergraph, cycle: List[object]) -> Walk:
    start = next(i for i, node in enumerate(cycle) if isinstance(node, str) and G.has_vertex(node))
    rotated = cycle[start:] + cycle[:start]
    nodes = [node for node in rotated if isinstance(node, str)]
    hops = [node for node in rotated if isinstance(node, tuple)]
    return circle_from_sequence(nodes, hops)  # type: ignore[arg-type]


def iter_circles(G: OrientedHypergraph, max_length: int) -> Iterator[Walk]:
    """Lazily yield the circles of length at most max_length, in no particular order."""
    network = incidence_network(G)
    for cycle in nx.simple_cycles(network, length_bound=4 * max_length):
        yield _circle_from_cycle(G, cycle)


def enumerate_circles(
    G: OrientedHypergraph,
    max_length: Optional[int] = None,
    max_count: Optional[int] = None,
) -> List[Walk]:
    """
    All circles of length at most max_length in canonical order (length, then
    normalized form). Longer circles are left out silently; all_circles is the
    form that raises when the bound could hide one. Raises LimitExceeded when
    more than max_count circles are found.
    """
    length = max_length if max_length is not None else settings.MAX_CIRCLE_LENGTH
    count = max_count if max_count is not None else settings.MAX_CIRCLES
    if length < 1 or count < 1:
        raise ValueError("circle limits must be positive")
    found = []
    for circle in iter_circles(G, length):
        found.append(circle)
        if len(found) > count:
            raise LimitExceeded("max_circles", count)
    return sorted(found, key=Walk.sort_key)


def nontrivial_blocks(G: OrientedHypergraph) -> List[Set[object]]:
    """Blocks of the incidence network that carry a cycle, as node sets."""
    network = incidence_network(G)
    return [set(block) for block in nx.biconnected_components(network) if len(block) > 2]


def longest_possible_circle(G: OrientedHypergraph) -> int:
    longest = 0
    for block in nontrivial_blocks(G):
        vertices = sum(1 for node in block if isinstance(node, str) and G.has_vertex(node))
        edges = sum(1 for node in block if isinstance(node, str) and G.has_edge(node))
        longest = max(longest, min(vertices, edges))
    return longest


def all_circles(G: OrientedHypergraph, limits: Optional[AnalysisLimits] = None) -> List[Walk]:
    """Every circle of G, or LimitExceeded when the length bound could hide one."""
    limits = resolve_limits(limits)
    if longest_possible_circle(G) > limits.max_circle_length:
        raise LimitExceeded("max_circle_length", limits.max_circle_length)
    return enumerate_circles(G, limits.max_circle_length, limits.max_circles)


def circle_chords(G: OrientedHypergraph, C: Walk) -> List[IncidenceKey]:
    """Incidences outside C joining a vertex of C to an edge of C."""
    vertices, edges, on_circle = set(C.vertices), set(C.edges), C.incidence_set
    return [
        inc.key for inc in G.incidences
        if inc.vertex in vertices and inc.edge in edges and inc.key not in on_circle
    ]


def classify_circle(G: OrientedHypergraph, C: Walk) -> CircleClass:
    if C.kind != CIRCLE:
        raise NotACircle("walk is not a circle")
    try:
        validate_walk(G, C)
    except InvalidWalk as exc:
        raise NotACircle(str(exc)) from exc
    return CircleClass(walk_sign(G, C), not circle_chords(G, C))


def theta_circles(theta: Theta) -> Tuple[Walk, Walk, Walk]:
    """The three circles formed by pairs of the theta's paths."""
    circles = []
    for i, j in ((0, 1), (0, 2), (1, 2)):
        first, second = theta.paths[i], theta.paths[j]
        nodes = first.nodes + second.nodes[::-1][1:]
        hops = first.incidences + second.incidences[::-1]
        circles.append(circle_from_sequence(nodes, hops, first.starts_with_vertex))
    return circles[0], circles[1], circles[2]


def _theta_kind(G: OrientedHypergraph, a: str, b: str) -> str:
    kinds = (G.has_vertex(a), G.has_vertex(b))
    if all(kinds):
        return VERTEX_THETA
    if not any(kinds):
        return EDGE_THETA
    return CROSS_THETA


def _make_theta(G: OrientedHypergraph, a: str, b: str, paths: List[Walk]) -> Theta:
    if G.has_edge(a) and G.has_vertex(b):
        a, b = b, a
        paths = [path.reversed() for path in paths]
    elif G.has_vertex(a) == G.has_vertex(b) and b < a:
        a, b = b, a
        paths = [path.reversed() for path in paths]
    ordered = sorted(paths, key=lambda p: (len(p.incidences), p.incidences))
    return Theta((a, b), (ordered[0], ordered[1], ordered[2]), _theta_kind(G, a, b))


def _theta_from_union(G: OrientedHypergraph, union: FrozenSet[IncidenceKey]) -> Optional[Theta]:
    degree: Counter = Counter()
    at: Dict[str, List[IncidenceKey]] = defaultdict(list)
    for key in sorted(union):
        degree[key[0]] += 1
        degree[key[1]] += 1
        at[key[0]].append(key)
        at[key[1]].append(key)
    branch = sorted(node for node, d in degree.items() if d == 3)
    if len(branch) != 2 or any(d not in (2, 3) for d in degree.values()):
        return None
    a, b = branch
    paths = []
    for key in at[a]:
        nodes, hops, current = [a], [], a
        while True:
            following = key[1] if key[0] == current else key[0]
            hops.append(key)
            nodes.append(following)
            if following == b:
                break
            key = next(k for k in at[following] if k != key)
            current = following
        paths.append(Walk(tuple(nodes), tuple(hops), PATH, G.has_vertex(a)))
    return _make_theta(G, a, b, paths)


def _iter_thetas(G: OrientedHypergraph, circles: List[Walk]) -> Iterator[Theta]:
    seen: Set[FrozenSet[IncidenceKey]] = set()
    sets = [c.incidence_set for c in circles]
    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            if not sets[i] & sets[j]:
                continue
            union = sets[i] | sets[j]
            if union in seen:
                continue
            theta = _theta_from_union(G, union)
            if theta is not None:
                seen.add(union)
                yield theta


def find_thetas(G: OrientedHypergraph, limits: Optional[AnalysisLimits] = None) -> List[Theta]:
    """Every theta of G: pairs of circles whose common part is a single path."""
    return list(_iter_thetas(G, all_circles(G, limits)))


def _single_incidence_path(key: IncidenceKey) -> Walk:
    return Walk((key[0], key[1]), (key,), PATH, True)


def _chord_theta(G: OrientedHypergraph, C: Walk, chord: IncidenceKey) -> Theta:
    ring, hops = list(C.nodes[:-1]), list(C.incidences)
    size = len(ring)
    v, e = chord[0], chord[1]
    iv, ie = ring.index(v), ring.index(e)
    forward_nodes = [ring[(iv + j) % size] for j in range((ie - iv) % size + 1)]
    forward_hops = [hops[(iv + j) % size] for j in range((ie - iv) % size)]
    backward_nodes = [ring[(iv - j) % size] for j in range((iv - ie) % size + 1)]
    backward_hops = [hops[(iv - 1 - j) % size] for j in range((iv - ie) % size)]
    paths = [
        Walk(tuple(forward_nodes), tuple(forward_hops), PATH, True),
        Walk(tuple(backward_nodes), tuple(backward_hops), PATH, True),
        _single_incidence_path(chord),
    ]
    return _make_theta(G, v, e, paths)


def has_cross_theta(
    G: OrientedHypergraph,
    limits: Optional[AnalysisLimits] = None,
) -> Tuple[bool, Optional[Theta]]:
    """
    Search for a cross-theta, stopping at the first witness. Multiplicity 3
    and degenerate circles give immediate witnesses.
    """
    slots: Dict[Tuple[str, str], List[IncidenceKey]] = defaultdict(list)
    for inc in G.incidences:
        slots[(inc.vertex, inc.edge)].append(inc.key)
    for (v, e), keys in slots.items():
        if len(keys) >= 3:
            paths = [_single_incidence_path(key) for key in sorted(keys, key=lambda k: k[2])[:3]]
            return True, _make_theta(G, v, e, paths)

    circles = all_circles(G, limits)
    for circle in circles:
        chords = circle_chords(G, circle)
        if chords:
            return True, _chord_theta(G, circle, chords[0])
    for theta in _iter_thetas(G, circles):
        if theta.kind == CROSS_THETA:
            return True, theta
    return False, None


def cyclomatic_number(G: OrientedHypergraph) -> int:
    """phi = |I| - (|V| + |E|) + c."""
    c = len(connected_components(G))
    return len(G.incidences) - (len(G.vertices) + len(G.edges)) + c


def cyclomatic_forms(G: OrientedHypergraph) -> Tuple[int, int, int]:
    """The cyclomatic number from the incidence count, the edge sizes and the vertex degrees."""
    c = len(connected_components(G))
    base = len(G.vertices) + len(G.edges) - c
    by_incidences = len(G.incidences) - base
    by_sizes = sum(G.edge_size(e) for e in G.edges) - base
    by_degrees = sum(G.degree(v) for v in G.vertices) - base
    return by_incidences, by_sizes, by_degrees


def essential_circle_basis(G: OrientedHypergraph) -> List[Tuple[IncidenceKey, Walk]]:
    """
    Breadth-first spanning forest of the incidence graph, rooted in G's order
    (vertices, then edges). Each incidence outside the forest closes exactly one
    circle; returns (closing incidence, circle) pairs in incidence order.
    """
    order = list(G.vertices) + list(G.edges)
    adjacency: Dict[str, List] = {node: [] for node in order}
    for inc in G.incidences:
        adjacency[inc.vertex].append(inc)
        adjacency[inc.edge].append(inc)

    parent: Dict[str, Optional[Tuple[str, IncidenceKey]]] = {}
    depth: Dict[str, int] = {}
    forest: Set[IncidenceKey] = set()
    for root in order:
        if root in parent:
            continue
        parent[root] = None
        depth[root] = 0
        queue = deque([root])
        while queue:
            node = queue.popleft()
            for inc in adjacency[node]:
                other = inc.edge if node == inc.vertex else inc.vertex
                if other in parent:
                    continue
                parent[other] = (node, inc.key)
                depth[other] = depth[node] + 1
                forest.add(inc.key)
                queue.append(other)

    basis = []
    for inc in G.incidences:
        if inc.key in forest:
            continue
        left_nodes, left_hops = [inc.vertex], []
        right_nodes, right_hops = [inc.edge], []
        a, b = inc.vertex, inc.edge
        while depth[a] > depth[b]:
            a, key = parent[a]  # type: ignore[misc]
            left_hops.append(key)
            left_nodes.append(a)
        while depth[b] > depth[a]:
            b, key = parent[b]  # type: ignore[misc]
            right_hops.append(key)
            right_nodes.append(b)
        while a != b:
            a, key = parent[a]  # type: ignore[misc]
            left_hops.append(key)
            left_nodes.append(a)
            b, key = parent[b]  # type: ignore[misc]
            right_hops.append(key)
            right_nodes.append(b)
        nodes = left_nodes + right_nodes[::-1][1:]
        hops = left_hops + right_hops[::-1] + [inc.key]
        basis.append((inc.key, circle_from_sequence(nodes, hops)))
    return basis


def essential_circles(G: OrientedHypergraph) -> List[Walk]:
    return [circle for _, circle in essential_circle_basis(G)]


def circle_edges(G: OrientedHypergraph) -> FrozenSet[str]:
    """Edges lying on at least one circle."""
    found: Set[str] = set()
    for block in nontrivial_blocks(G):
        found.update(node for node in block if isinstance(node, str) and G.has_edge(node))
    return frozenset(found)


def structural_inventory(G: OrientedHypergraph) -> StructureReport:
    network = incidence_network(G)
    cuts = set(nx.articulation_points(network))
    on_circles = circle_edges(G)

    isolated = frozenset(v for v in G.vertices if G.degree(v) == 0)
    monovalent = frozenset(v for v in G.vertices if G.degree(v) == 1)
    thorns = frozenset(v for v in monovalent if G.incidences_at(v)[0].edge in on_circles)
    leaves = monovalent - thorns
    twigs = frozenset(G.incidences_at(v)[0].edge for v in leaves)
    briars = frozenset(G.incidences_at(v)[0].edge for v in thorns)
    return StructureReport(
        isolated=isolated,
        monovalent=monovalent,
        leaves=leaves,
        thorns=thorns,
        twigs=twigs,
        briars=briars,
        isthmi=frozenset(e for e in G.edges if e in cuts),
        cut_vertices=frozenset(v for v in G.vertices if v in cuts),
        shoals=frozenset(inc.key for inc in G.incidences if inc.key in cuts),
    )


def is_artery(G: OrientedHypergraph) -> Tuple[bool, Tuple[str, ...]]:
    """
    Whether G is an artery: a single vertex, or connected, circle-free and
    1-edge-free with every degree 1 or 2. Returns the external (non-divalent)
    vertices.
    """
    if len(G.vertices) == 1 and not G.edges:
        return True, G.vertices
    if not G.vertices or not is_connected(G) or cyclomatic_number(G) != 0:
        return False, ()
    if any(G.edge_size(e) == 1 for e in G.edges):
        return False, ()
    if any(G.degree(v) not in (1, 2) for v in G.vertices):
        return False, ()
    return True, tuple(v for v in G.vertices if G.degree(v) != 2)
