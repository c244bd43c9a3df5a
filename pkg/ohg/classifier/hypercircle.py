"""
Hypercircle decomposition.

The flower-parts of a hypercircle are the blocks of its incidence graph that
carry circles. Everything outside the blocks is tree-like: vertices there are
artery vertices, 2+-edges there are artery edges and 1-edges are the
pseudo-flowers of 0-edges. Contracting the artery vertices leaves pseudo-flowers
that meet only in shared briars.
"""
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Set, Tuple

import networkx as nx

from ohg.models.errors import TransformError
from ohg.models.hypergraph import OrientedHypergraph
from ohg.models.results import (
    AnalysisLimits,
    ArteryPart,
    HypercircleDecomposition,
    PseudoFlowerPart,
    resolve_limits,
)
from ohg.services.balance_service import is_balanced
from ohg.services.flower_service import require_flower
from ohg.services.hypergraph_service import (
    CROSS_INDUCED,
    EDGE_INDUCED,
    connected_components,
    incidence_network,
    is_connected,
    sub_hypergraph,
)
from ohg.services.structure_service import essential_circles, is_artery, nontrivial_blocks
from ohg.services.transform_service import contract_2vertex


def ordered_blocks(G: OrientedHypergraph) -> List[Set[object]]:
    """Nontrivial blocks, ordered by the first essential circle (canonical order) lying in each."""
    blocks = nontrivial_blocks(G)
    order: List[int] = []
    for circle in sorted(essential_circles(G), key=lambda c: c.sort_key()):
        for index, block in enumerate(blocks):
            if index not in order and circle.incidences[0] in block:
                order.append(index)
    return [blocks[i] for i in order]


def _block_ids(G: OrientedHypergraph, block: Set[object]) -> Tuple[Tuple[str, ...], Tuple[str, ...]]:
    return (
        tuple(v for v in G.vertices if v in block),
        tuple(e for e in G.edges if e in block),
    )


def pseudo_flower_parts(G: OrientedHypergraph, blocks: Sequence[Set[object]]) -> List[PseudoFlowerPart]:
    """One pseudo-flower per block: the edge-induced part on the block's edges."""
    parts = []
    for block in blocks:
        flower_vertices, edges = _block_ids(G, block)
        members = {inc.vertex for e in edges for inc in G.incidences_of(e)}
        thorns = tuple(v for v in G.vertices if v in members and v not in block)
        briars = tuple(e for e in edges if any(inc.vertex in thorns for inc in G.incidences_of(e)))
        parts.append(PseudoFlowerPart(edges, flower_vertices, thorns, briars))
    return parts


def one_edge_parts(G: OrientedHypergraph) -> List[PseudoFlowerPart]:
    parts = []
    for e in G.edges:
        members = G.incidences_of(e)
        if len(members) == 1:
            parts.append(PseudoFlowerPart((e,), (), (members[0].vertex,), (e,), one_edge=True))
    return parts


def artery_parts(G: OrientedHypergraph, blocks: Sequence[Set[object]]) -> List[ArteryPart]:
    """Components of the tree vertices together with the edges of size >= 2 outside every block."""
    in_blocks: Set[object] = set().union(*blocks) if blocks else set()
    tree_vertices = [v for v in G.vertices if v not in in_blocks]
    tree_edges = [e for e in G.edges if e not in in_blocks and G.edge_size(e) >= 2]
    forest = sub_hypergraph(G, tree_vertices, tree_edges, CROSS_INDUCED)
    arteries = []
    for component in connected_components(forest):
        vertices = tuple(x for x in component if forest.has_vertex(x))
        edges = tuple(x for x in component if forest.has_edge(x))
        part = sub_hypergraph(forest, vertices, edges, CROSS_INDUCED)
        externals = tuple(v for v in vertices if part.degree(v) != 2)
        arteries.append(ArteryPart(vertices, edges, externals))
    return arteries


def contract_vertices(G: OrientedHypergraph, vertices: Sequence[str]) -> OrientedHypergraph:
    H = G
    for v in vertices:
        H = contract_2vertex(H, v)
    return H


def _zero_hypercircle(G: OrientedHypergraph) -> HypercircleDecomposition:
    return HypercircleDecomposition(
        order=0,
        pseudo_flowers=(PseudoFlowerPart(G.edges, (), (), ()),),
        arteries=(),
        one_edges=(),
        isthmi=(),
        contracted=(),
        hypercircle=G,
    )


def shared_briars(G: OrientedHypergraph, blocks: Sequence[Set[object]]) -> Tuple[str, ...]:
    return tuple(e for e in G.edges if sum(1 for block in blocks if e in block) >= 2)


def _contracted_hypercircle(
    G: OrientedHypergraph,
    limits: AnalysisLimits,
) -> Optional[HypercircleDecomposition]:
    """
    G itself is a hypercircle: a 0-edge, or flowers whose pseudo-flowers meet
    only in briars that are isthmi of their union, with no artery vertex left.
    """
    if not is_connected(G):
        return None
    if not G.vertices and len(G.edges) == 1:
        return _zero_hypercircle(G)
    blocks = ordered_blocks(G)
    if not blocks:
        return None

    home: Dict[str, int] = {}
    for index, block in enumerate(blocks):
        for v in _block_ids(G, block)[0]:
            if v in home:
                return None
            home[v] = index
    if len(home) != len(G.vertices):
        return None
    covered = set().union(*blocks)
    if any(e not in covered for e in G.edges):
        return None

    for block in blocks:
        vertices, edges = _block_ids(G, block)
        if not require_flower(sub_hypergraph(G, vertices, edges, CROSS_INDUCED), limits):
            return None

    parts = pseudo_flower_parts(G, blocks)
    briars = shared_briars(G, blocks)
    for first, second in combinations(parts, 2):
        common = set(first.edges) & set(second.edges)
        if not common:
            continue
        if len(common) != 1:
            return None
        (briar,) = common
        union = sub_hypergraph(G, (), set(first.edges) | set(second.edges), EDGE_INDUCED)
        if briar not in nx.articulation_points(incidence_network(union)):
            return None

    return HypercircleDecomposition(
        order=len(blocks),
        pseudo_flowers=tuple(parts),
        arteries=(),
        one_edges=(),
        isthmi=briars,
        contracted=(),
        hypercircle=G,
    )


def hypercircle_parts(
    G: OrientedHypergraph,
) -> Tuple[List[PseudoFlowerPart], List[ArteryPart], List[str]]:
    """Pseudo-flowers (blocks first, then 1-edges), arteries and the terminal 1-edges of G."""
    blocks = ordered_blocks(G)
    ones = one_edge_parts(G)
    return pseudo_flower_parts(G, blocks) + ones, artery_parts(G, blocks), [part.edges[0] for part in ones]


def decompose(
    G: OrientedHypergraph,
    pseudo_flowers: Sequence[PseudoFlowerPart],
    arteries: Sequence[ArteryPart],
    one_edges: Sequence[str],
    limits: AnalysisLimits,
) -> Tuple[Optional[HypercircleDecomposition], str]:
    """
    Contract every artery vertex, recognize the result as a hypercircle and
    re-check the parts against G.

    Returns:
        (decomposition, "") on success, (None, reason) otherwise
    """
    contracted = tuple(v for artery in arteries for v in artery.vertices)
    try:
        hypercircle = contract_vertices(G, contracted)
    except TransformError as exc:
        return None, f"artery vertex cannot be contracted: {exc}"
    recognized = _contracted_hypercircle(hypercircle, limits)
    if recognized is None:
        return None, "contraction does not give a hypercircle"
    decomposition = HypercircleDecomposition(
        order=recognized.order,
        pseudo_flowers=tuple(pseudo_flowers),
        arteries=tuple(arteries),
        one_edges=tuple(one_edges),
        isthmi=recognized.isthmi,
        contracted=contracted,
        hypercircle=hypercircle,
    )
    problems = _structural_problems(G, decomposition, limits)
    if problems:
        return None, problems[0]
    return decomposition, ""


def recognize_hypercircle(
    G: OrientedHypergraph,
    limits: Optional[AnalysisLimits] = None,
) -> Optional[HypercircleDecomposition]:
    """
    Decide whether G is a hypercircle or a subdivision of one: pseudo-flowers
    joined at their thorns by arteries. The artery vertices are contracted and
    the decomposition carries the k-hypercircle that remains.

    Raises:
        LimitExceeded: when a flower-part is too large for the flower test
    """
    limits = resolve_limits(limits)
    if not is_connected(G):
        return None
    if not G.vertices and len(G.edges) == 1:
        return _zero_hypercircle(G)
    pseudo_flowers, arteries, one_edges = hypercircle_parts(G)
    decomposition, _ = decompose(G, pseudo_flowers, arteries, one_edges, limits)
    return decomposition


def validate_decomposition(
    G: OrientedHypergraph,
    D: HypercircleDecomposition,
    limits: Optional[AnalysisLimits] = None,
) -> List[str]:
    """
    Re-check a classifier witness for G against the definitions, balance
    included. Returns the list of violations; an empty list means the witness
    is valid.
    """
    limits = resolve_limits(limits)
    problems = _structural_problems(G, D, limits)
    if not is_balanced(G, limits)[0]:
        problems.append("the hypergraph is not balanced")
    return problems


def _structural_problems(
    G: OrientedHypergraph,
    D: HypercircleDecomposition,
    limits: AnalysisLimits,
) -> List[str]:
    problems: List[str] = []
    network = incidence_network(G)
    cuts = set(nx.articulation_points(network))

    flowers = [part for part in D.pseudo_flowers if not part.one_edge]
    for part in flowers:
        if D.order == 0:
            continue
        flower_part = sub_hypergraph(G, part.flower_vertices, part.edges, CROSS_INDUCED)
        if not require_flower(flower_part, limits):
            problems.append(f"flower-part on {part.edges} is not a flower")
    for first, second in combinations(flowers, 2):
        if set(first.flower_vertices) & set(second.flower_vertices):
            problems.append(f"flower-parts on {first.edges} and {second.edges} share a vertex")
    for part in D.pseudo_flowers:
        if part.one_edge and (len(part.edges) != 1 or G.edge_size(part.edges[0]) != 1):
            problems.append(f"{part.edges} is not a 1-edge")

    artery_vertices: Set[str] = set()
    artery_edges: Set[str] = set()
    for artery in D.arteries:
        sub = sub_hypergraph(G, artery.vertices, artery.edges, CROSS_INDUCED)
        ok, externals = is_artery(sub)
        if not ok or externals != artery.externals:
            problems.append(f"artery on {artery.vertices} fails the artery axioms")
        if artery_vertices & set(artery.vertices) or artery_edges & set(artery.edges):
            problems.append(f"artery on {artery.vertices} overlaps another artery")
        artery_vertices.update(artery.vertices)
        artery_edges.update(artery.edges)
        for element in artery.vertices + artery.edges:
            if element not in cuts:
                problems.append(f"deleting artery element {element!r} does not disconnect")
        for part in D.pseudo_flowers:
            members = set(part.flower_vertices) | set(part.thorns)
            meet = members & set(artery.vertices)
            if len(meet) > 1 or not meet <= set(artery.externals) or not meet <= set(part.thorns):
                problems.append(f"artery on {artery.vertices} meets {part.edges} outside a single thorn")

    flower_vertex_set = {v for part in flowers for v in part.flower_vertices}
    for part in D.pseudo_flowers:
        for thorn in part.thorns:
            if thorn not in artery_vertices and thorn not in flower_vertex_set:
                problems.append(f"thorn {thorn!r} is met by no artery")

    covered_vertices = flower_vertex_set | artery_vertices
    covered_edges = {e for part in D.pseudo_flowers for e in part.edges} | artery_edges
    if D.order == 0 and not G.vertices:
        covered_edges.update(G.edges)
    missing = [v for v in G.vertices if v not in covered_vertices] + [e for e in G.edges if e not in covered_edges]
    if missing:
        problems.append(f"elements outside every part: {missing}")

    if contract_vertices(G, D.contracted) != D.hypercircle:
        problems.append("contracting the recorded vertices does not give the recorded hypercircle")
    recognized = _contracted_hypercircle(D.hypercircle, limits)
    if recognized is None or recognized.order != D.order:
        problems.append("the recorded hypercircle is not a hypercircle of the recorded order")
    return problems
