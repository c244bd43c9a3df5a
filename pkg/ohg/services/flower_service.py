"""
Flowers and pseudo-flowers.

A hypergraph is circle-covered when it is connected and either a single
0-edge or inseparable with at least one circle; a flower is a circle-covered
hypergraph with no proper circle-covered edge-induced part.
"""
from itertools import combinations
from typing import FrozenSet, Optional

import networkx as nx

from ohg.models.errors import LimitExceeded
from ohg.models.hypergraph import OrientedHypergraph
from ohg.models.results import FLOWER, NEITHER, PSEUDO_FLOWER, UNKNOWN, AnalysisLimits, FlowerAnalysis, resolve_limits
from ohg.services.hypergraph_service import CROSS_INDUCED, EDGE_INDUCED, incidence_network, is_connected, sub_hypergraph
from ohg.services.structure_service import all_circles, circle_edges, cyclomatic_number

BLOCKS = "blocks"
CIRCLES = "circles"


def is_inseparable(G: OrientedHypergraph, method: str = BLOCKS, limits: Optional[AnalysisLimits] = None) -> bool:
    """
    Whether every pair of incidences lies on a common circle.

    method="blocks" asks whether one block of the incidence network holds all
    incidences; method="circles" checks every pair against the enumerated
    circles.
    """
    keys = [inc.key for inc in G.incidences]
    if len(keys) < 2:
        return True
    if method == BLOCKS:
        network = incidence_network(G)
        return any(
            len(block) > 2 and all(key in block for key in keys)
            for block in nx.biconnected_components(network)
        )
    if method == CIRCLES:
        circle_sets = [circle.incidence_set for circle in all_circles(G, limits)]
        return all(
            any(a in members and b in members for members in circle_sets)
            for a, b in combinations(keys, 2)
        )
    raise ValueError(f"unknown inseparability method {method!r}")


def is_circle_covered(G: OrientedHypergraph) -> bool:
    if not is_connected(G):
        return False
    if not G.vertices and len(G.edges) == 1:
        return True
    return cyclomatic_number(G) > 0 and is_inseparable(G)


def is_flower(G: OrientedHypergraph, limits: Optional[AnalysisLimits] = None) -> Optional[bool]:
    """True or False, or None when |E| is beyond the subset-search cap."""
    limits = resolve_limits(limits)
    if not is_circle_covered(G):
        return False
    if len(G.edges) > limits.flower_edge_cap:
        return None
    for size in range(1, len(G.edges)):
        for subset in combinations(G.edges, size):
            if is_circle_covered(sub_hypergraph(G, (), subset, EDGE_INDUCED)):
                return False
    return True


def thorn_candidates(G: OrientedHypergraph) -> FrozenSet[str]:
    """
    Monovalent vertices whose edge lies on a circle, together with the sole
    vertex of a 1-edge (whose deletion leaves a 0-edge).
    """
    on_circles = circle_edges(G)
    found = set()
    for v in G.vertices:
        if G.degree(v) != 1:
            continue
        edge = G.incidences_at(v)[0].edge
        if edge in on_circles or G.edge_size(edge) == 1:
            found.add(v)
    return frozenset(found)


def flower_analysis(G: OrientedHypergraph, limits: Optional[AnalysisLimits] = None) -> FlowerAnalysis:
    verdict = is_flower(G, limits)
    if verdict is None:
        return FlowerAnalysis(UNKNOWN)
    if verdict:
        return FlowerAnalysis(FLOWER)
    thorns = thorn_candidates(G)
    if not thorns:
        return FlowerAnalysis(NEITHER)
    part = sub_hypergraph(G, [v for v in G.vertices if v not in thorns], G.edges, CROSS_INDUCED)
    inner = is_flower(part, limits)
    if inner is None:
        return FlowerAnalysis(UNKNOWN, thorns)
    if inner:
        return FlowerAnalysis(PSEUDO_FLOWER, thorns, part)
    return FlowerAnalysis(NEITHER)


def require_flower(G: OrientedHypergraph, limits: Optional[AnalysisLimits] = None) -> bool:
    """is_flower, with the cap turned into LimitExceeded."""
    limits = resolve_limits(limits)
    verdict = is_flower(G, limits)
    if verdict is None:
        raise LimitExceeded("flower_edge_cap", limits.flower_edge_cap)
    return verdict
