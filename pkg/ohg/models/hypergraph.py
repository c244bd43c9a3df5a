"""
Core value types for oriented hypergraphs.

An oriented hypergraph is a set of vertices, a set of edges and a list of
signed incidences (vertex, edge, slot, sign). Several incidences may join the
same vertex and edge; their slots are numbered 1..multiplicity. All values are
immutable; every operation elsewhere returns new values.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple, Union

import networkx as nx

from ohg.models.errors import (
    DuplicateId,
    InvalidId,
    InvalidSign,
    InvalidWalk,
    MixedSigns,
    SlotGap,
    UnknownId,
)

IncidenceKey = Tuple[str, str, int]

PATH = "path"
CIRCLE = "circle"


@dataclass(frozen=True)
class Incidence:
    """
    A single signed incidence.

    Attributes:
        vertex: Vertex id
        edge: Edge id
        slot: Position among the incidences joining the same vertex and edge (1-based)
        sign: +1 or -1
    """
    vertex: str
    edge: str
    slot: int
    sign: int

    @property
    def key(self) -> IncidenceKey:
        return (self.vertex, self.edge, self.slot)

    def with_sign(self, sign: int) -> "Incidence":
        return Incidence(self.vertex, self.edge, self.slot, sign)


IncidenceSpec = Union[Incidence, Tuple[str, str, int, int]]


@dataclass(frozen=True)
class OrientedHypergraph:
    """
    Validated oriented hypergraph. Construct through build().

    Iteration order over vertices, edges and incidences is insertion order.
    Equality compares the three sequences; the strict flag is carried along
    but does not take part in equality.
    """
    vertices: Tuple[str, ...]
    edges: Tuple[str, ...]
    incidences: Tuple[Incidence, ...]
    strict: bool = field(default=True, compare=False)

    @cached_property
    def vertex_set(self) -> FrozenSet[str]:
        return frozenset(self.vertices)

    @cached_property
    def edge_set(self) -> FrozenSet[str]:
        return frozenset(self.edges)

    @cached_property
    def _by_key(self) -> Dict[IncidenceKey, Incidence]:
        return {inc.key: inc for inc in self.incidences}

    @cached_property
    def _at_vertex(self) -> Dict[str, Tuple[Incidence, ...]]:
        grouped: Dict[str, List[Incidence]] = {v: [] for v in self.vertices}
        for inc in self.incidences:
            grouped[inc.vertex].append(inc)
        return {v: tuple(items) for v, items in grouped.items()}

    @cached_property
    def _of_edge(self) -> Dict[str, Tuple[Incidence, ...]]:
        grouped: Dict[str, List[Incidence]] = {e: [] for e in self.edges}
        for inc in self.incidences:
            grouped[inc.edge].append(inc)
        return {e: tuple(items) for e, items in grouped.items()}

    def has_vertex(self, v: str) -> bool:
        return v in self.vertex_set

    def has_edge(self, e: str) -> bool:
        return e in self.edge_set

    def has_incidence(self, key: IncidenceKey) -> bool:
        return tuple(key) in self._by_key

    def incidence(self, key: IncidenceKey) -> Incidence:
        try:
            return self._by_key[tuple(key)]  # type: ignore[index]
        except KeyError:
            raise UnknownId(f"unknown incidence {tuple(key)!r}") from None

    def sign_of(self, key: IncidenceKey) -> int:
        return self.incidence(key).sign

    def incidences_at(self, v: str) -> Tuple[Incidence, ...]:
        if v not in self._at_vertex:
            raise UnknownId(f"unknown vertex {v!r}")
        return self._at_vertex[v]

    def incidences_of(self, e: str) -> Tuple[Incidence, ...]:
        if e not in self._of_edge:
            raise UnknownId(f"unknown edge {e!r}")
        return self._of_edge[e]

    def degree(self, v: str) -> int:
        return len(self.incidences_at(v))

    def edge_size(self, e: str) -> int:
        return len(self.incidences_of(e))

    def multiplicity(self, v: str, e: str) -> int:
        if e not in self._of_edge:
            raise UnknownId(f"unknown edge {e!r}")
        return sum(1 for inc in self.incidences_at(v) if inc.edge == e)

    def is_simple(self) -> bool:
        pairs = [(inc.vertex, inc.edge) for inc in self.incidences]
        return len(pairs) == len(set(pairs))

    def kind_of(self, ident: str) -> str:
        """Return "vertex" or "edge" for an id of this hypergraph."""
        if ident in self.vertex_set:
            return "vertex"
        if ident in self.edge_set:
            return "edge"
        raise UnknownId(f"unknown id {ident!r}")

    def describe(self) -> str:
        return f"|V|={len(self.vertices)} |E|={len(self.edges)} |I|={len(self.incidences)}"


def _check_id(ident: object) -> None:
    if not isinstance(ident, str) or not ident or any(ch.isspace() for ch in ident):
        raise InvalidId(f"ids must be non-empty strings without whitespace, got {ident!r}")


def build(
    vertices: Iterable[str],
    edges: Iterable[str],
    incidences: Iterable[IncidenceSpec],
    strict: bool = True,
) -> OrientedHypergraph:
    """
    Validate and assemble an oriented hypergraph.

    Args:
        vertices: Vertex ids in order
        edges: Edge ids in order
        incidences: Incidence values or (vertex, edge, slot, sign) tuples
        strict: Require equal signs on all incidences of one (vertex, edge) pair

    Returns:
        The validated OrientedHypergraph

    Raises:
        InvalidId, DuplicateId, UnknownId, InvalidSign, SlotGap, MixedSigns
    """
    vertex_ids = tuple(vertices)
    edge_ids = tuple(edges)
    seen = set()
    for ident in vertex_ids + edge_ids:
        _check_id(ident)
        if ident in seen:
            raise DuplicateId(f"id {ident!r} is declared more than once")
        seen.add(ident)
    vertex_set = set(vertex_ids)
    edge_set = set(edge_ids)

    records: List[Incidence] = []
    slots: Dict[Tuple[str, str], List[int]] = {}
    signs: Dict[Tuple[str, str], set] = {}
    for spec in incidences:
        inc = spec if isinstance(spec, Incidence) else Incidence(*spec)
        if inc.vertex not in vertex_set:
            raise UnknownId(f"incidence {inc.key!r} references unknown vertex {inc.vertex!r}")
        if inc.edge not in edge_set:
            raise UnknownId(f"incidence {inc.key!r} references unknown edge {inc.edge!r}")
        if inc.sign not in (1, -1):
            raise InvalidSign(f"incidence {inc.key!r} has sign {inc.sign!r}")
        if not isinstance(inc.slot, int) or inc.slot < 1:
            raise SlotGap(f"incidence {inc.key!r} has an invalid slot")
        pair = (inc.vertex, inc.edge)
        slots.setdefault(pair, []).append(inc.slot)
        signs.setdefault(pair, set()).add(inc.sign)
        records.append(inc)

    for pair, used in slots.items():
        if sorted(used) != list(range(1, len(used) + 1)):
            raise SlotGap(f"slots of {pair!r} are {sorted(used)}, expected 1..{len(used)}")
        if strict and len(signs[pair]) > 1:
            raise MixedSigns(f"incidences of {pair!r} carry different signs in strict mode")

    return OrientedHypergraph(vertex_ids, edge_ids, tuple(records), strict)


def has_mixed_signs(incidences: Iterable[Incidence]) -> bool:
    """Whether some (vertex, edge) pair carries incidences of both signs."""
    signs: Dict[Tuple[str, str], set] = {}
    for inc in incidences:
        signs.setdefault((inc.vertex, inc.edge), set()).add(inc.sign)
    return any(len(found) > 1 for found in signs.values())


@dataclass(frozen=True)
class Adjacency:
    """Two distinct incidences (v, edge, k1) and (w, edge, k2) in one edge."""
    v: str
    k1: int
    w: str
    k2: int
    edge: str

    @property
    def first(self) -> IncidenceKey:
        return (self.v, self.edge, self.k1)

    @property
    def second(self) -> IncidenceKey:
        return (self.w, self.edge, self.k2)


@dataclass(frozen=True)
class Walk:
    """
    Alternating sequence of vertex/edge ids joined by incidences.

    Attributes:
        nodes: a0, a1, ..., an; a circle repeats a0 at the end
        incidences: i1..in, where i_j joins a_{j-1} and a_j
        kind: "path" or "circle"
        starts_with_vertex: Whether a0 is a vertex (circles are normalized to True)
    """
    nodes: Tuple[str, ...]
    incidences: Tuple[IncidenceKey, ...]
    kind: str = PATH
    starts_with_vertex: bool = True

    @property
    def is_circle(self) -> bool:
        return self.kind == CIRCLE

    @property
    def length(self) -> int:
        if self.is_circle:
            return len(self.incidences) // 2
        return len(self.incidences)

    @property
    def body(self) -> Tuple[str, ...]:
        return self.nodes[:-1] if self.is_circle else self.nodes

    @property
    def vertices(self) -> Tuple[str, ...]:
        first = 0 if self.starts_with_vertex else 1
        return self.body[first::2]

    @property
    def edges(self) -> Tuple[str, ...]:
        first = 1 if self.starts_with_vertex else 0
        return self.body[first::2]

    @property
    def incidence_set(self) -> FrozenSet[IncidenceKey]:
        return frozenset(self.incidences)

    @property
    def start(self) -> str:
        return self.nodes[0]

    @property
    def end(self) -> str:
        return self.nodes[-1]

    def reversed(self) -> "Walk":
        if self.is_circle:
            return circle_from_sequence(self.nodes, self.incidences)
        ends_with_vertex = (len(self.nodes) % 2 == 1) == self.starts_with_vertex
        return Walk(self.nodes[::-1], self.incidences[::-1], PATH, ends_with_vertex)

    def sort_key(self) -> Tuple[int, Tuple[str, ...], Tuple[IncidenceKey, ...]]:
        return (self.length, self.nodes, self.incidences)

    def __str__(self) -> str:
        parts = [self.nodes[0]]
        for key, node in zip(self.incidences, self.nodes[1:]):
            parts.append(f"-({key[0]},{key[1]},{key[2]})-")
            parts.append(node)
        return "".join(parts)


def circle_from_sequence(
    nodes: Sequence[str],
    incidences: Sequence[IncidenceKey],
    starts_with_vertex: bool = True,
) -> Walk:
    """
    Build a normalized circle from a closed alternating sequence.

    The circle starts at its smallest vertex id and runs in the direction
    whose first incidence has the smaller (edge, slot).
    """
    ring = list(nodes)
    if len(ring) == len(incidences) + 1 and ring[0] == ring[-1]:
        ring = ring[:-1]
    hops = [tuple(key) for key in incidences]
    size = len(ring)
    if size != len(hops) or size < 2 or size % 2:
        raise InvalidWalk("a circle needs an even number (at least 2) of alternating elements")

    first_vertex = 0 if starts_with_vertex else 1
    positions = range(first_vertex, size, 2)
    pos = min(positions, key=lambda p: ring[p])

    forward_nodes = [ring[(pos + j) % size] for j in range(size)]
    forward_hops = [hops[(pos + j) % size] for j in range(size)]
    backward_nodes = [ring[(pos - j) % size] for j in range(size)]
    backward_hops = [hops[(pos - 1 - j) % size] for j in range(size)]

    if (forward_hops[0][1], forward_hops[0][2]) <= (backward_hops[0][1], backward_hops[0][2]):
        chosen_nodes, chosen_hops = forward_nodes, forward_hops
    else:
        chosen_nodes, chosen_hops = backward_nodes, backward_hops
    return Walk(
        tuple(chosen_nodes) + (chosen_nodes[0],),
        tuple(chosen_hops),  # type: ignore[arg-type]
        CIRCLE,
        True,
    )


@dataclass(frozen=True)
class IncidenceGraph:
    """
    Bipartite incidence graph: hypergraph vertices on the left, hypergraph
    edges on the right, one signed graph edge per incidence.
    """
    left: Tuple[str, ...]
    right: Tuple[str, ...]
    arcs: Tuple[Incidence, ...]

    def is_simple(self) -> bool:
        pairs = [(arc.vertex, arc.edge) for arc in self.arcs]
        return len(pairs) == len(set(pairs))

    def to_networkx(self) -> nx.MultiGraph:
        """Return a networkx MultiGraph keyed by slot, with the sign on each edge."""
        graph = nx.MultiGraph()
        graph.add_nodes_from(self.left, bipartite=0)
        graph.add_nodes_from(self.right, bipartite=1)
        for arc in self.arcs:
            graph.add_edge(arc.vertex, arc.edge, key=arc.slot, sign=arc.sign)
        return graph
