"""
Node functions for the circuit classification workflow.
Each node reads the shared CircuitState, records what it found and, when it
can decide, sets the verdict.
"""
from ohg.classifier.hypercircle import (
    artery_parts,
    decompose,
    one_edge_parts,
    ordered_blocks,
    pseudo_flower_parts,
    recognize_hypercircle,
)
from ohg.models.errors import LimitExceeded
from ohg.models.hypergraph import build
from ohg.models.results import (
    CIRCUIT,
    NOT_CIRCUIT,
    OUT_OF_SCOPE_UNBALANCED,
    UNKNOWN,
    resolve_limits,
)
from ohg.models.state import CircuitState
from ohg.services.balance_service import is_balanced
from ohg.services.hypergraph_service import is_connected
from ohg.services.structure_service import cyclomatic_number


def _decide(state: CircuitState, verdict: str, reason: str) -> CircuitState:
    state["verdict"] = verdict
    state["reason"] = reason
    return state


def screen_degrees(state: CircuitState) -> CircuitState:
    """
    Set isolated vertices aside (they are zero rows) and reject the shapes that
    can never be circuits: no edges, a monovalent vertex, or more than one
    component.
    """
    G = state["hypergraph"]
    state["limits"] = resolve_limits(state.get("limits"))
    working = build(
        [v for v in G.vertices if G.degree(v) > 0],
        G.edges,
        G.incidences,
        strict=G.strict,
    )
    state["working"] = working
    if not working.edges:
        return _decide(state, NOT_CIRCUIT, "no edges")
    monovalent = [v for v in working.vertices if working.degree(v) == 1]
    if monovalent:
        return _decide(state, NOT_CIRCUIT, f"monovalent vertex {monovalent[0]!r}")
    if not is_connected(working):
        return _decide(state, NOT_CIRCUIT, "disconnected")
    return state


def check_balance(state: CircuitState) -> CircuitState:
    try:
        balanced, witness = is_balanced(state["working"], state["limits"])
    except LimitExceeded as exc:
        return _decide(state, UNKNOWN, str(exc))
    if not balanced:
        return _decide(state, OUT_OF_SCOPE_UNBALANCED, f"negative circle {witness}")
    return state


def check_zero_edge(state: CircuitState) -> CircuitState:
    working = state["working"]
    if not working.vertices and len(working.edges) == 1:
        state["decomposition"] = recognize_hypercircle(working, state["limits"])
        return _decide(state, CIRCUIT, "single 0-edge")
    return state


def check_degree_law(state: CircuitState) -> CircuitState:
    """A balanced circuit has every vertex of degree exactly 2."""
    working = state["working"]
    heavy = [v for v in working.vertices if working.degree(v) > 2]
    if heavy:
        return _decide(state, NOT_CIRCUIT, f"vertex {heavy[0]!r} has degree {working.degree(heavy[0])}")
    state["acyclic"] = cyclomatic_number(working) == 0
    return state


def extract_pseudo_flowers(state: CircuitState) -> CircuitState:
    """Grow one pseudo-flower per block, seeded in canonical essential-circle order."""
    working = state["working"]
    state["pseudo_flowers"] = pseudo_flower_parts(working, ordered_blocks(working))
    return state


def attach_arteries(state: CircuitState) -> CircuitState:
    """Join the pseudo-flowers by arteries and hang the terminal 1-edges off unused anchors."""
    working = state["working"]
    blocks = ordered_blocks(working) if not state.get("acyclic") else []
    ones = one_edge_parts(working)
    state["pseudo_flowers"] = list(state.get("pseudo_flowers", [])) + ones
    state["one_edges"] = [part.edges[0] for part in ones]
    state["arteries"] = artery_parts(working, blocks)

    covered = {v for part in state["pseudo_flowers"] for v in part.flower_vertices}
    covered.update(e for part in state["pseudo_flowers"] for e in part.edges)
    for artery in state["arteries"]:
        covered.update(artery.vertices)
        covered.update(artery.edges)
    state["residual"] = [x for x in working.vertices + working.edges if x not in covered]
    return state


def verify_subdivision(state: CircuitState) -> CircuitState:
    """
    Contract every artery vertex and check that what remains is a hypercircle
    whose decomposition re-validates against the original.
    """
    working = state["working"]
    limits = state["limits"]
    if state["residual"]:
        return _decide(state, NOT_CIRCUIT, f"uncovered elements {state['residual']}")
    try:
        decomposition, reason = decompose(
            working, state["pseudo_flowers"], state["arteries"], state["one_edges"], limits
        )
    except LimitExceeded as exc:
        return _decide(state, UNKNOWN, str(exc))
    if decomposition is None:
        return _decide(state, NOT_CIRCUIT, reason)
    state["decomposition"] = decomposition
    return _decide(state, CIRCUIT, f"balanced subdivision of a {decomposition.order}-hypercircle")
