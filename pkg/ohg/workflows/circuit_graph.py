"""
LangGraph state machine for the structural circuit classifier.

screen -> balance -> zero-edge -> degree law -> (pseudo-flowers) -> arteries
-> subdivision check. Any node that reaches a verdict routes straight to END.
"""
from typing import Optional

from langgraph.graph import END, StateGraph

from ohg.classifier.nodes import (
    attach_arteries,
    check_balance,
    check_degree_law,
    check_zero_edge,
    extract_pseudo_flowers,
    screen_degrees,
    verify_subdivision,
)
from ohg.models.errors import LimitExceeded, OracleDisagreement
from ohg.models.hypergraph import OrientedHypergraph
from ohg.models.results import (
    CIRCUIT,
    NOT_CIRCUIT,
    UNKNOWN,
    AgreementReport,
    AnalysisLimits,
    CircuitVerdict,
    resolve_limits,
)
from ohg.models.state import CircuitState
from ohg.services.balance_service import is_balanced
from ohg.services.linalg_service import is_minimally_dependent
from ohg.services.logging_service import get_logging_service


def is_decided(state: CircuitState) -> str:
    """
    Decision point after every screening node.

    Returns:
        "done" once a verdict is set, "continue" otherwise
    """
    if state.get("verdict"):
        return "done"
    return "continue"


def route_cycles(state: CircuitState) -> str:
    """After the degree law: acyclic hypergraphs have no pseudo-flowers to extract."""
    if state.get("verdict"):
        return "done"
    if state.get("acyclic"):
        return "acyclic"
    return "cyclic"


def build_circuit_graph():
    """
    Builds the LangGraph state machine for the circuit classifier.
    """
    workflow = StateGraph(CircuitState)

    workflow.add_node("screen_degrees", screen_degrees)
    workflow.add_node("check_balance", check_balance)
    workflow.add_node("check_zero_edge", check_zero_edge)
    workflow.add_node("check_degree_law", check_degree_law)
    workflow.add_node("extract_pseudo_flowers", extract_pseudo_flowers)
    workflow.add_node("attach_arteries", attach_arteries)
    workflow.add_node("verify_subdivision", verify_subdivision)

    workflow.set_entry_point("screen_degrees")

    for node, following in (
        ("screen_degrees", "check_balance"),
        ("check_balance", "check_zero_edge"),
        ("check_zero_edge", "check_degree_law"),
    ):
        workflow.add_conditional_edges(node, is_decided, {"done": END, "continue": following})

    workflow.add_conditional_edges(
        "check_degree_law",
        route_cycles,
        {
            "done": END,
            "cyclic": "extract_pseudo_flowers",
            "acyclic": "attach_arteries",
        },
    )
    workflow.add_edge("extract_pseudo_flowers", "attach_arteries")
    workflow.add_edge("attach_arteries", "verify_subdivision")
    workflow.add_edge("verify_subdivision", END)

    return workflow.compile()


# Global workflow instance
_workflow_instance = None


def get_workflow():
    """
    Get or create the global workflow instance.

    Returns:
        Compiled LangGraph workflow
    """
    global _workflow_instance
    if _workflow_instance is None:
        _workflow_instance = build_circuit_graph()
    return _workflow_instance


def classify_balanced_circuit(
    G: OrientedHypergraph,
    limits: Optional[AnalysisLimits] = None,
    name: Optional[str] = None,
) -> CircuitVerdict:
    """
    Classify G structurally and check the verdict against the exact oracle.

    Args:
        G: Hypergraph to classify
        limits: Enumeration limits (settings when omitted)
        name: Instance name for the log

    Returns:
        CircuitVerdict carrying the witness or the failure reason and the oracle certificate

    Raises:
        OracleDisagreement: when a circuit / not-circuit verdict contradicts the oracle
    """
    limits = resolve_limits(limits)
    final = get_workflow().invoke({"hypergraph": G, "limits": limits, "verdict": None})
    verdict = final.get("verdict") or UNKNOWN
    certificate = is_minimally_dependent(G)
    result = CircuitVerdict(verdict, final.get("reason") or "", final.get("decomposition"), certificate)

    logger = get_logging_service()
    if verdict in (CIRCUIT, NOT_CIRCUIT) and (verdict == CIRCUIT) != certificate.is_circuit:
        logger.create_log_entry(
            "OracleMismatch",
            instanceName=name,
            verdict=verdict,
            textContent=result.reason,
            details={"oracle": certificate.status, "nullity": certificate.nullity, "hypergraph": G.describe()},
        )
        raise OracleDisagreement(
            f"classifier says {verdict} ({result.reason}) but the oracle says {certificate.status}"
        )
    logger.create_log_entry(
        "ClassifierVerdict",
        instanceName=name,
        verdict=verdict,
        textContent=result.reason,
        details={"oracle": certificate.status},
    )
    return result


def cross_validate(
    G: OrientedHypergraph,
    limits: Optional[AnalysisLimits] = None,
    name: Optional[str] = None,
) -> AgreementReport:
    """
    Run classifier and oracle side by side on a balanced hypergraph. Unbalanced
    inputs and inputs beyond the limits are skipped with a reason; a
    disagreement is reported with mismatch=True.
    """
    limits = resolve_limits(limits)
    try:
        balanced, witness = is_balanced(G, limits)
    except LimitExceeded as exc:
        return AgreementReport(True, str(exc))
    if not balanced:
        return AgreementReport(True, f"unbalanced: negative circle {witness}")
    try:
        result = classify_balanced_circuit(G, limits, name)
    except OracleDisagreement as exc:
        certificate = is_minimally_dependent(G)
        verdict = NOT_CIRCUIT if certificate.is_circuit else CIRCUIT
        return AgreementReport(False, str(exc), verdict, certificate, mismatch=True)
    if result.verdict == UNKNOWN:
        return AgreementReport(True, result.reason, result.verdict, result.oracle)
    return AgreementReport(False, result.reason, result.verdict, result.oracle)
