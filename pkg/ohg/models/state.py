"""
TypedDict structures passed between the classifier nodes and written to the
log file.
"""
from typing import Any, Dict, List, Optional, Tuple, TypedDict

from ohg.models.hypergraph import OrientedHypergraph
from ohg.models.results import AnalysisLimits, ArteryPart, HypercircleDecomposition, PseudoFlowerPart


class CircuitState(TypedDict, total=False):
    """
    State passed between the nodes of the circuit classification workflow.

    Attributes:
        hypergraph: The hypergraph as handed in
        working: The hypergraph with isolated vertices set aside
        limits: Enumeration limits for this run
        verdict: Final verdict once a node decides
        reason: Human-readable reason for the verdict
        acyclic: Whether the working hypergraph has cyclomatic number 0
        pseudo_flowers: Pseudo-flowers extracted from the blocks
        arteries: Arteries of the tree part
        one_edges: Terminal 1-edges
        residual: Elements not covered by any part
        decomposition: Witness, set when the verdict is circuit
    """
    hypergraph: OrientedHypergraph
    working: OrientedHypergraph
    limits: AnalysisLimits
    verdict: Optional[str]
    reason: Optional[str]
    acyclic: bool
    pseudo_flowers: List[PseudoFlowerPart]
    arteries: List[ArteryPart]
    one_edges: List[str]
    residual: List[str]
    decomposition: Optional[HypercircleDecomposition]


class LogEntry(TypedDict, total=False):
    """
    Structure for a single log entry.

    Attributes:
        timestamp: ISO timestamp of the event
        eventType: Type of event (e.g. 'ClassifierVerdict', 'VerifyViolation')
        command: CLI command that produced the event
        instanceName: Name of the hypergraph instance, when known
        verdict: Verdict or status string
        textContent: Free text
        details: Additional structured data
    """
    timestamp: str
    eventType: str
    command: Optional[str]
    instanceName: Optional[str]
    verdict: Optional[str]
    textContent: Optional[str]
    details: Optional[Dict[str, Any]]


class VerifyOptions(TypedDict, total=False):
    """
    Options of a verification run.

    Attributes:
        seed: Base seed of the generated streams
        count: Instances per invariance check
        random_count: Instances of the random classification tier
        max_size: Largest |V|+|E| of the exhaustive tier
        exhaustive: Run the exhaustive tier
        workers: Worker processes for the random tiers
        corpus: Named hypergraphs to check in addition to the generated streams
    """
    seed: int
    count: int
    random_count: int
    max_size: int
    exhaustive: bool
    workers: int
    corpus: List[Tuple[str, OrientedHypergraph]]
