"""
Exception hierarchy shared by every ohg module.

Library code raises these; only the command line layer turns them into exit
codes and messages.
"""
from typing import Optional


class HypergraphError(Exception):
    """Base class for all ohg errors."""


class InvalidId(HypergraphError):
    """An id is empty, not a string, or contains whitespace."""


class DuplicateId(HypergraphError):
    """An id is declared twice or used as both a vertex and an edge."""


class UnknownId(HypergraphError):
    """An operation referenced a vertex, edge or incidence that does not exist."""


class SlotGap(HypergraphError):
    """The slots of a (vertex, edge) pair are not exactly 1..multiplicity."""


class MixedSigns(HypergraphError):
    """Strict mode: incidences sharing a (vertex, edge) pair carry different signs."""


class InvalidSign(HypergraphError):
    """A sign or switching value is not +1 or -1."""


class InvalidWalk(HypergraphError):
    """A walk is not a valid path or circle of the hypergraph."""


class NotACircle(InvalidWalk):
    """A walk handed to a circle operation is not a circle of the hypergraph."""


class TransformError(HypergraphError):
    """Base class for precondition failures of the structural operations."""


class NotA2Edge(TransformError):
    pass


class LoopEdge(TransformError):
    pass


class NotDegree2(TransformError):
    pass


class SameEdge(TransformError):
    pass


class BadBipartition(TransformError):
    pass


class LimitExceeded(HypergraphError):
    """An enumeration would exceed a configured limit."""

    def __init__(self, limit: str, value: int, message: Optional[str] = None):
        self.limit = limit
        self.value = value
        super().__init__(message or f"{limit} limit of {value} exceeded")


class BadEntries(HypergraphError):
    """A matrix contains entries outside {0, +1, -1}."""


class ParityViolation(HypergraphError):
    """A negative pure circle whose hole submatrix is even."""


class DocumentError(HypergraphError):
    """A hypergraph document could not be read."""

    def __init__(self, message: str, line: int, column: int = 1):
        self.line = line
        self.column = column
        self.message = message
        super().__init__(f"line {line}, column {column}: {message}")


class DocumentSyntaxError(DocumentError):
    pass


class DocumentSemanticError(DocumentError):
    pass


class InfeasibleParams(HypergraphError):
    """Generator parameters admit no instance."""


class OracleDisagreement(HypergraphError):
    """The structural classifier and the linear-algebra oracle disagree."""
