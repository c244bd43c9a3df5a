"""
Result records returned by the analysis services.

Every record is a frozen dataclass so results can be cached, compared in
tests and shipped across worker processes.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from ohg.config import settings
from ohg.models.errors import BadEntries, UnknownId
from ohg.models.hypergraph import IncidenceKey, OrientedHypergraph, Walk

# Dependency status values
INDEPENDENT = "independent"
DEPENDENT_NOT_MINIMAL = "dependent-not-minimal"
MINIMALLY_DEPENDENT = "minimally-dependent"

# Theta kinds
VERTEX_THETA = "vertex-theta"
EDGE_THETA = "edge-theta"
CROSS_THETA = "cross-theta"

# Flower verdicts
FLOWER = "flower"
PSEUDO_FLOWER = "pseudo-flower"
NEITHER = "neither"
UNKNOWN = "unknown"

# Circuit verdicts
CIRCUIT = "circuit"
NOT_CIRCUIT = "not-circuit"
OUT_OF_SCOPE_UNBALANCED = "out-of-scope-unbalanced"

COMPATIBLE = "compatible"
INCOMPATIBLE = "incompatible"


@dataclass(frozen=True)
class AnalysisLimits:
    """
    Hard limits for the exponential enumerations.

    Attributes:
        max_circle_length: Longest circle (in edges) enumerated
        max_circles: Largest number of circles enumerated before giving up
        flower_edge_cap: Largest edge count for the flower minimality subset search
        brute_force_incidence_cap: Largest incidence count for brute-force balanceability
    """
    max_circle_length: int = 16
    max_circles: int = 10000
    flower_edge_cap: int = 14
    brute_force_incidence_cap: int = 20

    def __post_init__(self) -> None:
        for name in ("max_circle_length", "max_circles", "flower_edge_cap", "brute_force_incidence_cap"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")

    @classmethod
    def from_settings(cls) -> "AnalysisLimits":
        return cls(
            max_circle_length=settings.MAX_CIRCLE_LENGTH,
            max_circles=settings.MAX_CIRCLES,
            flower_edge_cap=settings.FLOWER_EDGE_CAP,
            brute_force_incidence_cap=settings.BRUTE_FORCE_INCIDENCE_CAP,
        )


def resolve_limits(limits: Optional[AnalysisLimits]) -> AnalysisLimits:
    return limits if limits is not None else AnalysisLimits.from_settings()


@dataclass(frozen=True)
class IncidenceMatrix:
    """
    Integer matrix with labeled rows (vertices) and columns (edges).
    """
    row_labels: Tuple[str, ...]
    column_labels: Tuple[str, ...]
    entries: Tuple[Tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.entries) != len(self.row_labels):
            raise BadEntries("row count does not match the row labels")
        for row in self.entries:
            if len(row) != len(self.column_labels):
                raise BadEntries("row length does not match the column labels")

    @classmethod
    def from_rows(
        cls,
        rows: Sequence[Sequence[int]],
        row_labels: Optional[Sequence[str]] = None,
        column_labels: Optional[Sequence[str]] = None,
    ) -> "IncidenceMatrix":
        table = tuple(tuple(int(x) for x in row) for row in rows)
        width = len(table[0]) if table else len(column_labels or ())
        rows_named = tuple(row_labels) if row_labels is not None else tuple(f"r{i + 1}" for i in range(len(table)))
        cols_named = tuple(column_labels) if column_labels is not None else tuple(f"c{j + 1}" for j in range(width))
        return cls(rows_named, cols_named, table)

    @property
    def shape(self) -> Tuple[int, int]:
        return (len(self.row_labels), len(self.column_labels))

    def _column_index(self, label: str) -> int:
        try:
            return self.column_labels.index(label)
        except ValueError:
            raise UnknownId(f"unknown column {label!r}") from None

    def _row_index(self, label: str) -> int:
        try:
            return self.row_labels.index(label)
        except ValueError:
            raise UnknownId(f"unknown row {label!r}") from None

    def column(self, label: str) -> Tuple[int, ...]:
        j = self._column_index(label)
        return tuple(row[j] for row in self.entries)

    def submatrix(self, rows: Iterable[str], columns: Iterable[str]) -> "IncidenceMatrix":
        row_list = list(rows)
        col_list = list(columns)
        ri = [self._row_index(r) for r in row_list]
        ci = [self._column_index(c) for c in col_list]
        return IncidenceMatrix(
            tuple(row_list),
            tuple(col_list),
            tuple(tuple(self.entries[i][j] for j in ci) for i in ri),
        )

    def select_columns(self, columns: Iterable[str]) -> "IncidenceMatrix":
        return self.submatrix(self.row_labels, columns)

    def without_column(self, label: str) -> "IncidenceMatrix":
        return self.select_columns(c for c in self.column_labels if c != label)

    def without_row(self, label: str) -> "IncidenceMatrix":
        self._row_index(label)
        return self.submatrix((r for r in self.row_labels if r != label), self.column_labels)

    def negate_row(self, label: str) -> "IncidenceMatrix":
        i = self._row_index(label)
        rows = tuple(tuple(-x for x in row) if k == i else row for k, row in enumerate(self.entries))
        return IncidenceMatrix(self.row_labels, self.column_labels, rows)

    def negate_column(self, label: str) -> "IncidenceMatrix":
        j = self._column_index(label)
        rows = tuple(tuple(-x if k == j else x for k, x in enumerate(row)) for row in self.entries)
        return IncidenceMatrix(self.row_labels, self.column_labels, rows)

    def entry_sum(self) -> int:
        return sum(sum(row) for row in self.entries)

    def render(self) -> str:
        """Fixed-width text table with a shape comment on the first line."""
        header = [""] + list(self.column_labels)
        body = [[label] + [str(x) for x in row] for label, row in zip(self.row_labels, self.entries)]
        widths = [max(len(line[j]) for line in [header] + body) for j in range(len(header))]
        lines = [f"# rows={self.shape[0]} columns={self.shape[1]}"]
        for line in [header] + body:
            cells = [line[0].ljust(widths[0])] + [cell.rjust(widths[j + 1]) for j, cell in enumerate(line[1:])]
            lines.append("  ".join(cells).rstrip())
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class DependencyCertificate:
    """
    Outcome of the exact minimal-dependency test on a column set.

    Attributes:
        status: independent | dependent-not-minimal | minimally-dependent
        nullity: Dimension of the nullspace of the selected columns
        generator: Nullspace generator over the columns when nullity is 1
        columns: Labels of the selected columns, in order
    """
    status: str
    nullity: int
    generator: Optional[Tuple[int, ...]]
    columns: Tuple[str, ...]

    @property
    def is_circuit(self) -> bool:
        return self.status == MINIMALLY_DEPENDENT


@dataclass(frozen=True)
class SubdivisionResult:
    hypergraph: OrientedHypergraph
    new_vertex: str
    new_edges: Tuple[str, str]
    compatibility: str
    balanced: bool


@dataclass(frozen=True)
class CircleClass:
    sign: int
    pure: bool


@dataclass(frozen=True)
class Theta:
    """
    Three internally disjoint paths joining two end-points.

    Attributes:
        endpoints: The two end-point ids (the vertex first for a cross-theta)
        paths: Three paths, each running from endpoints[0] to endpoints[1]
        kind: vertex-theta | edge-theta | cross-theta
    """
    endpoints: Tuple[str, str]
    paths: Tuple[Walk, Walk, Walk]
    kind: str

    @property
    def incidence_set(self) -> FrozenSet[IncidenceKey]:
        keys: set = set()
        for path in self.paths:
            keys.update(path.incidences)
        return frozenset(keys)


@dataclass(frozen=True)
class StructureReport:
    isolated: FrozenSet[str]
    monovalent: FrozenSet[str]
    leaves: FrozenSet[str]
    thorns: FrozenSet[str]
    twigs: FrozenSet[str]
    briars: FrozenSet[str]
    isthmi: FrozenSet[str]
    cut_vertices: FrozenSet[str]
    shoals: FrozenSet[IncidenceKey]

    def as_dict(self) -> Dict[str, List]:
        return {
            "isolated": sorted(self.isolated),
            "monovalent": sorted(self.monovalent),
            "leaves": sorted(self.leaves),
            "thorns": sorted(self.thorns),
            "twigs": sorted(self.twigs),
            "briars": sorted(self.briars),
            "isthmi": sorted(self.isthmi),
            "cut_vertices": sorted(self.cut_vertices),
            "shoals": sorted(self.shoals),
        }


@dataclass(frozen=True)
class FlowerAnalysis:
    verdict: str
    thorns: FrozenSet[str] = frozenset()
    flower_part: Optional[OrientedHypergraph] = None


@dataclass(frozen=True)
class PseudoFlowerPart:
    """
    One pseudo-flower of a decomposition.

    Attributes:
        edges: Edges of the pseudo-flower (all of them belong to its flower-part)
        flower_vertices: Vertices of the flower-part
        thorns: Vertices of the pseudo-flower outside the flower-part
        briars: Edges containing a thorn
        one_edge: True for the pseudo-flower of a 1-edge, whose flower-part is a 0-edge
    """
    edges: Tuple[str, ...]
    flower_vertices: Tuple[str, ...]
    thorns: Tuple[str, ...]
    briars: Tuple[str, ...]
    one_edge: bool = False


@dataclass(frozen=True)
class ArteryPart:
    vertices: Tuple[str, ...]
    edges: Tuple[str, ...]
    externals: Tuple[str, ...]


@dataclass(frozen=True)
class HypercircleDecomposition:
    """
    Witness that a hypergraph is (a balanced subdivision of) a hypercircle.

    Attributes:
        order: Number of flower-parts of the underlying hypercircle (0 for a 0-edge)
        pseudo_flowers: Pseudo-flowers with their flower-parts, thorns and briars
        arteries: Arteries joining the pseudo-flowers at their thorns
        one_edges: Terminal 1-edges
        isthmi: Briars shared by two adjacent pseudo-flowers of the hypercircle
        contracted: Artery vertices contracted, in order, to reach the hypercircle
        hypercircle: The hypercircle itself
    """
    order: int
    pseudo_flowers: Tuple[PseudoFlowerPart, ...]
    arteries: Tuple[ArteryPart, ...]
    one_edges: Tuple[str, ...]
    isthmi: Tuple[str, ...]
    contracted: Tuple[str, ...]
    hypercircle: OrientedHypergraph


@dataclass(frozen=True)
class CircuitVerdict:
    verdict: str
    reason: str
    decomposition: Optional[HypercircleDecomposition]
    oracle: DependencyCertificate


@dataclass(frozen=True)
class AgreementReport:
    skipped: bool
    reason: str
    verdict: Optional[str] = None
    certificate: Optional[DependencyCertificate] = None
    mismatch: bool = False


@dataclass(frozen=True)
class GeneratorParams:
    """
    Parameters of the seeded random generator.

    Attributes:
        vertex_range: Inclusive (min, max) vertex count
        edge_range: Inclusive (min, max) edge count
        size_weights: Edge size -> relative weight
        sign_bias: Probability that an incidence is +1
        multiplicity_cap: Largest multiplicity of a (vertex, edge) pair
        seed: 64-bit seed
        connected: Retry until the instance is connected
        balanced: Re-sign along a spanning forest so every essential circle is positive
        strict: Strict mode of the emitted hypergraph
    """
    vertex_range: Tuple[int, int] = (1, 6)
    edge_range: Tuple[int, int] = (1, 6)
    size_weights: Tuple[Tuple[int, float], ...] = ((1, 1.0), (2, 4.0), (3, 2.0))
    sign_bias: float = 0.5
    multiplicity_cap: int = 1
    seed: int = 1
    connected: bool = False
    balanced: bool = False
    strict: bool = True


@dataclass(frozen=True)
class HypergraphDocument:
    hypergraph: OrientedHypergraph
    name: Optional[str] = None
    notes: Tuple[str, ...] = ()
    version: int = 1


@dataclass
class CheckResult:
    """Outcome of one verification check."""
    name: str
    checked: int = 0
    skipped: int = 0
    violations: List[str] = field(default_factory=list)
    unknown: int = 0

    @property
    def passed(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        status = "ok" if self.passed else "FAILED"
        return (
            f"{self.name}: {status} checked={self.checked} skipped={self.skipped} "
            f"unknown={self.unknown} violations={len(self.violations)}"
        )
