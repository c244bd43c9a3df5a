"""
Exact linear algebra over the incidence matrix.

Rank and nullspace come from fraction-free (Bareiss) elimination on Python
integers; back substitution uses Fractions. Nothing here touches floating
point.
"""
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import sympy

from ohg.models.errors import BadEntries
from ohg.models.hypergraph import Incidence, OrientedHypergraph, build
from ohg.models.results import (
    DEPENDENT_NOT_MINIMAL,
    INDEPENDENT,
    MINIMALLY_DEPENDENT,
    DependencyCertificate,
    IncidenceMatrix,
)

MatrixSource = Union[OrientedHypergraph, IncidenceMatrix]


def incidence_matrix(G: OrientedHypergraph) -> IncidenceMatrix:
    """eta[v][e] is the sum of the signs of all incidences joining v and e."""
    row_of = {v: i for i, v in enumerate(G.vertices)}
    col_of = {e: j for j, e in enumerate(G.edges)}
    table = [[0] * len(G.edges) for _ in G.vertices]
    for inc in G.incidences:
        table[row_of[inc.vertex]][col_of[inc.edge]] += inc.sign
    return IncidenceMatrix(G.vertices, G.edges, tuple(tuple(row) for row in table))


def _echelon(entries: Sequence[Sequence[int]], width: int) -> Tuple[List[List[int]], List[int]]:
    """
    Bareiss elimination. Returns the echelon rows (pivot rows first) and the
    pivot columns. Pivot: first nonzero entry at or below the current row.
    """
    rows = [list(row) for row in entries]
    height = len(rows)
    pivots: List[int] = []
    previous = 1
    r = 0
    for c in range(width):
        if r == height:
            break
        found = next((i for i in range(r, height) if rows[i][c] != 0), None)
        if found is None:
            continue
        rows[r], rows[found] = rows[found], rows[r]
        pivot = rows[r][c]
        for i in range(r + 1, height):
            factor = rows[i][c]
            for j in range(c + 1, width):
                rows[i][j] = (pivot * rows[i][j] - factor * rows[r][j]) // previous
            rows[i][c] = 0
        previous = pivot
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def _as_matrix(source: MatrixSource) -> IncidenceMatrix:
    if isinstance(source, OrientedHypergraph):
        return incidence_matrix(source)
    return source


def rank_nullity(M: MatrixSource) -> Tuple[int, int]:
    matrix = _as_matrix(M)
    width = len(matrix.column_labels)
    _, pivots = _echelon(matrix.entries, width)
    return len(pivots), width - len(pivots)


def _normalize(vector: Sequence[Fraction]) -> Tuple[int, ...]:
    denominator = 1
    for x in vector:
        denominator = denominator * x.denominator // gcd(denominator, x.denominator)
    scaled = [int(x * denominator) for x in vector]
    content = 0
    for x in scaled:
        content = gcd(content, abs(x))
    if content:
        scaled = [x // content for x in scaled]
    leading = next((x for x in scaled if x != 0), 0)
    if leading < 0:
        scaled = [-x for x in scaled]
    return tuple(scaled)


def nullspace_basis(M: MatrixSource) -> List[Tuple[int, ...]]:
    """
    Integer nullspace basis, one vector per free column: denominators cleared,
    content reduced, first nonzero coordinate positive.
    """
    matrix = _as_matrix(M)
    width = len(matrix.column_labels)
    rows, pivots = _echelon(matrix.entries, width)
    pivot_set = set(pivots)
    basis = []
    for free in range(width):
        if free in pivot_set:
            continue
        x = [Fraction(0)] * width
        x[free] = Fraction(1)
        for t in range(len(pivots) - 1, -1, -1):
            p = pivots[t]
            total = sum((Fraction(rows[t][j]) * x[j] for j in range(p + 1, width)), Fraction(0))
            x[p] = -total / rows[t][p]
        basis.append(_normalize(x))
    return basis


def is_minimally_dependent(
    source: MatrixSource,
    columns: Optional[Iterable[str]] = None,
) -> DependencyCertificate:
    """
    Decide whether the selected columns form a minimal dependency.

    Args:
        source: Hypergraph or incidence matrix
        columns: Column labels to test (all columns when omitted)

    Returns:
        DependencyCertificate; the generator is present exactly when nullity is 1
    """
    matrix = _as_matrix(source)
    if columns is not None:
        matrix = matrix.select_columns(columns)
    _, nullity = rank_nullity(matrix)
    generator = None
    if nullity == 0:
        status = INDEPENDENT
    else:
        status = DEPENDENT_NOT_MINIMAL
        if nullity == 1:
            generator = nullspace_basis(matrix)[0]
            if all(x != 0 for x in generator):
                status = MINIMALLY_DEPENDENT
    return DependencyCertificate(status, nullity, generator, matrix.column_labels)


def sympy_rank(matrix: IncidenceMatrix) -> int:
    rows, cols = matrix.shape
    if rows == 0 or cols == 0:
        return 0
    return int(sympy.Matrix([list(row) for row in matrix.entries]).rank())


def brute_force_minimally_dependent(
    source: MatrixSource,
    columns: Optional[Iterable[str]] = None,
) -> bool:
    """
    Circuit test straight from the definition, with ranks from sympy: the
    columns are dependent and dropping any one of them leaves them independent.
    """
    matrix = _as_matrix(source)
    labels = tuple(columns) if columns is not None else matrix.column_labels
    k = len(labels)
    if k == 0 or sympy_rank(matrix.select_columns(labels)) == k:
        return False
    return all(
        sympy_rank(matrix.select_columns(subset)) == k - 1
        for subset in combinations(labels, k - 1)
    )


def matrix_to_hypergraph(M: Union[IncidenceMatrix, Sequence[Sequence[int]]]) -> OrientedHypergraph:
    """The simple oriented hypergraph of a {0,+1,-1}-matrix: rows are vertices, columns edges."""
    matrix = M if isinstance(M, IncidenceMatrix) else IncidenceMatrix.from_rows(M)
    incidences = []
    for v, row in zip(matrix.row_labels, matrix.entries):
        for e, x in zip(matrix.column_labels, row):
            if x not in (0, 1, -1):
                raise BadEntries(f"entry {x!r} at ({v}, {e}) is not in {{0, +1, -1}}")
            if x:
                incidences.append(Incidence(v, e, 1, x))
    return build(matrix.row_labels, matrix.column_labels, incidences)
