"""
Balance, balanceability and the matrix view of balance.
"""
from itertools import combinations
from typing import FrozenSet, Iterable, Optional, Sequence, Tuple, Union

from ohg.models.errors import LimitExceeded, ParityViolation
from ohg.models.hypergraph import IncidenceKey, OrientedHypergraph, Walk, build
from ohg.models.results import AnalysisLimits, IncidenceMatrix, Theta, resolve_limits
from ohg.services.hypergraph_service import is_connected, walk_sign
from ohg.services.linalg_service import incidence_matrix, matrix_to_hypergraph
from ohg.services.structure_service import (
    all_circles,
    classify_circle,
    has_cross_theta,
    iter_circles,
    longest_possible_circle,
)


def is_balanced(
    G: OrientedHypergraph,
    limits: Optional[AnalysisLimits] = None,
) -> Tuple[bool, Optional[Walk]]:
    """True when every circle is positive; otherwise the first negative circle found."""
    limits = resolve_limits(limits)
    if longest_possible_circle(G) > limits.max_circle_length:
        raise LimitExceeded("max_circle_length", limits.max_circle_length)
    seen = 0
    for circle in iter_circles(G, limits.max_circle_length):
        seen += 1
        if seen > limits.max_circles:
            raise LimitExceeded("max_circles", limits.max_circles)
        if walk_sign(G, circle) < 0:
            return False, circle
    return True, None


def is_balanceable(
    G: OrientedHypergraph,
    limits: Optional[AnalysisLimits] = None,
) -> Tuple[bool, Optional[Theta]]:
    """Balanceable exactly when there is no cross-theta; the witness is returned otherwise."""
    found, witness = has_cross_theta(G, limits)
    return (not found), witness


def flip_incidences(G: OrientedHypergraph, keys: Iterable[IncidenceKey]) -> OrientedHypergraph:
    """Negate the given incidences. The result is non-strict when a pair ends up with mixed signs."""
    flipped = {tuple(key) for key in keys}
    incidences = [inc.with_sign(-inc.sign) if inc.key in flipped else inc for inc in G.incidences]
    return build(G.vertices, G.edges, incidences, strict=False)


def brute_force_balanceable(
    G: OrientedHypergraph,
    limits: Optional[AnalysisLimits] = None,
) -> Optional[FrozenSet[IncidenceKey]]:
    """
    Try every incidence subset, smallest first, and return the first whose
    negation makes all circles positive; None when no subset works.
    """
    limits = resolve_limits(limits)
    cap = limits.brute_force_incidence_cap
    if len(G.incidences) > cap:
        raise LimitExceeded("brute_force_incidence_cap", cap)
    keys = [inc.key for inc in G.incidences]
    index = {key: i for i, key in enumerate(keys)}
    circles = [
        (sum(1 << index[key] for key in circle.incidences), walk_sign(G, circle))
        for circle in all_circles(G, limits)
    ]
    for size in range(len(keys) + 1):
        for chosen in combinations(range(len(keys)), size):
            mask = sum(1 << i for i in chosen)
            if all((-1 if bin(mask & bits).count("1") % 2 else 1) * sign == 1 for bits, sign in circles):
                return frozenset(keys[i] for i in chosen)
    return None


def hole_submatrix(G: OrientedHypergraph, C: Walk) -> IncidenceMatrix:
    """Rows of the circle's vertices and columns of its edges, in circle order."""
    return incidence_matrix(G).submatrix(C.vertices, C.edges)


def hole_parity(M: IncidenceMatrix) -> int:
    """Entry sum modulo 4: 0 for an even hole, 2 for an odd one."""
    return M.entry_sum() % 4


def is_hole_matrix(M: IncidenceMatrix) -> bool:
    """Square, two nonzeros in every row and column, and a single cycle."""
    rows, cols = M.shape
    if rows != cols or rows == 0:
        return False
    if any(sum(1 for x in row if x) != 2 for row in M.entries):
        return False
    if any(sum(1 for row in M.entries if row[j]) != 2 for j in range(cols)):
        return False
    return is_connected(matrix_to_hypergraph(M))


def matrix_is_balanced(
    M: Union[IncidenceMatrix, Sequence[Sequence[int]]],
    limits: Optional[AnalysisLimits] = None,
) -> Tuple[bool, Optional[IncidenceMatrix]]:
    """
    A {0,+1,-1}-matrix is balanced when every pure circle of its hypergraph is
    positive. On failure the odd hole of a negative pure circle is returned.

    Raises:
        ParityViolation: when a negative pure circle yields an even hole
        LimitExceeded: when the circles cannot all be enumerated
    """
    G = matrix_to_hypergraph(M)
    for circle in all_circles(G, limits):
        kind = classify_circle(G, circle)
        if kind.pure and kind.sign < 0:
            hole = hole_submatrix(G, circle)
            if hole_parity(hole) != 2:
                raise ParityViolation(f"negative pure circle {circle} gives an even hole")
            return False, hole
    return True, None
