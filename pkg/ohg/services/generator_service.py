"""
Instance generation: the seeded random generator, the exhaustive enumerator of
small supports and a few fixed theta shapes.
"""
import random
from dataclasses import replace
from itertools import product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from ohg.models.errors import InfeasibleParams, LimitExceeded
from ohg.models.hypergraph import Incidence, OrientedHypergraph, build, has_mixed_signs
from ohg.models.results import AnalysisLimits, GeneratorParams, resolve_limits
from ohg.services.balance_service import is_balanced
from ohg.services.hypergraph_service import is_connected
from ohg.services.structure_service import essential_circle_basis

CONNECT_ATTEMPTS = 1000


def _check_params(params: GeneratorParams) -> None:
    for label, (low, high) in (("vertex_range", params.vertex_range), ("edge_range", params.edge_range)):
        if low < 0 or high < low:
            raise InfeasibleParams(f"{label} {low}..{high} is empty or negative")
    if not params.size_weights or any(size < 0 or weight <= 0 for size, weight in params.size_weights):
        raise InfeasibleParams("size_weights needs sizes >= 0 with positive weights")
    if not 0.0 <= params.sign_bias <= 1.0:
        raise InfeasibleParams("sign_bias must lie in [0, 1]")
    if params.multiplicity_cap < 1:
        raise InfeasibleParams("multiplicity_cap must be at least 1")
    if params.balanced and params.strict and params.multiplicity_cap > 1:
        raise InfeasibleParams("balanced strict instances cannot repeat a (vertex, edge) pair")
    if params.connected and params.vertex_range[1] == 0 and params.edge_range[0] > 1:
        raise InfeasibleParams("several edges without vertices are never connected")


def _draw(rng: random.Random, params: GeneratorParams) -> OrientedHypergraph:
    nv = rng.randint(*params.vertex_range)
    ne = rng.randint(*params.edge_range)
    vertices = [f"v{i}" for i in range(1, nv + 1)]
    edges = [f"e{j}" for j in range(1, ne + 1)]
    sizes = [size for size, _ in params.size_weights]
    weights = [weight for _, weight in params.size_weights]
    pool = [v for v in vertices for _ in range(params.multiplicity_cap)]
    position = {v: i for i, v in enumerate(vertices)}

    incidences: List[Incidence] = []
    for e in edges:
        size = min(rng.choices(sizes, weights)[0], len(pool))
        members = sorted(rng.sample(pool, size), key=position.__getitem__)
        counts: Dict[str, int] = {}
        pair_sign: Dict[str, int] = {}
        for v in members:
            counts[v] = counts.get(v, 0) + 1
            sign = 1 if rng.random() < params.sign_bias else -1
            if params.strict:
                sign = pair_sign.setdefault(v, sign)
            incidences.append(Incidence(v, e, counts[v], sign))
    return build(vertices, edges, incidences, strict=params.strict)


def random_instance(params: GeneratorParams) -> OrientedHypergraph:
    """
    Deterministic for a fixed params value: the same seed gives the same
    hypergraph on every platform.

    Raises:
        InfeasibleParams: when the parameters admit no instance
    """
    _check_params(params)
    rng = random.Random(params.seed)
    for _ in range(CONNECT_ATTEMPTS):
        G = _draw(rng, params)
        if params.connected and not is_connected(G):
            continue
        return canonical_signing(G) if params.balanced else G
    raise InfeasibleParams(f"no connected instance after {CONNECT_ATTEMPTS} attempts")


def random_stream(params: GeneratorParams, count: int) -> Iterator[Tuple[int, OrientedHypergraph]]:
    """count instances with seeds params.seed, params.seed + 1, ..."""
    for offset in range(count):
        seed = params.seed + offset
        yield seed, random_instance(replace(params, seed=seed))


def canonical_signing(G: OrientedHypergraph) -> OrientedHypergraph:
    """
    Sign every spanning-forest incidence +1 and each closing incidence so that
    its essential circle is positive. Up to switching this is the only
    candidate for a balanced signing of the support. When the forced signs
    differ on one (vertex, edge) pair the result is non-strict.
    """
    forced = {key: (-1) ** circle.length for key, circle in essential_circle_basis(G)}
    incidences = [inc.with_sign(forced.get(inc.key, 1)) for inc in G.incidences]
    return build(G.vertices, G.edges, incidences, strict=G.strict and not has_mixed_signs(incidences))


def _doubly_lexical(rows: int, columns: int, top: int, max_incidences: Optional[int]) -> Iterator[Tuple[Tuple[int, ...], ...]]:
    """Matrices over 0..top with rows and columns both in non-increasing lexicographic order."""
    candidates = sorted(product(range(top + 1), repeat=columns), reverse=True)

    def grow(
        chosen: List[Tuple[int, ...]],
        start: int,
        ties: Tuple[bool, ...],
        used: int,
    ) -> Iterator[Tuple[Tuple[int, ...], ...]]:
        if len(chosen) == rows:
            yield tuple(chosen)
            return
        for index in range(start, len(candidates)):
            row = candidates[index]
            weight = used + sum(row)
            if max_incidences is not None and weight > max_incidences:
                continue
            if any(tie and row[j] < row[j + 1] for j, tie in enumerate(ties)):
                continue
            following = tuple(tie and row[j] == row[j + 1] for j, tie in enumerate(ties))
            chosen.append(row)
            yield from grow(chosen, index, following, weight)
            chosen.pop()

    yield from grow([], 0, (True,) * max(columns - 1, 0), 0)


def _support(matrix: Sequence[Sequence[int]], columns: int) -> OrientedHypergraph:
    vertices = [f"v{i}" for i in range(1, len(matrix) + 1)]
    edges = [f"e{j}" for j in range(1, columns + 1)]
    incidences = [
        Incidence(v, e, slot, 1)
        for e_index, e in enumerate(edges)
        for v, row in zip(vertices, matrix)
        for slot in range(1, row[e_index] + 1)
    ]
    return build(vertices, edges, incidences)


def enumerate_supports(
    max_size: int,
    max_multiplicity: int = 1,
    max_incidences: Optional[int] = None,
) -> Iterator[OrientedHypergraph]:
    """
    Connected supports with |V| + |E| <= max_size, all incidences +1, one per
    doubly lexical multiplicity matrix. Every support appears at least once up
    to renaming; some appear more than once.
    """
    if max_size < 1 or max_multiplicity < 1:
        raise InfeasibleParams("max_size and max_multiplicity must be positive")
    for total in range(1, max_size + 1):
        for nv in range(total + 1):
            ne = total - nv
            for matrix in _doubly_lexical(nv, ne, max_multiplicity, max_incidences):
                G = _support(matrix, ne)
                if is_connected(G):
                    yield G


def exhaustive_balanced_family(
    max_size: int,
    limits: Optional[AnalysisLimits] = None,
) -> Iterator[OrientedHypergraph]:
    """Connected strict balanced hypergraphs up to switching and renaming, |V| + |E| <= max_size."""
    limits = resolve_limits(limits)
    for support in enumerate_supports(max_size):
        G = canonical_signing(support)
        try:
            balanced, _ = is_balanced(G, limits)
        except LimitExceeded:
            continue
        if balanced:
            yield G


def vertex_theta_shape() -> OrientedHypergraph:
    """Two vertices joined by three parallel 2-edges."""
    return build(
        ["a", "b"],
        ["x", "y", "z"],
        [(v, e, 1, 1) for e in ("x", "y", "z") for v in ("a", "b")],
    )


def edge_theta_shape() -> OrientedHypergraph:
    """Two 3-edges on the same three vertices."""
    return build(
        ["a", "b", "c"],
        ["x", "y"],
        [(v, e, 1, 1) for e in ("x", "y") for v in ("a", "b", "c")],
    )


def cross_theta_shape() -> OrientedHypergraph:
    """A vertex joined to a 3-edge by three internally disjoint paths."""
    incidences = [("h", f"f{i}", 1, 1) for i in (1, 2, 3)]
    incidences += [(f"x{i}", f"f{i}", 1, 1) for i in (1, 2, 3)]
    incidences += [(f"x{i}", "e", 1, 1) for i in (1, 2, 3)]
    return build(["h", "x1", "x2", "x3"], ["f1", "f2", "f3", "e"], incidences)
