"""
Executable checks of the toolkit's theorems.

Every check returns a CheckResult; run_verification runs the whole suite and
logs one VerifyCheck entry per check and one VerifyViolation entry per
violation.
"""
import random
from dataclasses import replace
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations
from typing import Callable, Dict, Iterable, List, Optional, Tuple

from ohg.config import settings
from ohg.models.errors import HypergraphError, LimitExceeded
from ohg.models.hypergraph import OrientedHypergraph, build
from ohg.models.results import (
    CROSS_THETA,
    EDGE_THETA,
    UNKNOWN,
    VERTEX_THETA,
    AnalysisLimits,
    CheckResult,
    GeneratorParams,
    resolve_limits,
)
from ohg.models.state import VerifyOptions
from ohg.classifier.hypercircle import recognize_hypercircle
from ohg.services.balance_service import brute_force_balanceable, is_balanced
from ohg.services.document_service import parse, serialize
from ohg.services.generator_service import (
    cross_theta_shape,
    edge_theta_shape,
    enumerate_supports,
    exhaustive_balanced_family,
    random_instance,
    random_stream,
    vertex_theta_shape,
)
from ohg.services.hypergraph_service import dual_walk, incidence_dual, walk_sign
from ohg.services.linalg_service import (
    brute_force_minimally_dependent,
    is_minimally_dependent,
    rank_nullity,
)
from ohg.services.logging_service import get_logging_service
from ohg.services.structure_service import (
    all_circles,
    classify_circle,
    cyclomatic_forms,
    cyclomatic_number,
    essential_circles,
    find_thetas,
    has_cross_theta,
    theta_circles,
)
from ohg.services.transform_service import contract_2vertex, subdivide_edge, switch
from ohg.workflows.circuit_graph import cross_validate

RANDOM_TIER = GeneratorParams(vertex_range=(1, 7), edge_range=(1, 7), connected=True, balanced=True)
INVARIANCE_STREAM = GeneratorParams(vertex_range=(1, 6), edge_range=(1, 6))
ORACLE_STREAM = GeneratorParams(vertex_range=(1, 5), edge_range=(1, 6), multiplicity_cap=2, strict=False)
BALANCEABILITY_MAX_SIZE = 6
BALANCEABILITY_MAX_MULTIPLICITY = 3
BALANCEABILITY_MAX_INCIDENCES = 10
ORACLE_FRACTION = 10


def _label(G: OrientedHypergraph) -> str:
    return serialize(G).replace("\n", "; ")


def check_corpus(corpus: Iterable[Tuple[str, OrientedHypergraph]], limits: AnalysisLimits) -> CheckResult:
    """Round trip and classifier/oracle agreement on named hypergraphs."""
    result = CheckResult("corpus")
    for name, G in corpus:
        result.checked += 1
        if parse(serialize(G), strict=G.strict) != G:
            result.violations.append(f"{name}: document round trip changed the hypergraph")
        report = cross_validate(G, limits, name)
        if report.mismatch:
            result.violations.append(f"{name}: {report.reason}")
        elif report.skipped:
            result.skipped += 1
    return result


def check_classification_exhaustive(max_size: int, limits: AnalysisLimits) -> CheckResult:
    result = CheckResult(f"classification exhaustive |V|+|E|<={max_size}")
    for G in exhaustive_balanced_family(max_size, limits):
        result.checked += 1
        report = cross_validate(G, limits)
        if report.mismatch:
            result.violations.append(f"{report.reason}: {_label(G)}")
        elif report.verdict == UNKNOWN or report.skipped:
            result.unknown += 1
            result.violations.append(f"unknown on the exhaustive tier ({report.reason}): {_label(G)}")
    return result


def _classify_seed(seed: int, limits: AnalysisLimits) -> Tuple[str, str]:
    """One random-tier instance: ('ok' | 'skipped' | 'unknown' | 'mismatch', message)."""
    G = random_instance(replace(RANDOM_TIER, seed=seed))
    report = cross_validate(G, limits, f"seed-{seed}")
    if report.mismatch:
        return "mismatch", f"seed {seed}: {report.reason}"
    if report.verdict == UNKNOWN:
        return "unknown", report.reason
    if report.skipped:
        return "skipped", report.reason
    return "ok", ""


def check_classification_random(seed: int, count: int, limits: AnalysisLimits, workers: int = 1) -> CheckResult:
    """Seeded random balanced instances with |V|+|E| <= 14; results in seed order."""
    result = CheckResult(f"classification random count={count}")
    seeds = list(range(seed, seed + count))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(_classify_seed, seeds, [limits] * len(seeds)))
    else:
        outcomes = [_classify_seed(s, limits) for s in seeds]
    for status, message in outcomes:
        if status == "skipped":
            result.skipped += 1
            continue
        result.checked += 1
        if status == "unknown":
            result.unknown += 1
        elif status == "mismatch":
            result.violations.append(message)
    return result


def _signings(G: OrientedHypergraph) -> Iterable[OrientedHypergraph]:
    n = len(G.incidences)
    for mask in range(1 << n):
        yield build(
            G.vertices,
            G.edges,
            [inc.with_sign(-1 if mask >> i & 1 else 1) for i, inc in enumerate(G.incidences)],
            strict=False,
        )


def check_theta_parity(limits: AnalysisLimits) -> CheckResult:
    """
    Over every signing of a fixed theta, the number of negative circles among
    its three circles is even for vertex- and edge-thetas and odd for
    cross-thetas.
    """
    result = CheckResult("theta parity")
    for shape, kind, parity in (
        (vertex_theta_shape(), VERTEX_THETA, 0),
        (edge_theta_shape(), EDGE_THETA, 0),
        (cross_theta_shape(), CROSS_THETA, 1),
    ):
        theta = next((t for t in find_thetas(shape, limits) if t.kind == kind), None)
        if theta is None:
            result.violations.append(f"no {kind} found in its shape")
            continue
        circles = theta_circles(theta)
        for signed in _signings(shape):
            result.checked += 1
            negatives = sum(1 for circle in circles if walk_sign(signed, circle) < 0)
            if negatives % 2 != parity:
                result.violations.append(f"{kind}: {negatives} negative circles in {_label(signed)}")
    return result


def check_balanceability(limits: AnalysisLimits) -> CheckResult:
    """
    No cross-theta exactly when some incidence flip set balances; every
    balanceable support has multiplicities <= 2. Supports run over matrices
    with entries up to 3 and at most 10 incidences.
    """
    result = CheckResult("balanceability")
    for G in enumerate_supports(
        BALANCEABILITY_MAX_SIZE, BALANCEABILITY_MAX_MULTIPLICITY, BALANCEABILITY_MAX_INCIDENCES
    ):
        try:
            crossed, _ = has_cross_theta(G, limits)
            flips = brute_force_balanceable(G, limits)
        except LimitExceeded:
            result.unknown += 1
            continue
        result.checked += 1
        if crossed == (flips is not None):
            result.violations.append(f"cross-theta={crossed} but flip set={flips}: {_label(G)}")
        if flips is not None and any(G.multiplicity(inc.vertex, inc.edge) > 2 for inc in G.incidences):
            result.violations.append(f"balanceable with multiplicity above 2: {_label(G)}")
    return result


def _circle_signs(G: OrientedHypergraph, limits: AnalysisLimits) -> Dict[Tuple, int]:
    return {circle.incidences: walk_sign(G, circle) for circle in all_circles(G, limits)}


def _switching(rng: random.Random, ids: Iterable[str]) -> Dict[str, int]:
    return {ident: rng.choice((1, -1)) for ident in ids}


def _compatible_2vertex(G: OrientedHypergraph, v: str) -> bool:
    at = G.incidences_at(v)
    return len(at) == 2 and at[0].edge != at[1].edge and at[0].sign * at[1].sign == -1


def check_invariance(seed: int, count: int, limits: AnalysisLimits) -> CheckResult:
    """
    Circle signs under vertex and edge switching; minimal-dependency status
    under switching, compatible subdivision, balanced subdivision and
    compatible 2-vertex contraction.
    """
    result = CheckResult(f"invariance count={count}")
    rng = random.Random(seed)
    for instance_seed, G in random_stream(replace(INVARIANCE_STREAM, seed=seed), count):
        try:
            signs = _circle_signs(G, limits)
        except LimitExceeded:
            result.unknown += 1
            continue
        result.checked += 1
        status = is_minimally_dependent(G).status
        where = f"seed {instance_seed}"

        for label, theta in (
            ("vertex switching", _switching(rng, G.vertices)),
            ("edge switching", _switching(rng, G.edges)),
        ):
            switched = switch(G, theta)
            if _circle_signs(switched, limits) != signs:
                result.violations.append(f"{where}: circle signs changed under {label}")
            if is_minimally_dependent(switched).status != status:
                result.violations.append(f"{where}: dependency status changed under {label}")

        if G.edges:
            e = rng.choice(G.edges)
            keys = [inc.key for inc in G.incidences_of(e)]
            cut = rng.randint(0, len(keys))
            first, second = keys[:cut], keys[cut:]
            s = rng.choice((1, -1))
            compatible = subdivide_edge(G, e, first, second, s, -s)
            if is_minimally_dependent(compatible.hypergraph).status != status:
                result.violations.append(f"{where}: compatible subdivision of {e!r} changed the status")
            incompatible = subdivide_edge(G, e, first, second, s, s)
            if incompatible.balanced and is_minimally_dependent(incompatible.hypergraph).status != status:
                result.violations.append(f"{where}: balanced subdivision of {e!r} changed the status")

        compatible_vertices = [v for v in G.vertices if _compatible_2vertex(G, v)]
        if compatible_vertices:
            v = rng.choice(compatible_vertices)
            contracted = contract_2vertex(G, v)
            if is_minimally_dependent(contracted).status != status:
                result.violations.append(f"{where}: contracting compatible vertex {v!r} changed the status")
    return result


def _rank_law_violations(G: OrientedHypergraph) -> List[str]:
    problems = []
    rank, nullity = rank_nullity(G)
    phi = cyclomatic_number(G)
    forms = cyclomatic_forms(G)
    if rank != len(G.vertices) - phi or nullity != 1:
        problems.append(f"rank {rank} nullity {nullity} with |V|={len(G.vertices)} phi={phi}")
    if len(set(forms)) != 1 or forms[0] != phi:
        problems.append(f"cyclomatic forms disagree: {forms} vs {phi}")
    if len(essential_circles(G)) != phi:
        problems.append(f"{len(essential_circles(G))} essential circles for phi={phi}")
    return problems


def check_rank_law(max_size: int, seed: int, count: int, limits: AnalysisLimits) -> CheckResult:
    """Exact rank |V| - phi and nullity 1 for every balanced hypercircle or subdivision of one met."""
    result = CheckResult("rank law")
    candidates: List[OrientedHypergraph] = list(exhaustive_balanced_family(max_size, limits))
    for _, G in random_stream(replace(RANDOM_TIER, seed=seed), count):
        candidates.append(G)
    for G in candidates:
        try:
            if not is_balanced(G, limits)[0]:
                continue
            if recognize_hypercircle(G, limits) is None:
                continue
        except LimitExceeded:
            result.unknown += 1
            continue
        result.checked += 1
        result.violations.extend(f"{problem}: {_label(G)}" for problem in _rank_law_violations(G))
    return result


def check_duality(seed: int, count: int, limits: AnalysisLimits) -> CheckResult:
    """Circle sign and purity, the cyclomatic number and cross-thetas survive incidence duality."""
    result = CheckResult(f"duality count={count}")
    for instance_seed, G in random_stream(replace(INVARIANCE_STREAM, seed=seed), count):
        where = f"seed {instance_seed}"
        dual = incidence_dual(G)
        try:
            circles = all_circles(G, limits)
            crossed = has_cross_theta(G, limits)[0]
            dual_crossed = has_cross_theta(dual, limits)[0]
        except LimitExceeded:
            result.unknown += 1
            continue
        result.checked += 1
        if incidence_dual(dual) != G:
            result.violations.append(f"{where}: dual of the dual differs")
        if cyclomatic_number(dual) != cyclomatic_number(G):
            result.violations.append(f"{where}: cyclomatic number changed")
        if crossed != dual_crossed:
            result.violations.append(f"{where}: cross-theta did not survive duality")
        for circle in circles:
            if classify_circle(dual, dual_walk(circle)) != classify_circle(G, circle):
                result.violations.append(f"{where}: circle {circle} changed sign or purity")
    return result


def check_oracle(seed: int, count: int) -> CheckResult:
    """
    Nullity 1 with full support agrees with the definition on every column
    subset of small non-strict instances (up to 6 edges, multiplicity <= 2).
    """
    result = CheckResult(f"oracle self-check count={count}")
    for instance_seed, G in random_stream(replace(ORACLE_STREAM, seed=seed), count):
        for size in range(1, len(G.edges) + 1):
            for columns in combinations(G.edges, size):
                result.checked += 1
                fast = is_minimally_dependent(G, columns).is_circuit
                slow = brute_force_minimally_dependent(G, columns)
                if fast != slow:
                    result.violations.append(
                        f"seed {instance_seed} columns {columns}: nullity test {fast}, definition {slow}"
                    )
    return result


def default_options() -> VerifyOptions:
    return VerifyOptions(
        seed=settings.VERIFY_SEED,
        count=settings.VERIFY_COUNT,
        random_count=settings.VERIFY_RANDOM_COUNT,
        max_size=settings.VERIFY_MAX_SIZE,
        exhaustive=True,
        workers=settings.VERIFY_WORKERS,
        corpus=[],
    )


def run_verification(
    options: Optional[VerifyOptions] = None,
    limits: Optional[AnalysisLimits] = None,
    on_result: Optional[Callable[[CheckResult], None]] = None,
) -> List[CheckResult]:
    """
    Run the whole suite. on_result is called after each check so callers can
    stream the summary lines.
    """
    options = {**default_options(), **(options or {})}  # type: ignore[assignment]
    limits = resolve_limits(limits)
    seed, count = options["seed"], options["count"]

    checks: List[Tuple[str, Callable[[], CheckResult]]] = []
    if options["corpus"]:
        checks.append(("corpus", lambda: check_corpus(options["corpus"], limits)))
    if options["exhaustive"]:
        checks.append(("classification exhaustive", lambda: check_classification_exhaustive(options["max_size"], limits)))
    checks.extend([
        ("classification random", lambda: check_classification_random(seed, options["random_count"], limits, options["workers"])),
        ("theta parity", lambda: check_theta_parity(limits)),
        ("balanceability", lambda: check_balanceability(limits)),
        ("invariance", lambda: check_invariance(seed, count, limits)),
        ("rank law", lambda: check_rank_law(min(options["max_size"], 7), seed, count, limits)),
        ("duality", lambda: check_duality(seed, count, limits)),
        ("oracle self-check", lambda: check_oracle(seed, max(1, count // ORACLE_FRACTION))),
    ])

    logger = get_logging_service()
    results = []
    for name, check in checks:
        try:
            result = check()
        except HypergraphError as exc:
            result = CheckResult(name, violations=[f"aborted: {exc}"])
        for violation in result.violations:
            logger.create_log_entry("VerifyViolation", command="verify", verdict=result.name, textContent=violation)
        logger.create_log_entry(
            "VerifyCheck",
            command="verify",
            verdict="ok" if result.passed else "failed",
            textContent=result.summary(),
            details={"checked": result.checked, "skipped": result.skipped, "unknown": result.unknown},
        )
        results.append(result)
        if on_result is not None:
            on_result(result)
    return results
