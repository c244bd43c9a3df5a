"""
Command line interface of the ohg toolkit.
Each subcommand maps to one handler; handlers write to the given streams and
return the exit code (0 ok, 1 negative check, 2 usage or input error, 3
unknown because of a limit).
"""
import argparse
import sys
from contextlib import redirect_stderr, redirect_stdout
from typing import Callable, List, Optional, Sequence, TextIO, Tuple

from ohg import __version__
from ohg.config import settings
from ohg.models.errors import DocumentError, HypergraphError, LimitExceeded, OracleDisagreement
from ohg.models.hypergraph import IncidenceKey, OrientedHypergraph
from ohg.models.results import (
    CIRCUIT,
    UNKNOWN,
    AnalysisLimits,
    GeneratorParams,
    HypergraphDocument,
)
from ohg.models.state import VerifyOptions
from ohg.services.balance_service import is_balanceable, is_balanced
from ohg.services.document_service import parse_document, serialize
from ohg.services.dot_service import dot_export
from ohg.services.flower_service import flower_analysis
from ohg.services.generator_service import random_stream
from ohg.services.hypergraph_service import connected_components, incidence_dual, walk_sign
from ohg.services.linalg_service import incidence_matrix, is_minimally_dependent
from ohg.services.logging_service import get_logging_service
from ohg.services.structure_service import all_circles, classify_circle, cyclomatic_number, structural_inventory
from ohg.services.transform_service import contract_2edge, contract_2vertex, subdivide_edge, switch
from ohg.services.verify_service import run_verification
from ohg.workflows.circuit_graph import classify_balanced_circuit

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_UNKNOWN = 3

_SIGN_TOKENS = {"+": 1, "+1": 1, "1": 1, "-": -1, "-1": -1}


class CommandFailed(Exception):
    """A handler could not run; carries the exit code."""

    def __init__(self, message: str, code: int = EXIT_USAGE):
        self.code = code
        super().__init__(message)


def _limits(args: argparse.Namespace) -> AnalysisLimits:
    return AnalysisLimits(
        max_circle_length=args.max_circle_len,
        max_circles=args.max_circles,
        flower_edge_cap=settings.FLOWER_EDGE_CAP,
        brute_force_incidence_cap=settings.BRUTE_FORCE_INCIDENCE_CAP,
    )


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as handle:
            return handle.read()
    except OSError as e:
        raise CommandFailed(f"cannot read {path}: {e.strerror}")


def _load(path: str, args: argparse.Namespace) -> HypergraphDocument:
    try:
        return parse_document(_read_text(path), strict=args.strict)
    except DocumentError as e:
        raise CommandFailed(f"{path}: {e}")


def _emit(G: OrientedHypergraph, args: argparse.Namespace, out: TextIO, comments: Sequence[str] = ()) -> None:
    if args.format == "dot":
        out.write(dot_export(G))
    else:
        out.write(serialize(G, comments=comments))


def _sign(token: str) -> int:
    if token not in _SIGN_TOKENS:
        raise CommandFailed(f"sign {token!r} is not + or -")
    return _SIGN_TOKENS[token]


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def cmd_validate(args: argparse.Namespace, out: TextIO) -> int:
    try:
        document = parse_document(_read_text(args.file), strict=args.strict)
    except DocumentError as e:
        out.write(f"invalid: {e}\n")
        return EXIT_NEGATIVE
    G = document.hypergraph
    out.write(f"valid: {G.describe()}\n")
    return EXIT_OK


def cmd_analyze(args: argparse.Namespace, out: TextIO) -> int:
    document = _load(args.file, args)
    G = document.hypergraph
    limits = _limits(args)
    code = EXIT_OK
    lines: List[Tuple[str, str]] = []
    if document.name:
        lines.append(("name", document.name))
    lines.extend([
        ("vertices", str(len(G.vertices))),
        ("edges", str(len(G.edges))),
        ("incidences", str(len(G.incidences))),
        ("simple", _yes(G.is_simple())),
        ("components", str(len(connected_components(G)))),
        ("cyclomatic", str(cyclomatic_number(G))),
    ])

    def guarded(label: str, compute: Callable[[], str]) -> None:
        nonlocal code
        try:
            lines.append((label, compute()))
        except LimitExceeded as e:
            lines.append((label, f"{UNKNOWN} ({e})"))
            code = EXIT_UNKNOWN

    guarded("circles", lambda: str(len(all_circles(G, limits))))
    guarded("balanced", lambda: _yes(is_balanced(G, limits)[0]))
    guarded("balanceable", lambda: _yes(is_balanceable(G, limits)[0]))
    guarded("flower", lambda: flower_analysis(G, limits).verdict)
    if lines[-1] == ("flower", UNKNOWN):
        code = EXIT_UNKNOWN
    certificate = is_minimally_dependent(G)
    lines.append(("dependency", f"{certificate.status} nullity={certificate.nullity}"))
    for label, members in structural_inventory(G).as_dict().items():
        rendered = " ".join(f"({m[0]},{m[1]},{m[2]})" if isinstance(m, tuple) else m for m in members)
        lines.append((label.replace("_", "-"), rendered))

    for label, value in lines:
        out.write(f"{label}: {value}".rstrip() + "\n")
    return code


def cmd_matrix(args: argparse.Namespace, out: TextIO) -> int:
    G = _load(args.file, args).hypergraph
    out.write(incidence_matrix(G).render())
    return EXIT_OK


def cmd_dual(args: argparse.Namespace, out: TextIO) -> int:
    G = _load(args.file, args).hypergraph
    _emit(incidence_dual(G), args, out)
    return EXIT_OK


def cmd_switch(args: argparse.Namespace, out: TextIO) -> int:
    G = _load(args.file, args).hypergraph
    _emit(switch(G, {ident: -1 for ident in args.ids}), args, out)
    return EXIT_OK


def _edge_keys(G: OrientedHypergraph, edge: str, tokens: Sequence[str]) -> List[IncidenceKey]:
    keys: List[IncidenceKey] = []
    for token in tokens:
        vertex, _, slot = token.rpartition(":")
        if not slot.isdigit():
            raise CommandFailed(f"incidence {token!r} must read <vertex>:<slot>")
        keys.append((vertex, edge, int(slot)))
    return keys


def cmd_subdivide(args: argparse.Namespace, out: TextIO) -> int:
    G = _load(args.file, args).hypergraph
    first = _edge_keys(G, args.edge, args.first)
    given = set(first)
    second = [inc.key for inc in G.incidences_of(args.edge) if inc.key not in given]
    result = subdivide_edge(G, args.edge, first, second, _sign(args.sign1), _sign(args.sign2))
    comments = [
        f"new vertex {result.new_vertex}, new edges {result.new_edges[0]} {result.new_edges[1]}",
        f"{result.compatibility}, balanced={_yes(result.balanced)}",
    ]
    _emit(result.hypergraph, args, out, comments)
    return EXIT_OK


def cmd_contract(args: argparse.Namespace, out: TextIO) -> int:
    G = _load(args.file, args).hypergraph
    if args.edge:
        H = contract_2edge(G, args.edge, args.merged_id)
    else:
        H = contract_2vertex(G, args.vertex, args.merged_id)
    _emit(H, args, out)
    return EXIT_OK


def cmd_circles(args: argparse.Namespace, out: TextIO) -> int:
    G = _load(args.file, args).hypergraph
    for circle in all_circles(G, _limits(args)):
        kind = classify_circle(G, circle)
        sign = "+" if walk_sign(G, circle) > 0 else "-"
        out.write(f"{sign} {'pure' if kind.pure else 'degenerate'} {circle.length} {circle}\n")
    return EXIT_OK


def cmd_check_circuit(args: argparse.Namespace, out: TextIO) -> int:
    document = _load(args.file, args)
    result = classify_balanced_circuit(document.hypergraph, _limits(args), document.name or args.file)
    out.write(f"{result.verdict}\n")
    out.write(f"reason: {result.reason}\n")
    out.write(f"oracle: {result.oracle.status} nullity={result.oracle.nullity}\n")
    witness = result.decomposition
    if witness is not None:
        out.write(
            f"hypercircle: order={witness.order} pseudo-flowers={len(witness.pseudo_flowers)} "
            f"arteries={len(witness.arteries)} contracted={' '.join(witness.contracted)}".rstrip() + "\n"
        )
    if result.verdict == CIRCUIT:
        return EXIT_OK
    if result.verdict == UNKNOWN:
        return EXIT_UNKNOWN
    return EXIT_NEGATIVE


def cmd_verify(args: argparse.Namespace, out: TextIO) -> int:
    corpus = []
    for path in args.files:
        document = _load(path, args)
        corpus.append((document.name or path, document.hypergraph))
    options = VerifyOptions(
        seed=args.seed,
        count=args.count,
        random_count=args.random_count,
        max_size=args.max_size,
        exhaustive=args.exhaustive,
        workers=args.workers,
        corpus=corpus,
    )
    results = run_verification(options, _limits(args), lambda r: out.write(r.summary() + "\n"))
    violations = sum(len(r.violations) for r in results)
    for r in results:
        for violation in r.violations[: args.show]:
            out.write(f"  {r.name}: {violation}\n")
    out.write(f"total: checks={len(results)} violations={violations}\n")
    return EXIT_OK if violations == 0 else EXIT_NEGATIVE


def _range(text: str) -> Tuple[int, int]:
    low, _, high = text.partition(":")
    try:
        return int(low), int(high or low)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not MIN:MAX")


def _weights(text: str) -> Tuple[Tuple[int, float], ...]:
    weights = []
    for item in text.split(","):
        size, _, weight = item.partition(":")
        try:
            weights.append((int(size), float(weight) if weight else 1.0))
        except ValueError:
            raise argparse.ArgumentTypeError(f"{text!r} is not SIZE:WEIGHT[,SIZE:WEIGHT...]")
    return tuple(weights)


def cmd_random(args: argparse.Namespace, out: TextIO) -> int:
    params = GeneratorParams(
        vertex_range=args.vertices,
        edge_range=args.edges,
        size_weights=args.sizes,
        sign_bias=args.sign_bias,
        multiplicity_cap=args.multiplicity,
        seed=args.seed,
        connected=args.connected,
        balanced=args.balanced,
        strict=args.strict,
    )
    chunks = []
    for seed, G in random_stream(params, args.count):
        chunks.append(dot_export(G, f"random-{seed}") if args.format == "dot" else serialize(G, name=f"random-{seed}"))
    out.write("\n".join(chunks))
    return EXIT_OK


def cmd_dot(args: argparse.Namespace, out: TextIO) -> int:
    out.write(dot_export(_load(args.file, args).hypergraph))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-circle-len", type=int, default=settings.MAX_CIRCLE_LENGTH, metavar="N")
    common.add_argument("--max-circles", type=int, default=settings.MAX_CIRCLES, metavar="N")
    common.add_argument("--strict", action=argparse.BooleanOptionalAction, default=settings.STRICT_MODE)
    common.add_argument("--format", choices=("text", "dot"), default="text")

    parser = argparse.ArgumentParser(prog="ohg", description="Oriented hypergraph toolkit")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    def command(name: str, handler: Callable[[argparse.Namespace, TextIO], int], help_text: str, file_arg: bool = True):
        sub = commands.add_parser(name, parents=[common], help=help_text)
        if file_arg:
            sub.add_argument("file", help="hypergraph document, or - for stdin")
        sub.set_defaults(handler=handler)
        return sub

    command("validate", cmd_validate, "parse and validate a document")
    command("analyze", cmd_analyze, "structural report")
    command("matrix", cmd_matrix, "print the incidence matrix")
    command("dual", cmd_dual, "print the incidence dual")
    sub = command("switch", cmd_switch, "switch the listed vertices and edges")
    sub.add_argument("ids", nargs="+")
    sub = command("subdivide", cmd_subdivide, "subdivide an edge at a new vertex")
    sub.add_argument("edge")
    sub.add_argument("--first", action="append", default=[], metavar="VERTEX:SLOT",
                     help="incidence moved to the first new edge; the rest go to the second")
    sub.add_argument("--sign1", default="+")
    sub.add_argument("--sign2", default="-")
    sub = command("contract", cmd_contract, "2-edge or 2-vertex contraction")
    target = sub.add_mutually_exclusive_group(required=True)
    target.add_argument("--edge")
    target.add_argument("--vertex")
    sub.add_argument("--merged-id")
    command("circles", cmd_circles, "list circles with sign and purity")
    command("check-circuit", cmd_check_circuit, "classify as balanced circuit and compare with the oracle")
    sub = command("verify", cmd_verify, "run the property suite", file_arg=False)
    sub.add_argument("files", nargs="*", help="documents checked in addition to the generated streams")
    sub.add_argument("--seed", type=int, default=settings.VERIFY_SEED)
    sub.add_argument("--count", type=int, default=settings.VERIFY_COUNT)
    sub.add_argument("--random-count", type=int, default=settings.VERIFY_RANDOM_COUNT)
    sub.add_argument("--max-size", type=int, default=settings.VERIFY_MAX_SIZE)
    sub.add_argument("--exhaustive", action="store_true")
    sub.add_argument("--workers", type=int, default=settings.VERIFY_WORKERS)
    sub.add_argument("--show", type=int, default=5, help="violations printed per check")
    sub = command("random", cmd_random, "emit seeded random documents", file_arg=False)
    sub.add_argument("--seed", type=int, default=1)
    sub.add_argument("--count", type=int, default=1)
    sub.add_argument("--vertices", type=_range, default=(1, 6), metavar="MIN:MAX")
    sub.add_argument("--edges", type=_range, default=(1, 6), metavar="MIN:MAX")
    sub.add_argument("--sizes", type=_weights, default=((1, 1.0), (2, 4.0), (3, 2.0)), metavar="SIZE:WEIGHT,...")
    sub.add_argument("--sign-bias", type=float, default=0.5)
    sub.add_argument("--multiplicity", type=int, default=1)
    sub.add_argument("--connected", action="store_true")
    sub.add_argument("--balanced", action="store_true")
    command("dot", cmd_dot, "DOT export of the incidence graph")
    return parser


def run(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None, err: Optional[TextIO] = None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        with redirect_stdout(out), redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exit_:
        return int(exit_.code or 0)

    try:
        return args.handler(args, out)
    except LimitExceeded as e:
        err.write(f"{UNKNOWN}: {e}\n")
        code = EXIT_UNKNOWN
        message = str(e)
    except OracleDisagreement as e:
        err.write(f"error: {e}\n")
        code = EXIT_NEGATIVE
        message = str(e)
    except (CommandFailed, HypergraphError, ValueError) as e:
        err.write(f"error: {e}\n")
        code = getattr(e, "code", EXIT_USAGE)
        message = str(e)
    get_logging_service().create_log_entry("CommandError", command=args.command, verdict=str(code), textContent=message)
    return code


def main() -> None:
    sys.exit(run())
