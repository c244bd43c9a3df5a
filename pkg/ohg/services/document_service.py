"""
The line-oriented hypergraph document format.

    ohg 1
    # comment
    m name triangle
    m note any free text
    v a
    e x
    i a x 1 +

The version line comes first; `v` and `e` lines declare ids in order and `i`
lines list incidences (vertex, edge, slot, sign) in order. Ids are declared
before they are used.
"""
import re
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ohg.models.errors import DocumentSemanticError, DocumentSyntaxError, HypergraphError
from ohg.models.hypergraph import Incidence, OrientedHypergraph, build
from ohg.models.results import HypergraphDocument

FORMAT_VERSION = 1
HEADER = "ohg"

_TOKEN = re.compile(r"\S+")
_SIGNS = {"+": 1, "-": -1}


def _tokens(line: str) -> List[Tuple[str, int]]:
    return [(match.group(0), match.start() + 1) for match in _TOKEN.finditer(line)]


def _metadata(line: str, number: int, name: Optional[str], notes: List[str]) -> Optional[str]:
    match = re.match(r"\s*m\s+(\S+)\s*(.*)$", line)
    if match is None:
        raise DocumentSyntaxError("metadata lines read 'm name <text>' or 'm note <text>'", number)
    key, text = match.group(1), match.group(2).rstrip()
    if key == "name":
        if name is not None:
            raise DocumentSyntaxError("name given twice", number, line.index(key) + 1)
        return text
    if key == "note":
        notes.append(text)
        return name
    raise DocumentSyntaxError(f"unknown metadata key {key!r}", number, line.index(key) + 1)


def parse_document(text: str, strict: bool = True) -> HypergraphDocument:
    """
    Parse a document into a validated hypergraph plus its metadata.

    Raises:
        DocumentSyntaxError: malformed lines, unknown versions, duplicate declarations
        DocumentSemanticError: references to undeclared ids, slot gaps, mixed signs
    """
    version_seen = False
    name: Optional[str] = None
    notes: List[str] = []
    vertices: List[str] = []
    edges: List[str] = []
    declared: Dict[str, int] = {}
    declared_kind: Dict[str, str] = {}
    incidences: List[Incidence] = []
    seen_keys: Dict[Tuple[str, str, int], int] = {}
    pair_lines: Dict[Tuple[str, str], List[Tuple[int, int, int]]] = {}

    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = _tokens(line)
        head, head_column = tokens[0]

        if not version_seen:
            if head != HEADER or len(tokens) != 2:
                raise DocumentSyntaxError(f"expected '{HEADER} {FORMAT_VERSION}' header", number, head_column)
            if tokens[1][0] != str(FORMAT_VERSION):
                raise DocumentSyntaxError(f"unsupported format version {tokens[1][0]!r}", number, tokens[1][1])
            version_seen = True
            continue

        if head == "m":
            name = _metadata(line, number, name, notes)
        elif head in ("v", "e"):
            if len(tokens) != 2:
                raise DocumentSyntaxError(f"'{head}' lines take exactly one id", number, head_column)
            ident, column = tokens[1]
            if ident in declared:
                raise DocumentSyntaxError(
                    f"id {ident!r} already declared on line {declared[ident]}", number, column
                )
            declared[ident] = number
            declared_kind[ident] = head
            (vertices if head == "v" else edges).append(ident)
        elif head == "i":
            if len(tokens) != 5:
                raise DocumentSyntaxError("'i' lines read 'i <vertex> <edge> <slot> <+|->'", number, head_column)
            (v, v_col), (e, e_col), (slot_text, slot_col), (sign_text, sign_col) = tokens[1:]
            if not slot_text.isdigit() or int(slot_text) < 1:
                raise DocumentSyntaxError(f"slot {slot_text!r} is not a positive integer", number, slot_col)
            if sign_text not in _SIGNS:
                raise DocumentSyntaxError(f"sign {sign_text!r} is not '+' or '-'", number, sign_col)
            if v not in declared or declared_kind[v] != "v":
                raise DocumentSemanticError(f"{v!r} is not a declared vertex", number, v_col)
            if e not in declared or declared_kind[e] != "e":
                raise DocumentSemanticError(f"{e!r} is not a declared edge", number, e_col)
            key = (v, e, int(slot_text))
            if key in seen_keys:
                raise DocumentSyntaxError(f"incidence {key!r} already listed on line {seen_keys[key]}", number, head_column)
            seen_keys[key] = number
            pair_lines.setdefault((v, e), []).append((int(slot_text), _SIGNS[sign_text], number))
            incidences.append(Incidence(v, e, int(slot_text), _SIGNS[sign_text]))
        else:
            raise DocumentSyntaxError(f"unknown record type {head!r}", number, head_column)

    if not version_seen:
        raise DocumentSyntaxError(f"missing '{HEADER} {FORMAT_VERSION}' header", 1)

    for pair, records in pair_lines.items():
        slots = sorted(slot for slot, _, _ in records)
        if slots != list(range(1, len(slots) + 1)):
            raise DocumentSemanticError(f"slots of {pair!r} are {slots}, expected 1..{len(slots)}", records[0][2])
        if strict:
            first_sign = records[0][1]
            for _, sign, number in records:
                if sign != first_sign:
                    raise DocumentSemanticError(f"incidences of {pair!r} carry different signs in strict mode", number)

    try:
        G = build(vertices, edges, incidences, strict=strict)
    except HypergraphError as exc:
        raise DocumentSemanticError(str(exc), 1) from exc
    return HypergraphDocument(G, name, tuple(notes), FORMAT_VERSION)


def parse(text: str, strict: bool = True) -> OrientedHypergraph:
    return parse_document(text, strict).hypergraph


def serialize(
    G: OrientedHypergraph,
    name: Optional[str] = None,
    notes: Sequence[str] = (),
    comments: Iterable[str] = (),
) -> str:
    """Write G in document form; parse(serialize(G)) == G, orders included."""
    lines = [f"{HEADER} {FORMAT_VERSION}"]
    lines.extend(f"# {comment}" for comment in comments)
    if name:
        lines.append(f"m name {name}")
    lines.extend(f"m note {note}" for note in notes)
    lines.extend(f"v {v}" for v in G.vertices)
    lines.extend(f"e {e}" for e in G.edges)
    lines.extend(
        f"i {inc.vertex} {inc.edge} {inc.slot} {'+' if inc.sign > 0 else '-'}" for inc in G.incidences
    )
    return "\n".join(lines) + "\n"


def serialize_document(document: HypergraphDocument) -> str:
    return serialize(document.hypergraph, document.name, document.notes)
