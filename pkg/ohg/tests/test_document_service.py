"""
Unit tests for the hypergraph document format.
"""
import pytest

from ohg.models.errors import DocumentSemanticError, DocumentSyntaxError
from ohg.models.hypergraph import build
from ohg.services.document_service import parse, parse_document, serialize, serialize_document


class TestSerialize:
    def test_layout(self, one_edge_chain):
        text = serialize(one_edge_chain, name="chain", notes=["two 1-edges"], comments=["generated"])
        assert text.splitlines() == [
            "ohg 1",
            "# generated",
            "m name chain",
            "m note two 1-edges",
            "v a",
            "v b",
            "e h",
            "e x",
            "e k",
            "i a h 1 +",
            "i a x 1 +",
            "i b x 1 -",
            "i b k 1 +",
        ]
        assert text.endswith("\n")

    def test_round_trip_keeps_orders(self, thorned_pair):
        assert parse(serialize(thorned_pair)) == thorned_pair

    def test_document_round_trip(self, fixture_text):
        document = parse_document(fixture_text("zero_edge.ohg"))
        assert document.name == "zero-edge"
        assert document.notes == ("an edge without vertices is a circuit on its own",)
        assert parse_document(serialize_document(document)) == document

    def test_non_strict_round_trip(self):
        G = build(["a"], ["e"], [("a", "e", 1, 1), ("a", "e", 2, -1)], strict=False)
        assert parse(serialize(G), strict=False) == G


class TestParse:
    def test_fixture(self, positive_triangle, fixture_text):
        document = parse_document(fixture_text("triangle.ohg"))
        assert document.name == "triangle"
        assert document.version == 1
        assert document.hypergraph == positive_triangle

    def test_comments_and_blank_lines(self):
        G = parse("# leading comment\n\nohg 1\n\n# more\nv a\n")
        assert G.vertices == ("a",)

    def test_missing_header(self):
        with pytest.raises(DocumentSyntaxError) as info:
            parse("v a\n")
        assert info.value.line == 1

    def test_empty_document(self):
        with pytest.raises(DocumentSyntaxError):
            parse("")

    def test_unsupported_version(self):
        with pytest.raises(DocumentSyntaxError) as info:
            parse("ohg 2\n")
        assert info.value.column == 5

    def test_duplicate_declaration(self):
        with pytest.raises(DocumentSyntaxError) as info:
            parse("ohg 1\nv a\ne a\n")
        assert info.value.line == 3
        assert "line 2" in info.value.message

    def test_undeclared_edge_column(self, fixture_text):
        with pytest.raises(DocumentSemanticError) as info:
            parse(fixture_text("bad_reference.ohg"))
        assert (info.value.line, info.value.column) == (4, 5)

    def test_edge_used_as_vertex(self):
        with pytest.raises(DocumentSemanticError):
            parse("ohg 1\nv a\ne x\ni x x 1 +\n")

    @pytest.mark.parametrize("line, column", [
        ("i a x 0 +", 7),
        ("i a x one +", 7),
        ("i a x 1 *", 9),
    ])
    def test_bad_slot_or_sign(self, line, column):
        with pytest.raises(DocumentSyntaxError) as info:
            parse(f"ohg 1\nv a\ne x\n{line}\n")
        assert info.value.column == column

    def test_duplicate_incidence(self):
        with pytest.raises(DocumentSyntaxError):
            parse("ohg 1\nv a\ne x\ni a x 1 +\ni a x 1 +\n")

    def test_slot_gap(self):
        with pytest.raises(DocumentSemanticError):
            parse("ohg 1\nv a\ne x\ni a x 2 +\n")

    def test_mixed_signs(self):
        text = "ohg 1\nv a\ne x\ni a x 1 +\ni a x 2 -\n"
        with pytest.raises(DocumentSemanticError) as info:
            parse(text)
        assert info.value.line == 5
        assert parse(text, strict=False).multiplicity("a", "x") == 2

    def test_unknown_record(self):
        with pytest.raises(DocumentSyntaxError):
            parse("ohg 1\nq a\n")

    def test_metadata_errors(self):
        with pytest.raises(DocumentSyntaxError):
            parse("ohg 1\nm name one\nm name two\n")
        with pytest.raises(DocumentSyntaxError):
            parse("ohg 1\nm colour red\n")
