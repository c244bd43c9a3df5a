"""
Unit tests for the core value types and build().
"""
import pytest

from ohg.models.errors import DuplicateId, InvalidId, InvalidSign, InvalidWalk, MixedSigns, SlotGap, UnknownId
from ohg.models.hypergraph import CIRCLE, Incidence, build, circle_from_sequence


class TestBuild:
    def test_orders_are_kept(self, positive_triangle):
        assert positive_triangle.vertices == ("a", "b", "c")
        assert positive_triangle.edges == ("x", "y", "z")
        assert positive_triangle.incidences[0] == Incidence("a", "x", 1, 1)

    def test_accepts_incidence_values_and_tuples(self):
        G = build(["a"], ["e"], [Incidence("a", "e", 1, 1), ("a", "e", 2, 1)])
        assert G.multiplicity("a", "e") == 2
        assert not G.is_simple()

    def test_duplicate_id_across_kinds(self):
        with pytest.raises(DuplicateId):
            build(["a"], ["a"], [])

    @pytest.mark.parametrize("ident", ["", "a b", "tab\there"])
    def test_invalid_ids(self, ident):
        with pytest.raises(InvalidId):
            build([ident], [], [])

    def test_unknown_vertex(self):
        with pytest.raises(UnknownId):
            build(["a"], ["e"], [("b", "e", 1, 1)])

    def test_invalid_sign(self):
        with pytest.raises(InvalidSign):
            build(["a"], ["e"], [("a", "e", 1, 0)])

    def test_slot_gap(self):
        with pytest.raises(SlotGap):
            build(["a"], ["e"], [("a", "e", 1, 1), ("a", "e", 3, 1)])

    def test_mixed_signs_only_in_strict_mode(self):
        incidences = [("a", "e", 1, 1), ("a", "e", 2, -1)]
        with pytest.raises(MixedSigns):
            build(["a"], ["e"], incidences)
        G = build(["a"], ["e"], incidences, strict=False)
        assert not G.strict
        assert G.degree("a") == 2

    def test_empty_hypergraph(self):
        G = build([], [], [])
        assert G.describe() == "|V|=0 |E|=0 |I|=0"


class TestQueries:
    def test_degree_and_size(self, pendant_triangle):
        assert pendant_triangle.degree("c") == 3
        assert pendant_triangle.degree("d") == 1
        assert pendant_triangle.edge_size("w") == 2

    def test_unknown_lookups_raise(self, positive_triangle):
        with pytest.raises(UnknownId):
            positive_triangle.incidences_at("nope")
        with pytest.raises(UnknownId):
            positive_triangle.incidences_of("nope")
        with pytest.raises(UnknownId):
            positive_triangle.incidence(("a", "y", 1))

    def test_kind_of(self, positive_triangle):
        assert positive_triangle.kind_of("a") == "vertex"
        assert positive_triangle.kind_of("x") == "edge"

    def test_equality_ignores_strict_flag(self):
        left = build(["a"], ["e"], [("a", "e", 1, 1)])
        right = build(["a"], ["e"], [("a", "e", 1, 1)], strict=False)
        assert left == right


class TestCircleNormalization:
    def test_starts_at_smallest_vertex(self):
        circle = circle_from_sequence(
            ["b", "y", "c", "z", "a", "x", "b"],
            [("b", "y", 1), ("c", "y", 1), ("c", "z", 1), ("a", "z", 1), ("a", "x", 1), ("b", "x", 1)],
        )
        assert circle.kind == CIRCLE
        assert circle.start == "a"
        assert circle.nodes[1] == "x"
        assert circle.length == 3
        assert circle.vertices == ("a", "b", "c")

    def test_degenerate_circle_of_length_one(self):
        circle = circle_from_sequence(["a", "e"], [("a", "e", 1), ("a", "e", 2)])
        assert circle.length == 1
        assert circle.incidences == (("a", "e", 1), ("a", "e", 2))

    def test_odd_sequence_rejected(self):
        with pytest.raises(InvalidWalk):
            circle_from_sequence(["a", "e", "b"], [("a", "e", 1), ("b", "e", 1), ("a", "e", 2)])

    def test_render(self):
        circle = circle_from_sequence(["a", "e"], [("a", "e", 1), ("a", "e", 2)])
        assert str(circle) == "a-(a,e,1)-e-(a,e,2)-a"
