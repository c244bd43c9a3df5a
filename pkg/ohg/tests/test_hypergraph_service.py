"""
Unit tests for signs, duality, connectivity and sub-hypergraphs.
"""
import pytest

from ohg.models.errors import InvalidWalk
from ohg.models.hypergraph import PATH, Adjacency, Walk, build, circle_from_sequence
from ohg.services.hypergraph_service import (
    CROSS_INDUCED,
    CROSS_PATH,
    EDGE_INDUCED,
    EDGE_PATH,
    EDGE_RESTRICTION,
    VERTEX_PATH,
    adjacencies,
    adjacency_sign,
    connected_components,
    dual_walk,
    incidence_dual,
    is_connected,
    labeled_equal,
    path_kind,
    sub_hypergraph,
    to_incidence_graph,
    validate_walk,
    walk_sign,
)


def triangle_circle():
    return circle_from_sequence(
        ["a", "x", "b", "y", "c", "z"],
        [("a", "x", 1), ("b", "x", 1), ("b", "y", 1), ("c", "y", 1), ("c", "z", 1), ("a", "z", 1)],
    )


class TestSigns:
    def test_adjacency_sign(self, positive_triangle, negative_triangle):
        adjacency = Adjacency("a", 1, "b", 1, "x")
        assert adjacency_sign(positive_triangle, adjacency) == 1
        assert adjacency_sign(negative_triangle, adjacency) == -1

    def test_missing_adjacency_is_zero(self, positive_triangle):
        assert adjacency_sign(positive_triangle, Adjacency("a", 1, "c", 1, "x")) == 0

    def test_adjacencies_per_edge(self, pendant_triangle):
        assert len(adjacencies(pendant_triangle)) == 4
        assert len(adjacencies(pendant_triangle, "w")) == 1

    def test_circle_signs(self, positive_triangle, negative_triangle):
        circle = triangle_circle()
        assert walk_sign(positive_triangle, circle) == 1
        assert walk_sign(negative_triangle, circle) == -1

    def test_degenerate_circle_sign(self):
        G = build(["a"], ["e"], [("a", "e", 1, 1), ("a", "e", 2, 1)])
        circle = circle_from_sequence(["a", "e"], [("a", "e", 1), ("a", "e", 2)])
        assert walk_sign(G, circle) == -1

    def test_path_sign(self, positive_triangle):
        path = Walk(("a", "x", "b"), (("a", "x", 1), ("b", "x", 1)), PATH, True)
        assert walk_sign(positive_triangle, path) == 1
        assert path_kind(path) == VERTEX_PATH

    def test_path_kinds(self):
        edge_path = Walk(("x", "b", "y"), (("b", "x", 1), ("b", "y", 1)), PATH, False)
        cross_path = Walk(("a", "x"), (("a", "x", 1),), PATH, True)
        assert path_kind(edge_path) == EDGE_PATH
        assert path_kind(cross_path) == CROSS_PATH

    def test_invalid_walk(self, positive_triangle):
        broken = Walk(("a", "y", "b"), (("a", "y", 1), ("b", "y", 1)), PATH, True)
        with pytest.raises(InvalidWalk):
            validate_walk(positive_triangle, broken)


class TestDuality:
    def test_dual_swaps_roles(self, pendant_triangle):
        dual = incidence_dual(pendant_triangle)
        assert dual.vertices == pendant_triangle.edges
        assert dual.edges == pendant_triangle.vertices
        assert dual.sign_of(("w", "d", 1)) == -1

    def test_dual_is_an_involution(self, thorned_pair):
        assert incidence_dual(incidence_dual(thorned_pair)) == thorned_pair

    def test_dual_circle_keeps_its_sign(self, positive_triangle):
        circle = triangle_circle()
        dual = incidence_dual(positive_triangle)
        assert walk_sign(dual, dual_walk(circle)) == walk_sign(positive_triangle, circle)


class TestConnectivity:
    def test_components_in_declaration_order(self):
        G = build(["a", "b", "c"], ["e", "f"], [("a", "e", 1, 1), ("c", "f", 1, 1)])
        assert connected_components(G) == [("a", "e"), ("b",), ("c", "f")]
        assert not is_connected(G)

    def test_zero_edge_is_connected(self, zero_edge):
        assert is_connected(zero_edge)

    def test_incidence_graph(self, positive_triangle):
        graph = to_incidence_graph(positive_triangle)
        assert graph.is_simple()
        assert graph.to_networkx().number_of_edges() == 6


class TestSubHypergraph:
    def test_cross_induced(self, positive_triangle):
        H = sub_hypergraph(positive_triangle, ["a", "b"], ["x", "z"], CROSS_INDUCED)
        assert H.vertices == ("a", "b")
        assert H.edge_size("z") == 1

    def test_edge_restriction_keeps_all_vertices(self, positive_triangle):
        H = sub_hypergraph(positive_triangle, [], ["x"], EDGE_RESTRICTION)
        assert H.vertices == ("a", "b", "c")
        assert H.degree("c") == 0

    def test_edge_induced(self, positive_triangle):
        H = sub_hypergraph(positive_triangle, [], ["x"], EDGE_INDUCED)
        assert H.vertices == ("a", "b")

    def test_unknown_mode(self, positive_triangle):
        with pytest.raises(ValueError):
            sub_hypergraph(positive_triangle, [], [], "sideways")


class TestLabeledEqual:
    def test_ignores_incidence_order(self, positive_triangle):
        shuffled = build(
            positive_triangle.vertices,
            positive_triangle.edges,
            list(reversed(positive_triangle.incidences)),
        )
        assert shuffled != positive_triangle
        assert labeled_equal(shuffled, positive_triangle)
