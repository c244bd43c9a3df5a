"""
Unit tests for the hypercircle decomposition helpers.
"""
from dataclasses import replace

from ohg.classifier.hypercircle import (
    artery_parts,
    contract_vertices,
    one_edge_parts,
    ordered_blocks,
    pseudo_flower_parts,
    recognize_hypercircle,
    validate_decomposition,
)
from ohg.models.hypergraph import build
from ohg.models.results import CIRCUIT
from ohg.services.balance_service import is_balanced
from ohg.workflows.circuit_graph import classify_balanced_circuit


def thorned_triangles_on_3_edge():
    """Three positive triangles with thorns t1..t3 on z1..z3, the thorns joined by one 3-edge w."""
    vertices, edges, incidences = [], [], []
    for i in (1, 2, 3):
        a, b, c, t = f"a{i}", f"b{i}", f"c{i}", f"t{i}"
        vertices += [a, b, c, t]
        edges += [f"x{i}", f"y{i}", f"z{i}"]
        incidences += [
            (a, f"x{i}", 1, 1), (b, f"x{i}", 1, -1),
            (b, f"y{i}", 1, 1), (c, f"y{i}", 1, -1),
            (c, f"z{i}", 1, 1), (a, f"z{i}", 1, -1), (t, f"z{i}", 1, 1),
        ]
    incidences += [("t1", "w", 1, 1), ("t2", "w", 1, -1), ("t3", "w", 1, 1)]
    return build(vertices, edges + ["w"], incidences)


class TestParts:
    def test_blocks_follow_circle_order(self, thorned_pair):
        blocks = ordered_blocks(thorned_pair)
        assert len(blocks) == 2
        assert "a1" in blocks[0]
        assert "a2" in blocks[1]

    def test_pseudo_flowers(self, thorned_pair):
        first, second = pseudo_flower_parts(thorned_pair, ordered_blocks(thorned_pair))
        assert first.edges == ("x1", "y1", "z1")
        assert first.flower_vertices == ("a1", "b1", "c1")
        assert first.thorns == ("t1",)
        assert first.briars == ("z1",)
        assert second.thorns == ("t2",)

    def test_one_edges(self, one_edge_chain):
        parts = one_edge_parts(one_edge_chain)
        assert [p.edges for p in parts] == [("h",), ("k",)]
        assert [p.thorns for p in parts] == [("a",), ("b",)]
        assert all(p.one_edge for p in parts)

    def test_artery(self, thorned_pair):
        (artery,) = artery_parts(thorned_pair, ordered_blocks(thorned_pair))
        assert artery.vertices == ("t1", "t2")
        assert artery.edges == ("w",)
        assert artery.externals == ("t1", "t2")

    def test_acyclic_artery(self, one_edge_chain):
        (artery,) = artery_parts(one_edge_chain, [])
        assert artery.vertices == ("a", "b")
        assert artery.edges == ("x",)


class TestRecognize:
    def test_flower_is_a_1_hypercircle(self, positive_triangle):
        decomposition = recognize_hypercircle(positive_triangle)
        assert decomposition.order == 1
        assert decomposition.isthmi == ()

    def test_zero_edge(self, zero_edge):
        assert recognize_hypercircle(zero_edge).order == 0

    def test_contracted_pair_is_a_2_hypercircle(self, thorned_pair):
        H = contract_vertices(thorned_pair, ("t1", "t2"))
        assert H.vertices == ("a1", "b1", "c1", "a2", "b2", "c2")
        assert H.edges == ("x1", "y1", "x2", "y2", "w")
        assert is_balanced(H)[0]
        decomposition = recognize_hypercircle(H)
        assert decomposition.order == 2
        assert decomposition.isthmi == ("w",)

    def test_subdivided_pair_is_recognized(self, thorned_pair):
        decomposition = recognize_hypercircle(thorned_pair)
        assert decomposition.order == 2
        assert decomposition.contracted == ("t1", "t2")
        assert len(decomposition.arteries) == 1
        assert decomposition.hypercircle == contract_vertices(thorned_pair, ("t1", "t2"))

    def test_three_flowers_on_one_artery_edge(self):
        G = thorned_triangles_on_3_edge()
        decomposition = recognize_hypercircle(G)
        assert decomposition.order == 3
        assert decomposition.contracted == ("t1", "t2", "t3")
        assert decomposition.isthmi == ("w",)
        assert validate_decomposition(G, decomposition) == []

    def test_one_edge_chain_contracts_to_a_0_edge(self, one_edge_chain):
        decomposition = recognize_hypercircle(one_edge_chain)
        assert decomposition.order == 0
        assert decomposition.contracted == ("a", "b")
        assert decomposition.one_edges == ("h", "k")

    def test_pendant_is_rejected(self, pendant_triangle):
        assert recognize_hypercircle(pendant_triangle) is None

    def test_disconnected(self):
        assert recognize_hypercircle(build([], ["e", "f"], [])) is None


class TestValidate:
    def test_classifier_witness_validates(self, thorned_pair):
        result = classify_balanced_circuit(thorned_pair)
        assert result.verdict == CIRCUIT
        assert validate_decomposition(thorned_pair, result.decomposition) == []

    def test_wrong_order_is_reported(self, thorned_pair):
        witness = classify_balanced_circuit(thorned_pair).decomposition
        problems = validate_decomposition(thorned_pair, replace(witness, order=3))
        assert any("recorded order" in p for p in problems)

    def test_missing_contraction_is_reported(self, thorned_pair):
        witness = classify_balanced_circuit(thorned_pair).decomposition
        problems = validate_decomposition(thorned_pair, replace(witness, contracted=()))
        assert any("contracting the recorded vertices" in p for p in problems)

    def test_dropped_artery_leaves_elements_uncovered(self, thorned_pair):
        witness = classify_balanced_circuit(thorned_pair).decomposition
        problems = validate_decomposition(thorned_pair, replace(witness, arteries=()))
        assert any("outside every part" in p for p in problems)
