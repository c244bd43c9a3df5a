"""
Unit tests for circle-covered hypergraphs, flowers and pseudo-flowers.
"""
import pytest

from ohg.models.errors import LimitExceeded
from ohg.models.hypergraph import build
from ohg.models.results import FLOWER, NEITHER, PSEUDO_FLOWER, UNKNOWN, AnalysisLimits
from ohg.services.flower_service import (
    BLOCKS,
    CIRCLES,
    flower_analysis,
    is_circle_covered,
    is_flower,
    is_inseparable,
    require_flower,
    thorn_candidates,
)
from ohg.services.generator_service import vertex_theta_shape


@pytest.fixture
def thorned_triangle():
    return build(
        ["a", "b", "c", "t"],
        ["x", "y", "z"],
        [
            ("a", "x", 1, 1), ("b", "x", 1, -1),
            ("b", "y", 1, 1), ("c", "y", 1, -1),
            ("c", "z", 1, 1), ("a", "z", 1, -1), ("t", "z", 1, 1),
        ],
    )


class TestInseparable:
    @pytest.mark.parametrize("method", [BLOCKS, CIRCLES])
    def test_methods_agree(self, method, positive_triangle, pendant_triangle):
        assert is_inseparable(positive_triangle, method)
        assert not is_inseparable(pendant_triangle, method)

    def test_unknown_method(self, positive_triangle):
        with pytest.raises(ValueError):
            is_inseparable(positive_triangle, "guess")


class TestFlower:
    def test_circle_covered(self, positive_triangle, zero_edge, one_edge_chain):
        assert is_circle_covered(positive_triangle)
        assert is_circle_covered(zero_edge)
        assert not is_circle_covered(one_edge_chain)

    def test_triangle_and_digon_are_flowers(self, positive_triangle, digon):
        assert is_flower(positive_triangle)
        assert is_flower(digon)

    def test_zero_edge_is_a_flower(self, zero_edge):
        assert is_flower(zero_edge)

    def test_vertex_theta_is_not_a_flower(self):
        from_shape = vertex_theta_shape()
        assert is_circle_covered(from_shape)
        assert not is_flower(from_shape)
        assert flower_analysis(from_shape).verdict == NEITHER

    def test_edge_cap(self, positive_triangle):
        limits = AnalysisLimits(flower_edge_cap=2)
        assert is_flower(positive_triangle, limits) is None
        assert flower_analysis(positive_triangle, limits).verdict == UNKNOWN
        with pytest.raises(LimitExceeded):
            require_flower(positive_triangle, limits)


class TestPseudoFlower:
    def test_thorned_triangle(self, thorned_triangle):
        analysis = flower_analysis(thorned_triangle)
        assert analysis.verdict == PSEUDO_FLOWER
        assert analysis.thorns == {"t"}
        assert analysis.flower_part.vertices == ("a", "b", "c")

    def test_one_edge_is_the_pseudo_flower_of_a_zero_edge(self):
        G = build(["a"], ["e"], [("a", "e", 1, 1)])
        assert thorn_candidates(G) == {"a"}
        analysis = flower_analysis(G)
        assert analysis.verdict == PSEUDO_FLOWER
        assert analysis.flower_part.edges == ("e",)
        assert analysis.flower_part.vertices == ()

    def test_flower_verdict(self, positive_triangle):
        assert flower_analysis(positive_triangle).verdict == FLOWER

    def test_leaf_is_not_a_thorn(self, pendant_triangle):
        assert thorn_candidates(pendant_triangle) == frozenset()
        assert flower_analysis(pendant_triangle).verdict == NEITHER
