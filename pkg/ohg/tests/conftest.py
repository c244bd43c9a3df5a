"""
Shared hypergraph fixtures for the ohg test suite.
"""
import os

import pytest

from ohg.models.hypergraph import OrientedHypergraph, build

FIXTURE_DIR = os.path.join(os.path.dirname(__file__), "fixtures")


def fixture_path(name: str) -> str:
    return os.path.join(FIXTURE_DIR, name)


@pytest.fixture
def fixture_file():
    return fixture_path


@pytest.fixture
def fixture_text():
    """Read a document from the fixtures directory."""
    def read(name: str) -> str:
        with open(fixture_path(name), encoding="utf-8") as handle:
            return handle.read()
    return read


def positive_triangle_hypergraph() -> OrientedHypergraph:
    """Triangle a-x-b-y-c-z-a with every adjacency positive."""
    return build(
        ["a", "b", "c"],
        ["x", "y", "z"],
        [
            ("a", "x", 1, 1), ("b", "x", 1, -1),
            ("b", "y", 1, 1), ("c", "y", 1, -1),
            ("c", "z", 1, 1), ("a", "z", 1, -1),
        ],
    )


def thorned_triangle_pair() -> OrientedHypergraph:
    """
    Two positive triangles, each with a thorn on one edge, the thorns joined
    by a 2-edge. Contracting the thorns gives a 2-hypercircle.
    """
    incidences = []
    for i in (1, 2):
        a, b, c, t = f"a{i}", f"b{i}", f"c{i}", f"t{i}"
        incidences += [
            (a, f"x{i}", 1, 1), (b, f"x{i}", 1, -1),
            (b, f"y{i}", 1, 1), (c, f"y{i}", 1, -1),
            (c, f"z{i}", 1, 1), (a, f"z{i}", 1, -1), (t, f"z{i}", 1, 1),
        ]
    incidences += [("t1", "w", 1, 1), ("t2", "w", 1, -1)]
    return build(
        ["a1", "b1", "c1", "t1", "a2", "b2", "c2", "t2"],
        ["x1", "y1", "z1", "x2", "y2", "z2", "w"],
        incidences,
    )


@pytest.fixture
def positive_triangle() -> OrientedHypergraph:
    return positive_triangle_hypergraph()


@pytest.fixture
def negative_triangle() -> OrientedHypergraph:
    """Triangle with all incidences +1: three adjacencies of sign -1, a negative circle."""
    return build(
        ["a", "b", "c"],
        ["x", "y", "z"],
        [(v, e, 1, 1) for v, e in (("a", "x"), ("b", "x"), ("b", "y"), ("c", "y"), ("c", "z"), ("a", "z"))],
    )


@pytest.fixture
def zero_edge() -> OrientedHypergraph:
    return build([], ["z"], [])


@pytest.fixture
def pendant_triangle() -> OrientedHypergraph:
    """The positive triangle with a 2-edge hanging off c at a new vertex d."""
    G = positive_triangle_hypergraph()
    return build(
        list(G.vertices) + ["d"],
        list(G.edges) + ["w"],
        list(G.incidences) + [("c", "w", 1, 1), ("d", "w", 1, -1)],
    )


@pytest.fixture
def one_edge_chain() -> OrientedHypergraph:
    """1-edge h at a, 2-edge x joining a and b, 1-edge k at b."""
    return build(
        ["a", "b"],
        ["h", "x", "k"],
        [("a", "h", 1, 1), ("a", "x", 1, 1), ("b", "x", 1, -1), ("b", "k", 1, 1)],
    )


@pytest.fixture
def thorned_pair() -> OrientedHypergraph:
    return thorned_triangle_pair()


@pytest.fixture
def digon() -> OrientedHypergraph:
    """Two vertices joined by two parallel 2-edges, the circle positive."""
    return build(
        ["a", "b"],
        ["x", "y"],
        [("a", "x", 1, 1), ("b", "x", 1, -1), ("a", "y", 1, 1), ("b", "y", 1, -1)],
    )
