"""
Integration tests for the circuit classification workflow and its nodes.
"""
import pytest
from unittest.mock import MagicMock, patch

from ohg.classifier.nodes import check_degree_law, screen_degrees
from ohg.models.errors import OracleDisagreement
from ohg.models.hypergraph import build
from ohg.models.results import (
    CIRCUIT,
    INDEPENDENT,
    NOT_CIRCUIT,
    OUT_OF_SCOPE_UNBALANCED,
    UNKNOWN,
    AnalysisLimits,
    DependencyCertificate,
)
from ohg.models.state import CircuitState
from ohg.services.generator_service import vertex_theta_shape
from ohg.workflows.circuit_graph import (
    classify_balanced_circuit,
    cross_validate,
    get_workflow,
    is_decided,
    route_cycles,
)


@pytest.fixture
def mock_logging_service():
    with patch('ohg.workflows.circuit_graph.get_logging_service') as mock:
        mock_logger = MagicMock()
        mock.return_value = mock_logger
        yield mock_logger


@pytest.fixture
def two_triangles(positive_triangle):
    G = positive_triangle
    copy = [(f"{inc.vertex}2", f"{inc.edge}2", inc.slot, inc.sign) for inc in G.incidences]
    return build(
        list(G.vertices) + [f"{v}2" for v in G.vertices],
        list(G.edges) + [f"{e}2" for e in G.edges],
        list(G.incidences) + copy,
    )


class TestRouting:
    def test_is_decided(self):
        assert is_decided(CircuitState(verdict=CIRCUIT)) == "done"
        assert is_decided(CircuitState(verdict=None)) == "continue"

    def test_route_cycles(self):
        assert route_cycles(CircuitState(verdict=NOT_CIRCUIT)) == "done"
        assert route_cycles(CircuitState(acyclic=True)) == "acyclic"
        assert route_cycles(CircuitState(acyclic=False)) == "cyclic"

    def test_workflow_is_cached(self):
        assert get_workflow() is get_workflow()


class TestNodes:
    def test_screen_sets_isolated_vertices_aside(self):
        G = build(["q"], ["z"], [])
        state = screen_degrees(CircuitState(hypergraph=G))
        assert state["working"].vertices == ()
        assert state.get("verdict") is None

    def test_screen_rejects_monovalent(self, pendant_triangle):
        state = screen_degrees(CircuitState(hypergraph=pendant_triangle))
        assert state["verdict"] == NOT_CIRCUIT
        assert state["reason"] == "monovalent vertex 'd'"

    def test_degree_law(self):
        state = screen_degrees(CircuitState(hypergraph=vertex_theta_shape()))
        state = check_degree_law(state)
        assert state["verdict"] == NOT_CIRCUIT
        assert state["reason"] == "vertex 'a' has degree 3"

    def test_degree_law_marks_acyclic(self, one_edge_chain):
        state = check_degree_law(screen_degrees(CircuitState(hypergraph=one_edge_chain)))
        assert state["acyclic"] is True


class TestClassify:
    def test_flower(self, positive_triangle, mock_logging_service):
        result = classify_balanced_circuit(positive_triangle, name="triangle")
        assert result.verdict == CIRCUIT
        assert result.reason == "balanced subdivision of a 1-hypercircle"
        assert result.decomposition.order == 1
        assert result.oracle.is_circuit
        mock_logging_service.create_log_entry.assert_called_once()
        assert mock_logging_service.create_log_entry.call_args[0][0] == "ClassifierVerdict"

    def test_digon(self, digon, mock_logging_service):
        assert classify_balanced_circuit(digon).verdict == CIRCUIT

    def test_zero_edge(self, zero_edge, mock_logging_service):
        result = classify_balanced_circuit(zero_edge)
        assert result.verdict == CIRCUIT
        assert result.reason == "single 0-edge"
        assert result.decomposition.order == 0

    def test_isolated_vertex_is_a_zero_row(self, mock_logging_service):
        result = classify_balanced_circuit(build(["q"], ["z"], []))
        assert result.verdict == CIRCUIT
        assert result.oracle.is_circuit

    def test_one_edges_joined_by_an_artery(self, one_edge_chain, mock_logging_service):
        result = classify_balanced_circuit(one_edge_chain)
        assert result.verdict == CIRCUIT
        witness = result.decomposition
        assert witness.order == 0
        assert witness.one_edges == ("h", "k")
        assert witness.contracted == ("a", "b")

    def test_two_hypercircle(self, thorned_pair, mock_logging_service):
        result = classify_balanced_circuit(thorned_pair)
        assert result.verdict == CIRCUIT
        assert result.reason == "balanced subdivision of a 2-hypercircle"
        assert len(result.decomposition.arteries) == 1
        assert result.decomposition.contracted == ("t1", "t2")

    @pytest.mark.parametrize("fixture_name, reason", [
        ("pendant_triangle", "monovalent vertex 'd'"),
        ("two_triangles", "disconnected"),
    ])
    def test_not_circuit(self, request, fixture_name, reason, mock_logging_service):
        result = classify_balanced_circuit(request.getfixturevalue(fixture_name))
        assert result.verdict == NOT_CIRCUIT
        assert result.reason == reason
        assert not result.oracle.is_circuit

    def test_no_edges(self, mock_logging_service):
        result = classify_balanced_circuit(build([], [], []))
        assert result.verdict == NOT_CIRCUIT
        assert result.reason == "no edges"

    def test_degree_three(self, mock_logging_service):
        result = classify_balanced_circuit(vertex_theta_shape())
        assert result.verdict == NOT_CIRCUIT
        assert result.oracle.nullity == 2

    def test_unbalanced(self, negative_triangle, mock_logging_service):
        result = classify_balanced_circuit(negative_triangle)
        assert result.verdict == OUT_OF_SCOPE_UNBALANCED
        assert result.reason.startswith("negative circle")

    def test_limit_gives_unknown(self, positive_triangle, mock_logging_service):
        result = classify_balanced_circuit(positive_triangle, AnalysisLimits(max_circle_length=2))
        assert result.verdict == UNKNOWN
        assert result.decomposition is None

    def test_oracle_disagreement_raises(self, positive_triangle, mock_logging_service):
        fake = DependencyCertificate(INDEPENDENT, 0, None, positive_triangle.edges)
        with patch('ohg.workflows.circuit_graph.is_minimally_dependent', return_value=fake):
            with pytest.raises(OracleDisagreement):
                classify_balanced_circuit(positive_triangle)
        assert mock_logging_service.create_log_entry.call_args[0][0] == "OracleMismatch"


class TestCrossValidate:
    def test_agreement(self, thorned_pair, mock_logging_service):
        report = cross_validate(thorned_pair)
        assert not report.skipped
        assert not report.mismatch
        assert report.verdict == CIRCUIT

    def test_unbalanced_is_skipped(self, negative_triangle, mock_logging_service):
        report = cross_validate(negative_triangle)
        assert report.skipped
        assert report.reason.startswith("unbalanced")

    def test_limits_are_skipped(self, positive_triangle, mock_logging_service):
        assert cross_validate(positive_triangle, AnalysisLimits(max_circle_length=2)).skipped

    def test_mismatch_is_reported(self, positive_triangle, mock_logging_service):
        fake = DependencyCertificate(INDEPENDENT, 0, None, positive_triangle.edges)
        with patch('ohg.workflows.circuit_graph.is_minimally_dependent', return_value=fake):
            report = cross_validate(positive_triangle)
        assert report.mismatch
        assert not report.skipped
