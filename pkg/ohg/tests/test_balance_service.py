"""
Unit tests for balance, balanceability and the matrix view of balance.
"""
from unittest.mock import patch

import pytest

from ohg.models.errors import LimitExceeded, ParityViolation
from ohg.models.results import AnalysisLimits, IncidenceMatrix
from ohg.services.balance_service import (
    brute_force_balanceable,
    flip_incidences,
    hole_parity,
    hole_submatrix,
    is_balanceable,
    is_balanced,
    is_hole_matrix,
    matrix_is_balanced,
)
from ohg.services.generator_service import cross_theta_shape, vertex_theta_shape
from ohg.services.linalg_service import incidence_matrix
from ohg.services.structure_service import all_circles


class TestBalance:
    def test_positive_triangle(self, positive_triangle):
        assert is_balanced(positive_triangle) == (True, None)

    def test_negative_triangle_gives_a_witness(self, negative_triangle):
        balanced, witness = is_balanced(negative_triangle)
        assert not balanced
        assert witness.length == 3

    def test_acyclic_is_balanced(self, one_edge_chain):
        assert is_balanced(one_edge_chain)[0]

    def test_limit(self, positive_triangle):
        with pytest.raises(LimitExceeded):
            is_balanced(positive_triangle, AnalysisLimits(max_circle_length=2))


class TestBalanceability:
    def test_theta_shapes(self):
        assert is_balanceable(vertex_theta_shape())[0]
        balanceable, witness = is_balanceable(cross_theta_shape())
        assert not balanceable
        assert witness is not None

    def test_brute_force_finds_the_smallest_flip(self, positive_triangle, negative_triangle):
        assert brute_force_balanceable(positive_triangle) == frozenset()
        assert brute_force_balanceable(negative_triangle) == frozenset({("a", "x", 1)})

    def test_brute_force_agrees_on_cross_theta(self):
        assert brute_force_balanceable(cross_theta_shape()) is None

    def test_brute_force_cap(self, positive_triangle):
        with pytest.raises(LimitExceeded):
            brute_force_balanceable(positive_triangle, AnalysisLimits(brute_force_incidence_cap=5))

    def test_flip_makes_balanced(self, negative_triangle):
        flipped = flip_incidences(negative_triangle, [("a", "x", 1)])
        assert not flipped.strict
        assert is_balanced(flipped)[0]


class TestHoles:
    def test_hole_parity(self, positive_triangle, negative_triangle):
        circle = all_circles(positive_triangle)[0]
        even = hole_submatrix(positive_triangle, circle)
        odd = hole_submatrix(negative_triangle, circle)
        assert is_hole_matrix(even) and is_hole_matrix(odd)
        assert hole_parity(even) == 0
        assert hole_parity(odd) == 2

    def test_not_a_hole(self):
        assert not is_hole_matrix(IncidenceMatrix.from_rows([[1, 1], [1, 0]]))
        assert not is_hole_matrix(IncidenceMatrix.from_rows([[1, 1, 0]]))

    def test_matrix_balance(self):
        assert matrix_is_balanced([[1, 0, -1], [-1, 1, 0], [0, -1, 1]]) == (True, None)
        balanced, hole = matrix_is_balanced([[1, 1, 0], [0, 1, 1], [1, 0, 1]])
        assert not balanced
        assert hole.shape == (3, 3)
        assert hole_parity(hole) == 2

    def test_even_hole_for_a_negative_circle_is_reported(self, negative_triangle):
        with patch("ohg.services.balance_service.hole_parity", return_value=0):
            with pytest.raises(ParityViolation):
                matrix_is_balanced(incidence_matrix(negative_triangle))
