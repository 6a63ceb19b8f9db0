"""
Unit Tests for Graph Value Objects

Tests canonical storage, validation and the derived queries of Graph.
"""

import numpy as np
import pytest

from spext.graph import (
    Graph,
    InvalidGraphError,
    InvalidOrderError,
    VertexOutOfRangeError,
    make_graph,
)


class TestMakeGraph:
    """Tests for make_graph canonicalisation and validation"""

    def test_orientation_and_order_are_normalised(self):
        """Reversed pairs in any order give the same canonical graph"""
        first = make_graph(4, [(3, 2), (1, 0), (2, 0)])
        second = make_graph(4, [(0, 1), (0, 2), (2, 3)])
        assert first == second
        assert first.edges == ((0, 1), (0, 2), (2, 3))
        assert hash(first) == hash(second)

    def test_self_loop_raises(self):
        """Self-loops are rejected with the pair in the message"""
        with pytest.raises(InvalidGraphError, match=r"\(2,2\)"):
            make_graph(3, [(2, 2)])

    def test_duplicate_in_either_orientation_raises(self):
        """uv and vu are the same edge"""
        with pytest.raises(InvalidGraphError, match="Duplicate"):
            make_graph(3, [(0, 1), (1, 0)])

    def test_out_of_range_raises(self):
        """Endpoints must lie in 0..n-1"""
        with pytest.raises(VertexOutOfRangeError):
            make_graph(3, [(0, 3)])
        with pytest.raises(VertexOutOfRangeError):
            make_graph(3, [(-1, 2)])

    def test_negative_order_raises(self):
        with pytest.raises(InvalidOrderError):
            make_graph(-1, [])

    def test_empty_graphs(self):
        """n = 0 and edgeless graphs are valid values"""
        assert make_graph(0, []).m == 0
        assert make_graph(5, []).max_degree == 0


class TestGraphConstructor:
    """Tests for the strict dataclass constructor"""

    def test_unsorted_edges_rejected(self):
        with pytest.raises(InvalidGraphError, match="not sorted"):
            Graph(3, ((1, 2), (0, 1)))

    def test_reversed_pair_rejected(self):
        with pytest.raises(InvalidGraphError, match="canonical orientation"):
            Graph(3, ((1, 0),))

    def test_frozen(self):
        graph = Graph(2, ((0, 1),))
        with pytest.raises(AttributeError):
            graph.n = 3


class TestGraphQueries:
    """Tests for degrees, adjacency and edge editing"""

    def test_degrees(self, paw):
        """Paw: the triangle vertex carrying the pendant has degree 3"""
        assert paw.degrees == (3, 2, 2, 1)
        assert paw.max_degree == 3
        assert paw.degree(3) == 1
        assert paw.m == 4

    def test_degree_out_of_range_raises(self, paw):
        with pytest.raises(VertexOutOfRangeError):
            paw.degree(4)

    def test_has_edge_is_symmetric(self, paw):
        assert paw.has_edge(1, 0)
        assert paw.has_edge(0, 1)
        assert not paw.has_edge(1, 3)

    def test_with_and_without_edge(self, c4):
        """Adding a chord and removing it returns the original value"""
        chorded = c4.with_edge(2, 0)
        assert chorded.m == 5
        assert chorded.without_edge(0, 2) == c4

    def test_with_existing_edge_raises(self, c4):
        with pytest.raises(InvalidGraphError):
            c4.with_edge(1, 0)

    def test_without_missing_edge_raises(self, c4):
        with pytest.raises(InvalidGraphError):
            c4.without_edge(0, 2)

    def test_adjacency_matrix_is_symmetric(self, bowtie):
        matrix = bowtie.adjacency_matrix()
        assert matrix.dtype == np.float64
        assert np.array_equal(matrix, matrix.T)
        assert matrix.sum() == 2 * bowtie.m

    def test_bitmasks_match_adjacency(self, bowtie):
        for v in range(bowtie.n):
            assert {w for w in range(bowtie.n) if bowtie.bitmasks[v] >> w & 1} == set(
                bowtie.adjacency[v]
            )

    def test_str_lists_edges(self):
        assert str(make_graph(3, [(0, 1), (1, 2)])) == "Graph(n=3; 0-1 1-2)"

    def test_edge_list_is_json_friendly(self, c4):
        assert c4.edge_list() == [[0, 1], [0, 3], [1, 2], [2, 3]]
