"""
Unit Tests for Extremal Cactus Characterisations
"""

import pytest

from spext.families import (
    cycle,
    h_n,
    is_edge_maximal_cactus,
    is_h_n,
    is_k1n_plus,
    is_max_edge_cactus,
    k1n_plus,
    max_cactus_edges,
    path,
    star,
)
from spext.graph import make_graph


class TestMaxCactusEdges:
    """Tests for the maximum edge count of a connected cactus"""

    @pytest.mark.parametrize(
        "n, expected", [(1, 0), (2, 1), (3, 3), (4, 4), (5, 6), (6, 7), (7, 9), (10, 13)]
    )
    def test_values(self, n, expected):
        assert max_cactus_edges(n) == expected

    def test_non_positive_order_raises(self):
        with pytest.raises(ValueError):
            max_cactus_edges(0)


class TestIsMaxEdgeCactus:
    """Tests for the edge-count characterisation"""

    def test_h_n(self):
        for n in range(3, 12):
            assert is_max_edge_cactus(h_n(n))

    def test_bridged_triangles(self, bridged_triangles):
        assert is_max_edge_cactus(bridged_triangles)

    def test_triangle_chain(self, triangle_chain):
        assert is_max_edge_cactus(triangle_chain)

    def test_odd_cycle_is_not_max_edge(self):
        assert not is_max_edge_cactus(cycle(5))

    def test_disconnected_is_not_max_edge(self):
        graph = make_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        assert not is_max_edge_cactus(graph)

    def test_trivial_orders(self):
        assert is_max_edge_cactus(make_graph(1, []))
        assert is_max_edge_cactus(path(2))
        assert not is_max_edge_cactus(make_graph(0, []))


class TestIsEdgeMaximalCactus:
    """Tests for the no-edge-can-be-added characterisation"""

    def test_odd_cycle_is_edge_maximal_but_not_max_edge(self):
        """Any chord of C_5 closes a cycle sharing edges with it"""
        assert is_edge_maximal_cactus(cycle(5))
        assert not is_max_edge_cactus(cycle(5))

    def test_max_edge_implies_edge_maximal(self, bridged_triangles):
        assert is_edge_maximal_cactus(bridged_triangles)
        assert is_edge_maximal_cactus(h_n(8))

    def test_subdivided_bridge(self):
        """Triangles joined by a path of length two: the middle vertex can close a triangle"""
        graph = make_graph(
            7, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (4, 6), (5, 6)]
        )
        assert not is_max_edge_cactus(graph)
        assert not is_edge_maximal_cactus(graph)

    def test_star_is_not_edge_maximal(self):
        assert not is_edge_maximal_cactus(star(4))


class TestRecognisers:
    """Tests for is_h_n and is_k1n_plus"""

    def test_is_h_n_relabeled(self):
        graph = make_graph(5, [(4, 0), (4, 1), (4, 2), (4, 3), (0, 1), (2, 3)])
        assert is_h_n(graph)

    def test_is_h_n_rejects_other_max_edge_cacti(self, bridged_triangles):
        assert not is_h_n(bridged_triangles)

    def test_is_k1n_plus(self):
        assert is_k1n_plus(k1n_plus(7))
        assert not is_k1n_plus(cycle(4))
        assert not is_k1n_plus(h_n(5))
