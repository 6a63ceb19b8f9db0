"""
Unit Tests for Isomorph-Free Class Enumeration

Counts are checked against known values and, at small orders, against a
labeled brute force deduplicated with networkx.
"""

from itertools import combinations

import networkx as nx
import pytest

from spext.enumeration import GraphClass, UnsupportedClassError, enumerate_class
from spext.families import is_max_edge_cactus, max_cactus_edges
from spext.graph import (
    BlockDecomposition,
    UnsupportedOrderError,
    block_decomposition,
    canonical_label,
    is_cactus,
    is_connected,
    is_odd_cycle_graph,
    is_unicyclic,
    make_graph,
)
from tests.strategies import to_nx

KNOWN_COUNTS = {
    GraphClass.CONNECTED: {3: 2, 4: 6, 5: 21, 6: 112},
    GraphClass.TREE: {3: 1, 4: 2, 5: 3, 6: 6, 7: 11},
    GraphClass.UNICYCLIC: {3: 1, 4: 2, 5: 5, 6: 13, 7: 33},
    GraphClass.CACTUS: {3: 2, 4: 4, 5: 9, 6: 23, 7: 63},
    GraphClass.MAX_EDGE_CACTUS: {3: 1, 4: 2, 5: 1, 6: 4, 7: 2},
}

SLOW_COUNTS = {
    GraphClass.CONNECTED: {7: 853},
    GraphClass.TREE: {8: 23, 9: 47},
    GraphClass.UNICYCLIC: {8: 89, 9: 240},
    GraphClass.CACTUS: {8: 188, 9: 596},
}

_MEMBERSHIP = {
    GraphClass.CONNECTED: lambda g: True,
    GraphClass.TREE: lambda g: g.m == g.n - 1,
    GraphClass.UNICYCLIC: is_unicyclic,
    GraphClass.CACTUS: is_cactus,
    GraphClass.ODD_CYCLE: is_odd_cycle_graph,
    GraphClass.MAX_EDGE_CACTUS: is_max_edge_cactus,
}


def _brute_force_count(n, graph_class):
    """Isomorphism classes among all labeled graphs, bucketed by WL hash."""
    member = _MEMBERSHIP[graph_class]
    pairs = list(combinations(range(n), 2))
    buckets = {}
    for mask in range(1 << len(pairs)):
        graph = make_graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
        if not is_connected(graph) or not member(graph):
            continue
        g = to_nx(graph)
        bucket = buckets.setdefault(nx.weisfeiler_lehman_graph_hash(g), [])
        if not any(nx.is_isomorphic(g, other) for other in bucket):
            bucket.append(g)
    return sum(len(b) for b in buckets.values())


def _cycle_lengths(graph):
    blocks = block_decomposition(graph).blocks
    return sorted(len(b) for b in blocks if BlockDecomposition.is_cycle_block(b))


def _bridge_count(graph):
    return sum(1 for b in block_decomposition(graph).blocks if len(b) == 1)


class TestEnumerateClass:
    """Tests for enumerate_class"""

    @pytest.mark.parametrize(
        "graph_class, n, expected",
        [(c, n, count) for c, counts in KNOWN_COUNTS.items() for n, count in counts.items()],
    )
    def test_known_counts(self, graph_class, n, expected):
        assert sum(1 for _ in enumerate_class(n, graph_class, jobs=1)) == expected

    @pytest.mark.slow
    @pytest.mark.parametrize(
        "graph_class, n, expected",
        [(c, n, count) for c, counts in SLOW_COUNTS.items() for n, count in counts.items()],
    )
    def test_known_counts_large(self, graph_class, n, expected):
        assert sum(1 for _ in enumerate_class(n, graph_class, jobs=1)) == expected

    @pytest.mark.parametrize("graph_class", list(GraphClass))
    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_matches_labeled_brute_force(self, graph_class, n):
        found = list(enumerate_class(n, graph_class, jobs=1))
        assert len(found) == _brute_force_count(n, graph_class)

    @pytest.mark.slow
    @pytest.mark.parametrize("graph_class", list(GraphClass))
    def test_matches_labeled_brute_force_order_six(self, graph_class):
        found = list(enumerate_class(6, graph_class, jobs=1))
        assert len(found) == _brute_force_count(6, graph_class)

    def test_members_canonical_distinct_and_sorted(self):
        found = list(enumerate_class(6, GraphClass.CACTUS, jobs=1))
        assert all(canonical_label(g) == g for g in found)
        assert len(set(found)) == len(found)
        assert found == sorted(found, key=lambda g: (g.m, g.edges))

    def test_members_belong_to_class(self):
        for graph in enumerate_class(6, GraphClass.ODD_CYCLE, jobs=1):
            assert is_connected(graph)
            assert is_odd_cycle_graph(graph)

    def test_parallel_matches_serial(self):
        serial = list(enumerate_class(6, GraphClass.UNICYCLIC, jobs=1))
        parallel = list(enumerate_class(6, GraphClass.UNICYCLIC, jobs=2))
        assert parallel == serial

    def test_accepts_class_names(self):
        by_name = list(enumerate_class(5, "max-edge-cactus", jobs=1))
        assert by_name == list(enumerate_class(5, GraphClass.MAX_EDGE_CACTUS, jobs=1))

    def test_unknown_class(self):
        with pytest.raises(UnsupportedClassError):
            list(enumerate_class(5, "planar", jobs=1))

    @pytest.mark.parametrize("n", [2, 10])
    def test_order_bounds(self, n):
        with pytest.raises(UnsupportedOrderError):
            enumerate_class(n, GraphClass.CACTUS, jobs=1)

    def test_connected_sweep_cap(self):
        with pytest.raises(UnsupportedOrderError, match="n <= 8"):
            enumerate_class(9, GraphClass.CONNECTED, jobs=1)

    def test_cap_from_environment(self, monkeypatch):
        monkeypatch.setenv("SPEXT_ENUMERATION_MAX_ORDER", "5")
        with pytest.raises(UnsupportedOrderError):
            enumerate_class(6, GraphClass.TREE, jobs=1)


class TestGraphClass:
    """Tests for class name parsing"""

    @pytest.mark.parametrize("name", ["max-edge-cactus", "MAX_EDGE_CACTUS", " max_edge_cactus "])
    def test_parse(self, name):
        assert GraphClass.parse(name) is GraphClass.MAX_EDGE_CACTUS

    def test_parse_rejects_unknown(self):
        with pytest.raises(UnsupportedClassError, match="planar"):
            GraphClass.parse("planar")


class TestMaxEdgeCactusSweeps:
    """Edge-count ceiling and structure of max-edge cacti over every small order"""

    @pytest.mark.parametrize("n", range(3, 8))
    def test_edge_ceiling(self, n):
        assert max(g.m for g in enumerate_class(n, GraphClass.CACTUS, jobs=1)) == (
            max_cactus_edges(n)
        )

    @pytest.mark.slow
    def test_edge_ceiling_order_eight(self):
        assert max(g.m for g in enumerate_class(8, GraphClass.CACTUS, jobs=1)) == 10

    @pytest.mark.parametrize(
        "n", [*range(3, 8), pytest.param(8, marks=pytest.mark.slow)]
    )
    def test_cycle_structure(self, n):
        """Odd n: triangles only, no bridge. Even n: one bridge, or one C_4 and no bridge."""
        for graph in enumerate_class(n, GraphClass.MAX_EDGE_CACTUS, jobs=1):
            lengths = _cycle_lengths(graph)
            bridges = _bridge_count(graph)
            if n % 2:
                assert set(lengths) == {3} and bridges == 0, graph
            elif bridges == 1:
                assert set(lengths) <= {3}, graph
            else:
                assert bridges == 0 and lengths.count(4) == 1, graph
                assert set(lengths) <= {3, 4}, graph

    def test_c3_and_c4_sharing_a_vertex_is_max_edge(self):
        graph = make_graph(6, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (0, 5), (4, 5)])
        found = list(enumerate_class(6, GraphClass.MAX_EDGE_CACTUS, jobs=1))
        assert canonical_label(graph) in found
