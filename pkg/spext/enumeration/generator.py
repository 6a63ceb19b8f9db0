"""
Isomorph-free generation of connected graphs in a class

Graphs are grown one edge at a time from the edgeless graph on n vertices.
Each level holds one canonical representative per isomorphism class with m
edges; a candidate is dropped as soon as it leaves a property closed under
edge deletion (cactus, odd-cycle, cyclomatic number <= 1 or 0), since no
supergraph could satisfy it again. Members are filtered from all levels and
emitted sorted by (m, edges).
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations
from typing import Callable, Dict, Iterator, List, Optional, Set, Union

from ..config import get_settings
from ..families.extremal import is_max_edge_cactus
from ..graph.canonical import canonical_label
from ..graph.models import Graph, UnsupportedOrderError
from ..graph.predicates import is_cactus, is_odd_cycle_graph, is_unicyclic
from ..graph.structure import components, is_connected
from .models import GraphClass

logger = logging.getLogger(__name__)


def _cyclomatic(graph: Graph) -> int:
    return graph.m - graph.n + len(components(graph))


def _always(graph: Graph) -> bool:
    return True


def _is_tree(graph: Graph) -> bool:
    return graph.m == graph.n - 1 and is_connected(graph)


# Properties closed under edge deletion, checked on every candidate.
_HEREDITARY: Dict[GraphClass, Callable[[Graph], bool]] = {
    GraphClass.CACTUS: is_cactus,
    GraphClass.MAX_EDGE_CACTUS: is_cactus,
    GraphClass.ODD_CYCLE: is_odd_cycle_graph,
    GraphClass.UNICYCLIC: lambda g: _cyclomatic(g) <= 1,
    GraphClass.TREE: lambda g: _cyclomatic(g) == 0,
    GraphClass.CONNECTED: _always,
}

_MEMBERSHIP: Dict[GraphClass, Callable[[Graph], bool]] = {
    GraphClass.CACTUS: is_cactus,
    GraphClass.MAX_EDGE_CACTUS: is_max_edge_cactus,
    GraphClass.ODD_CYCLE: is_odd_cycle_graph,
    GraphClass.UNICYCLIC: is_unicyclic,
    GraphClass.TREE: _is_tree,
    GraphClass.CONNECTED: _always,
}


def _expand(task) -> Set[Graph]:
    """Canonical one-edge extensions of a chunk of graphs that keep the hereditary property."""
    graphs, graph_class, max_order = task
    keep = _HEREDITARY[graph_class]
    found = set()
    for graph in graphs:
        for u, v in combinations(range(graph.n), 2):
            if graph.has_edge(u, v):
                continue
            candidate = graph.with_edge(u, v)
            if keep(candidate):
                found.add(canonical_label(candidate, max_order))
    return found


def _chunks(items: List[Graph], count: int) -> List[List[Graph]]:
    size = max(1, -(-len(items) // count))
    return [items[i:i + size] for i in range(0, len(items), size)]


def _order_cap(graph_class: GraphClass) -> int:
    settings = get_settings()
    if graph_class == GraphClass.CONNECTED:
        return settings.sweep_max_order
    return settings.enumeration_max_order


def enumerate_class(
    n: int,
    graph_class: Union[GraphClass, str],
    jobs: Optional[int] = None,
    max_order: Optional[int] = None,
) -> Iterator[Graph]:
    """
    One canonical representative per isomorphism class of connected graphs
    of order n in graph_class, sorted by (m, edges).

    Args:
        n: Order, 3 <= n <= cap (sweep cap for CONNECTED, class cap otherwise)
        graph_class: Class to generate
        jobs: Worker processes for level expansion (settings default when None)
        max_order: Override for the order cap

    Raises:
        UnsupportedOrderError: n outside the supported range
    """
    if not isinstance(graph_class, GraphClass):
        graph_class = GraphClass.parse(graph_class)
    cap = max_order if max_order is not None else _order_cap(graph_class)
    if not 3 <= n <= cap:
        raise UnsupportedOrderError(
            f"Enumeration of {graph_class.value} supports 3 <= n <= {cap}, got {n}"
        )
    jobs = jobs if jobs is not None else get_settings().jobs
    member = _MEMBERSHIP[graph_class]
    canonical_cap = max(cap, get_settings().canonical_max_order)

    members: List[Graph] = []
    level = [Graph(n)]
    edges = 0
    executor = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else None
    try:
        while level:
            members.extend(g for g in level if is_connected(g) and member(g))
            if executor is None:
                expanded = _expand((level, graph_class, canonical_cap))
            else:
                tasks = [(chunk, graph_class, canonical_cap) for chunk in _chunks(level, jobs * 4)]
                expanded = set().union(*executor.map(_expand, tasks))
            level = sorted(expanded, key=lambda g: g.edges)
            edges += 1
            logger.debug(f"{graph_class.value} n={n}: {len(level)} classes with {edges} edges")
    finally:
        if executor is not None:
            executor.shutdown()

    logger.info(f"Enumerated {len(members)} {graph_class.value} classes at n={n}")
    return iter(sorted(members, key=lambda g: (g.m, g.edges)))
