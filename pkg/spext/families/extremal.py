"""Edge-count characterisations of extremal cacti and recognisers for the extremal graphs."""
from itertools import combinations

from ..graph.canonical import canonical_label
from ..graph.models import Graph
from ..graph.predicates import is_cactus, is_unicyclic
from ..graph.structure import is_connected
from .constructions import h_n


def max_cactus_edges(n: int) -> int:
    """Maximum edge count of a connected cactus of order n.

    n - 1 + floor((n - 1) / 2), forced by the H_n construction; n - 1 for
    n <= 2. The enumeration sweep is the authority that checks this.
    """
    if n < 1:
        raise ValueError(f"Order must be positive, got {n}")
    if n <= 2:
        return n - 1
    return n - 1 + (n - 1) // 2


def is_max_edge_cactus(graph: Graph) -> bool:
    """Connected cactus attaining max_cactus_edges(n)."""
    if graph.n < 1:
        return False
    return (
        graph.m == max_cactus_edges(graph.n)
        and is_connected(graph)
        and is_cactus(graph)
    )


def is_edge_maximal_cactus(graph: Graph) -> bool:
    """Connected cactus to which no edge can be added without breaking the cactus property."""
    if graph.n < 1 or not is_connected(graph) or not is_cactus(graph):
        return False
    for u, v in combinations(range(graph.n), 2):
        if not graph.has_edge(u, v) and is_cactus(graph.with_edge(u, v)):
            return False
    return True


def is_k1n_plus(graph: Graph) -> bool:
    """Unicyclic with Delta = n - 1."""
    return is_unicyclic(graph) and graph.max_degree == graph.n - 1


def is_h_n(graph: Graph) -> bool:
    return graph.n >= 3 and canonical_label(graph) == canonical_label(h_n(graph.n))
