"""The neighbour switch, Perron orientation of a vertex pair and the high-degree merge."""
import logging
from typing import Iterable, Optional, Tuple

from ..config import get_settings
from ..families.extremal import is_max_edge_cactus
from ..graph.models import Graph, make_graph
from ..spectral.models import PerronResult
from ..spectral.solver import spectral_radius
from .models import TransformPreconditionError

logger = logging.getLogger(__name__)


def sigma_switch(graph: Graph, u: int, v: int, moved: Iterable[int]) -> Graph:
    """
    Rewire v's neighbours in moved to u.

    Returns G - {vs : s in S} + {us : s in S}. The result is simple whenever
    S is a nonempty subset of N(v) \\ (N(u) | {u}); rho increases strictly
    when G is connected and x_u >= x_v, but that is the caller's claim to
    check, not a precondition here.

    Args:
        graph: Source graph
        u: Receiving vertex
        v: Donating vertex
        moved: The set S

    Raises:
        TransformPreconditionError: u == v, S empty, S not inside N(v), or
            S meeting N(u) | {u}
    """
    moved = sorted(set(moved))
    for w in (u, v):
        if not 0 <= w < graph.n:
            raise TransformPreconditionError(f"Vertex {w} out of range for order {graph.n}")
    if u == v:
        raise TransformPreconditionError(f"Switch needs distinct vertices, got u=v={u}")
    if not moved:
        raise TransformPreconditionError(f"Switch ({u},{v}) has an empty vertex set")
    neighbours_v = graph.adjacency[v]
    blocked = graph.adjacency[u] | {u}
    outside = [s for s in moved if s not in neighbours_v]
    if outside:
        raise TransformPreconditionError(f"Vertices {outside} are not neighbours of v={v}")
    clashing = [s for s in moved if s in blocked]
    if clashing:
        raise TransformPreconditionError(
            f"Vertices {clashing} are u={u} or already adjacent to it; switch would not be simple"
        )

    removed = {(min(v, s), max(v, s)) for s in moved}
    edges = [e for e in graph.edges if e not in removed]
    edges.extend((u, s) for s in moved)
    return make_graph(graph.n, edges)


def private_neighbours(graph: Graph, u: int, v: int) -> Tuple[int, ...]:
    """N(v) \\ (N(u) | {u}), sorted: the largest valid switch set from v to u."""
    return tuple(sorted(graph.adjacency[v] - graph.adjacency[u] - {u}))


def orient_by_perron(
    graph: Graph,
    a: int,
    b: int,
    perron: Optional[PerronResult] = None,
    tie_guard: Optional[float] = None,
) -> Tuple[int, int]:
    """Orders a vertex pair as (u, v) with x_u >= x_v.

    Entries closer than tie_guard are treated as equal and the lower label
    becomes u, so traces replay identically.
    """
    perron = perron if perron is not None else spectral_radius(graph)
    tie_guard = tie_guard if tie_guard is not None else get_settings().tie_guard
    xa, xb = perron.entry(a), perron.entry(b)
    if abs(xa - xb) <= tie_guard:
        return (min(a, b), max(a, b))
    return (a, b) if xa > xb else (b, a)


def merge_high_degree(graph: Graph, u: int, v: int) -> Graph:
    """
    Moves every private neighbour of v onto u in a max-edge cactus.

    With u, v adjacent and both of degree >= 3 the result is again a
    connected max-edge cactus in which v has degree 2, so t drops by one.
    The caller orients the pair so that x_u >= x_v.

    Raises:
        TransformPreconditionError: graph not a max-edge cactus, u and v not
            adjacent, or either of degree below 3
    """
    if not is_max_edge_cactus(graph):
        raise TransformPreconditionError("Merge needs a connected max-edge cactus")
    if not graph.has_edge(u, v):
        raise TransformPreconditionError(f"Merge needs adjacent vertices, ({u},{v}) is not an edge")
    if graph.degree(u) < 3 or graph.degree(v) < 3:
        raise TransformPreconditionError(
            f"Merge needs d(u), d(v) >= 3, got d({u})={graph.degree(u)} d({v})={graph.degree(v)}"
        )
    return sigma_switch(graph, u, v, private_neighbours(graph, u, v))
