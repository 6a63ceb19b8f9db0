"""
Graph value objects - immutable simple undirected graphs

Vertices are dense integers 0..n-1. Edges are stored canonically: every pair
is sorted and the pair tuple is sorted lexicographically, so two Graph values
describing the same labeled graph compare (and hash) equal.
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Tuple

import numpy as np


Edge = Tuple[int, int]


class InvalidGraphError(ValueError):
    """Raised when an edge list does not describe a simple graph"""
    pass


class VertexOutOfRangeError(InvalidGraphError):
    """Raised when a vertex index is outside 0..n-1"""
    pass


class InvalidOrderError(ValueError):
    """Raised when a constructor is asked for an order it cannot build"""
    pass


class UnsupportedOrderError(ValueError):
    """Raised when an order exceeds a documented brute-force limit"""
    pass


def _check_vertex(n: int, v: int) -> None:
    if not 0 <= v < n:
        raise VertexOutOfRangeError(f"Vertex {v} out of range for order {n}")


@dataclass(frozen=True)
class Graph:
    """
    Simple undirected graph on vertices 0..n-1

    Construct through make_graph() for arbitrary input; the constructor itself
    only accepts edges that are already in canonical form.
    """
    n: int
    edges: Tuple[Edge, ...] = field(default=())

    def __post_init__(self):
        if self.n < 0:
            raise InvalidOrderError(f"Order must be non-negative, got {self.n}")
        previous = None
        for pair in self.edges:
            u, v = pair
            if u == v:
                raise InvalidGraphError(f"Self-loop at ({u},{v})")
            if u > v:
                raise InvalidGraphError(f"Edge ({u},{v}) is not in canonical orientation")
            if v >= self.n or u < 0:
                raise VertexOutOfRangeError(
                    f"Edge ({u},{v}) has endpoint out of range for order {self.n}"
                )
            if previous is not None and pair <= previous:
                if pair == previous:
                    raise InvalidGraphError(f"Duplicate edge ({u},{v})")
                raise InvalidGraphError(f"Edges are not sorted at ({u},{v})")
            previous = pair

    @cached_property
    def adjacency(self) -> Tuple[frozenset, ...]:
        """Neighbour sets indexed by vertex"""
        neighbours = [set() for _ in range(self.n)]
        for u, v in self.edges:
            neighbours[u].add(v)
            neighbours[v].add(u)
        return tuple(frozenset(s) for s in neighbours)

    @cached_property
    def bitmasks(self) -> Tuple[int, ...]:
        """Neighbour sets as integer bitmasks (bit w set iff w is adjacent)"""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @cached_property
    def edge_set(self) -> frozenset:
        return frozenset(self.edges)

    @property
    def m(self) -> int:
        """Number of edges"""
        return len(self.edges)

    def degree(self, v: int) -> int:
        _check_vertex(self.n, v)
        return len(self.adjacency[v])

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(len(s) for s in self.adjacency)

    @property
    def max_degree(self) -> int:
        """Delta(G); 0 for the empty graph"""
        return max(self.degrees, default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edge_set

    def with_edge(self, u: int, v: int) -> "Graph":
        """Returns a copy with edge uv added"""
        return make_graph(self.n, list(self.edges) + [(u, v)])

    def without_edge(self, u: int, v: int) -> "Graph":
        """Returns a copy with edge uv removed"""
        pair = (min(u, v), max(u, v))
        if pair not in self.edge_set:
            raise InvalidGraphError(f"Edge ({u},{v}) is not in the graph")
        return Graph(self.n, tuple(e for e in self.edges if e != pair))

    def adjacency_matrix(self) -> np.ndarray:
        """Dense float64 adjacency matrix A(G)"""
        matrix = np.zeros((self.n, self.n), dtype=np.float64)
        for u, v in self.edges:
            matrix[u, v] = 1.0
            matrix[v, u] = 1.0
        return matrix

    def edge_list(self) -> list:
        return [list(e) for e in self.edges]

    def __str__(self) -> str:
        body = " ".join(f"{u}-{v}" for u, v in self.edges)
        return f"Graph(n={self.n}; {body})"


def make_graph(n: int, edge_list: Iterable[Tuple[int, int]]) -> Graph:
    """
    Creates a canonical Graph from an arbitrary edge list

    Pair orientation and input order are irrelevant. Self-loops, duplicate
    edges (in either orientation) and out-of-range endpoints are rejected
    with a message naming the offending pair.
    """
    if n < 0:
        raise InvalidOrderError(f"Order must be non-negative, got {n}")
    seen = set()
    for raw in edge_list:
        u, v = int(raw[0]), int(raw[1])
        if u == v:
            raise InvalidGraphError(f"Self-loop at ({u},{v})")
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRangeError(f"Edge ({u},{v}) has endpoint out of range for order {n}")
        pair = (min(u, v), max(u, v))
        if pair in seen:
            raise InvalidGraphError(f"Duplicate edge ({u},{v})")
        seen.add(pair)
    return Graph(n, tuple(sorted(seen)))


@dataclass(frozen=True)
class BlockDecomposition:
    """
    Biconnected blocks and cut vertices

    Blocks partition the edge set; each block is a single edge or a
    2-connected subgraph. Blocks are sorted by their canonical edge tuples.
    """
    blocks: Tuple[Tuple[Edge, ...], ...]
    cut_vertices: frozenset

    @property
    def edge_count(self) -> int:
        return sum(len(b) for b in self.blocks)

    @staticmethod
    def block_vertices(block: Tuple[Edge, ...]) -> frozenset:
        return frozenset(v for e in block for v in e)

    @classmethod
    def is_cycle_block(cls, block: Tuple[Edge, ...]) -> bool:
        """A 2-connected block is a cycle iff it has as many edges as vertices"""
        return len(block) >= 3 and len(block) == len(cls.block_vertices(block))
