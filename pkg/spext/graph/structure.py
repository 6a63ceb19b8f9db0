"""Structural queries: neighbourhoods, connectivity and block decomposition."""
import logging
from collections import deque
from typing import List, Tuple

from .models import BlockDecomposition, Edge, Graph, _check_vertex

logger = logging.getLogger(__name__)


def neighbors(graph: Graph, v: int) -> frozenset:
    """N(v): the vertices adjacent to v."""
    _check_vertex(graph.n, v)
    return graph.adjacency[v]


def common_neighbors(graph: Graph, u: int, v: int) -> frozenset:
    """N(u) ∩ N(v); the "common vertex" of two adjacent vertices."""
    return neighbors(graph, u) & neighbors(graph, v)


def components(graph: Graph) -> List[List[int]]:
    """Connected components as sorted vertex lists, ordered by their minimum vertex."""
    seen = [False] * graph.n
    result = []
    for start in range(graph.n):
        if seen[start]:
            continue
        seen[start] = True
        queue = deque([start])
        comp = [start]
        while queue:
            u = queue.popleft()
            for w in graph.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
                    comp.append(w)
        result.append(sorted(comp))
    return result


def is_connected(graph: Graph) -> bool:
    """True iff a traversal from vertex 0 reaches every vertex (vacuous for n <= 1)."""
    if graph.n <= 1:
        return True
    return len(components(graph)[0]) == graph.n


def block_decomposition(graph: Graph) -> BlockDecomposition:
    """Biconnected components and cut vertices.

    Iterative Hopcroft-Tarjan: a DFS keeps an edge stack, and whenever a child
    subtree cannot reach above its parent (low[child] >= disc[parent]) the
    edges down to the tree edge (parent, child) form one block.
    """
    n = graph.n
    adj = [sorted(s) for s in graph.adjacency]
    disc = [-1] * n
    low = [0] * n
    timer = 0
    edge_stack: List[Edge] = []
    blocks = []
    cuts = set()

    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        frames = [(root, -1, iter(adj[root]))]

        while frames:
            u, parent, it = frames[-1]
            descended = False
            for w in it:
                if disc[w] == -1:
                    edge_stack.append((u, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    frames.append((w, u, iter(adj[w])))
                    descended = True
                    break
                if w != parent and disc[w] < disc[u]:
                    # back edge, recorded once from the deeper endpoint
                    edge_stack.append((u, w))
                    low[u] = min(low[u], disc[w])
            if descended:
                continue

            frames.pop()
            if not frames:
                break
            p = frames[-1][0]
            low[p] = min(low[p], low[u])
            if low[u] >= disc[p]:
                block = []
                while True:
                    a, b = edge_stack.pop()
                    block.append((min(a, b), max(a, b)))
                    if (a, b) == (p, u):
                        break
                blocks.append(tuple(sorted(block)))
                if p == root:
                    root_children += 1
                else:
                    cuts.add(p)

        if root_children > 1:
            cuts.add(root)

    blocks.sort()
    return BlockDecomposition(blocks=tuple(blocks), cut_vertices=frozenset(cuts))


def cycle_edges(graph: Graph) -> frozenset:
    """Edges lying on at least one cycle (edges of non-trivial blocks)."""
    decomposition = block_decomposition(graph)
    return frozenset(e for block in decomposition.blocks if len(block) > 1 for e in block)


def _walk_cycle(block: Tuple[Edge, ...]) -> Tuple[int, ...]:
    """Orders the vertices of a cycle block, starting at its least vertex
    and stepping to the smaller of its two neighbours."""
    adjacent = {}
    for u, v in block:
        adjacent.setdefault(u, []).append(v)
        adjacent.setdefault(v, []).append(u)
    start = min(adjacent)
    order = [start]
    prev, current = start, min(adjacent[start])
    while current != start:
        order.append(current)
        a, b = adjacent[current]
        prev, current = current, (b if a == prev else a)
    return tuple(order)


def cycle_blocks(graph: Graph) -> List[Tuple[int, ...]]:
    """Cycle blocks of the graph as vertex sequences, in block order.

    For a cactus these are exactly its cycles.
    """
    decomposition = block_decomposition(graph)
    return [
        _walk_cycle(block)
        for block in decomposition.blocks
        if BlockDecomposition.is_cycle_block(block)
    ]


def pendant_edges(graph: Graph) -> List[Edge]:
    """Pendant edges as (support, leaf) pairs, sorted by support then leaf.

    An edge whose endpoints both have degree 1 (K_2) is reported once, with
    the lower label as support.
    """
    result = []
    for leaf in range(graph.n):
        if len(graph.adjacency[leaf]) != 1:
            continue
        (support,) = graph.adjacency[leaf]
        if len(graph.adjacency[support]) == 1 and support > leaf:
            continue
        result.append((support, leaf))
    result.sort()
    return result
