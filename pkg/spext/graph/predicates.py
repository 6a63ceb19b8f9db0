"""Class predicates: cactus, unicyclic, odd-cycle graph, and the t(G) count."""
from .models import BlockDecomposition, Graph
from .structure import block_decomposition, is_connected


def is_cactus(graph: Graph) -> bool:
    """Every block is a single edge or a cycle (no two cycles share an edge).

    Disconnected graphs are allowed: a forest of cacti is a cactus.
    """
    for block in block_decomposition(graph).blocks:
        if len(block) > 1 and not BlockDecomposition.is_cycle_block(block):
            return False
    return True


def is_unicyclic(graph: Graph) -> bool:
    """Connected with exactly n edges."""
    return graph.n >= 3 and graph.m == graph.n and is_connected(graph)


def is_odd_cycle_graph(graph: Graph) -> bool:
    """Every cycle has odd length.

    Equivalent to: every block is a single edge or an odd cycle. A 2-connected
    block that is not a cycle holds two cycles sharing a path, and the parity
    argument of "every odd-cycle graph is a cactus" then yields an even cycle.
    """
    for block in block_decomposition(graph).blocks:
        if len(block) == 1:
            continue
        if not BlockDecomposition.is_cycle_block(block) or len(block) % 2 == 0:
            return False
    return True


def t_count(graph: Graph) -> int:
    """t(G): number of vertices of degree >= 3."""
    return sum(1 for d in graph.degrees if d >= 3)
