"""Constructors for the named graphs: stars, cycles, paths, H_n and K_{1,n-1}^+."""
from ..graph.models import Graph, InvalidOrderError, make_graph


def _require_order(name: str, n: int, minimum: int) -> None:
    if n < minimum:
        raise InvalidOrderError(f"{name} needs n >= {minimum}, got {n}")


def star(n: int) -> Graph:
    """K_{1,n-1} with centre 0."""
    _require_order("star", n, 2)
    return make_graph(n, [(0, leaf) for leaf in range(1, n)])


def cycle(n: int) -> Graph:
    """C_n = 0-1-...-(n-1)-0."""
    _require_order("cycle", n, 3)
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    """P_n = 0-1-...-(n-1)."""
    _require_order("path", n, 1)
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def h_n(n: int) -> Graph:
    """Star K_{1,n-1} plus floor((n-1)/2) independent leaf edges (1,2), (3,4), ...

    For even n the leaf n-1 stays pendant; for odd n every leaf is paired.
    """
    _require_order("H_n", n, 3)
    pairs = [(0, leaf) for leaf in range(1, n)]
    pairs.extend((leaf, leaf + 1) for leaf in range(1, n - 1, 2))
    return make_graph(n, pairs)


def k1n_plus(n: int) -> Graph:
    """K_{1,n-1}^+: star K_{1,n-1} plus the leaf edge (1,2)."""
    _require_order("K_{1,n-1}^+", n, 3)
    return make_graph(n, [(0, leaf) for leaf in range(1, n)] + [(1, 2)])
