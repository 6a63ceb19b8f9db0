"""Simple cycle enumeration by DFS, used as an oracle for cycle-parity predicates."""
from typing import Iterator, List, Optional, Tuple

from ..config import get_settings
from ..graph.models import Graph, UnsupportedOrderError


def iter_cycles(graph: Graph) -> Iterator[Tuple[int, ...]]:
    """
    Yields every simple cycle once, as a vertex sequence.

    A cycle is reported from its least vertex s, walking first to the
    smaller of its two neighbours on the cycle; only vertices above s are
    visited from s, so no rotation or reflection repeats.
    """
    adjacency = [sorted(s) for s in graph.adjacency]
    for start in range(graph.n):
        path = [start]
        on_path = {start}

        def extend(current: int) -> Iterator[Tuple[int, ...]]:
            for w in adjacency[current]:
                if w == start:
                    if len(path) >= 3 and path[1] < path[-1]:
                        yield tuple(path)
                    continue
                if w < start or w in on_path:
                    continue
                path.append(w)
                on_path.add(w)
                yield from extend(w)
                path.pop()
                on_path.discard(w)

        yield from extend(start)


def all_cycles(graph: Graph, max_order: Optional[int] = None) -> List[Tuple[int, ...]]:
    """Every simple cycle of a small graph.

    Raises:
        UnsupportedOrderError: n above the enumeration cap
    """
    max_order = max_order if max_order is not None else get_settings().enumeration_max_order
    if graph.n > max_order:
        raise UnsupportedOrderError(f"all_cycles supports n <= {max_order}, got {graph.n}")
    return list(iter_cycles(graph))
