"""
Canonical labeling for small graphs

Individualisation-refinement search: vertices are split into an ordered
partition by colour refinement (counts of neighbours in each cell), the first
non-singleton cell is branched on, and every discrete leaf yields a relabeled
edge tuple. The lexicographically least relabeling is canonical.

Branches are pruned only with transpositions of twin vertices (identical
neighbourhoods apart from each other), which are automorphisms that fix the
individualised prefix. That keeps the search sound while making the complete
and empty graphs, stars and H_n cheap. Orders above the configured limit are
refused rather than attempted.
"""
import logging
from typing import List, Optional, Sequence, Tuple

from ..config import get_settings
from .models import Edge, Graph, UnsupportedOrderError

logger = logging.getLogger(__name__)

Cells = List[List[int]]


def _refine(cells: Cells, masks: Sequence[int]) -> Cells:
    """Colour refinement to an equitable ordered partition."""
    while True:
        cell_masks = []
        for cell in cells:
            mask = 0
            for v in cell:
                mask |= 1 << v
            cell_masks.append(mask)

        refined: Cells = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            groups = {}
            for v in cell:
                signature = tuple((masks[v] & m).bit_count() for m in cell_masks)
                groups.setdefault(signature, []).append(v)
            if len(groups) > 1:
                split = True
            for signature in sorted(groups):
                refined.append(groups[signature])
        cells = refined
        if not split:
            return cells


def _certificate(order: Sequence[int], edges: Sequence[Edge]) -> Tuple[Edge, ...]:
    position = [0] * len(order)
    for index, v in enumerate(order):
        position[v] = index
    relabeled = []
    for u, v in edges:
        a, b = position[u], position[v]
        relabeled.append((a, b) if a < b else (b, a))
    relabeled.sort()
    return tuple(relabeled)


def _are_twins(masks: Sequence[int], a: int, b: int) -> bool:
    return (masks[a] & ~(1 << b)) == (masks[b] & ~(1 << a))


def _search(graph: Graph) -> Tuple[Tuple[Edge, ...], Tuple[int, ...]]:
    masks = graph.bitmasks
    best_cert: Optional[Tuple[Edge, ...]] = None
    best_order: Tuple[int, ...] = ()

    def visit(cells: Cells) -> None:
        nonlocal best_cert, best_order
        target = next((i for i, cell in enumerate(cells) if len(cell) > 1), None)
        if target is None:
            order = tuple(cell[0] for cell in cells)
            cert = _certificate(order, graph.edges)
            if best_cert is None or cert < best_cert:
                best_cert, best_order = cert, order
            return

        tried: List[int] = []
        cell = cells[target]
        for v in cell:
            if any(_are_twins(masks, v, w) for w in tried):
                continue
            tried.append(v)
            rest = [w for w in cell if w != v]
            branch = cells[:target] + [[v], rest] + cells[target + 1:]
            visit(_refine(branch, masks))

    visit(_refine([list(range(graph.n))], masks))
    return best_cert or (), best_order


def _check_order(graph: Graph, max_order: Optional[int]) -> None:
    limit = max_order if max_order is not None else get_settings().canonical_max_order
    if graph.n > limit:
        raise UnsupportedOrderError(
            f"Canonical labeling supports n <= {limit}, got n={graph.n}"
        )


def canonical_relabeling(graph: Graph, max_order: Optional[int] = None) -> Tuple[int, ...]:
    """Returns order such that order[i] is the vertex that receives label i."""
    _check_order(graph, max_order)
    if graph.n == 0:
        return ()
    _, order = _search(graph)
    return order


def canonical_label(graph: Graph, max_order: Optional[int] = None) -> Graph:
    """Canonical form: identical for two graphs iff they are isomorphic."""
    _check_order(graph, max_order)
    if graph.n <= 1:
        return Graph(graph.n, ())
    cert, _ = _search(graph)
    return Graph(graph.n, cert)


def is_isomorphic(first: Graph, second: Graph, max_order: Optional[int] = None) -> bool:
    if first.n != second.n or first.m != second.m:
        return False
    if sorted(first.degrees) != sorted(second.degrees):
        return False
    return canonical_label(first, max_order) == canonical_label(second, max_order)
