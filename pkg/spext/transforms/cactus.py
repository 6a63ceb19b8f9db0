"""
Cactus normalisation and ascent

normalize_to_max_edge turns any connected cactus into a cactus with the
maximum edge count for its order through rho-increasing rewrites:

    saturate       greedy cactus-preserving edge additions
    step 1         shrink_cycle_once until every cycle is a triangle
    step 2         add_consecutive_bridge_edges
    step 3         eliminate_triangle_bridge (internal bridges become pendant)
    steps 4-5      consolidate_pendants (pair pendants into triangles)

The steps are repeated until a full pass changes nothing. cactus_ascent then
merges adjacent high-degree vertices until t(G) <= 1, and maximize_cactus runs
both. Every sub-operation accepts a TraceRecorder so that a whole pipeline is
recorded into a single trace; selections are always lexicographically least.
"""

import logging
from collections import defaultdict
from itertools import combinations
from typing import List, Optional, Tuple

from ..families.extremal import is_max_edge_cactus
from ..graph.models import Edge, Graph
from ..graph.predicates import is_cactus, t_count
from ..graph.structure import components, cycle_blocks, cycle_edges, is_connected, pendant_edges
from .models import ClosureViolation, StepKind, TransformPreconditionError, TransformTrace
from .recorder import TraceRecorder, attach
from .switch import orient_by_perron, private_neighbours

logger = logging.getLogger(__name__)


def _require_connected_cactus(graph: Graph, operation: str) -> None:
    if not is_connected(graph):
        raise TransformPreconditionError(f"{operation} needs a connected graph")
    if not is_cactus(graph):
        raise TransformPreconditionError(f"{operation} needs a cactus")


def _require_triangles(graph: Graph, operation: str) -> None:
    long_cycles = [c for c in cycle_blocks(graph) if len(c) > 3]
    if long_cycles:
        raise TransformPreconditionError(
            f"{operation} needs every cycle to be a triangle, found {list(long_cycles[0])}"
        )


def _bridges(graph: Graph) -> List[Edge]:
    on_cycles = cycle_edges(graph)
    return [e for e in graph.edges if e not in on_cycles]


def _consecutive_bridges(graph: Graph) -> Optional[Tuple[int, int, int]]:
    """(a, v, b) with va and vb bridges, v least, then a and b least."""
    bridges = set(_bridges(graph))
    for v in range(graph.n):
        ends = sorted(w for w in graph.adjacency[v] if (min(v, w), max(v, w)) in bridges)
        if len(ends) >= 2:
            return ends[0], v, ends[1]
    return None


def _internal_bridge(graph: Graph) -> Optional[Edge]:
    for a, b in _bridges(graph):
        if graph.degree(a) >= 2 and graph.degree(b) >= 2:
            return (a, b)
    return None


def saturate_cactus(
    graph: Graph, recorder: Optional[TraceRecorder] = None, tol: Optional[float] = None
) -> Graph:
    """
    Adds non-edges in lexicographic order whenever the result is still a cactus.

    One pass is enough: a pair that cannot be added now cannot be added after
    further additions, so the result is edge-maximal.
    """
    recorder = attach(graph, recorder, tol)
    for a, b in combinations(range(graph.n), 2):
        current = recorder.graph
        if current.has_edge(a, b):
            continue
        if is_cactus(current.with_edge(a, b)):
            recorder.add_edge(a, b)
    return recorder.graph


def shrink_cycle_once(
    graph: Graph, recorder: Optional[TraceRecorder] = None, tol: Optional[float] = None
) -> Optional[Graph]:
    """
    Shortens the first cycle of length >= 4 by one vertex.

    Takes the least edge (a, b) of that cycle, orients it to (u, v) with
    x_u >= x_v and switches v's other cycle neighbour y over to u. The cycle
    loses v, which stays attached through the edge uv.

    Returns:
        The rewritten graph, or None when every cycle is a triangle
    """
    _require_connected_cactus(graph, "shrink_cycle_once")
    long_cycles = [c for c in cycle_blocks(graph) if len(c) >= 4]
    if not long_cycles:
        return None
    walk = long_cycles[0]
    cycle_pairs = sorted(
        (min(a, b), max(a, b)) for a, b in zip(walk, walk[1:] + walk[:1])
    )
    recorder = attach(graph, recorder, tol)
    u, v = orient_by_perron(graph, *cycle_pairs[0], perron=recorder.perron)
    position = walk.index(v)
    around = (walk[position - 1], walk[(position + 1) % len(walk)])
    y = around[1] if around[0] == u else around[0]
    return recorder.switch(u, v, (y,))


def add_consecutive_bridge_edges(
    graph: Graph, recorder: Optional[TraceRecorder] = None, tol: Optional[float] = None
) -> Graph:
    """
    Closes consecutive bridges va, vb into triangles by adding ab.

    Repeats at the least vertex carrying two bridges, pairing its two least
    bridge neighbours, until no vertex carries two bridges.
    """
    _require_connected_cactus(graph, "add_consecutive_bridge_edges")
    _require_triangles(graph, "add_consecutive_bridge_edges")
    recorder = attach(graph, recorder, tol)
    while (found := _consecutive_bridges(recorder.graph)) is not None:
        a, _, b = found
        recorder.add_edge(a, b)
    return recorder.graph


def eliminate_triangle_bridge(
    graph: Graph, recorder: Optional[TraceRecorder] = None, tol: Optional[float] = None
) -> Optional[Graph]:
    """
    Turns the least bridge with both endpoints of degree >= 2 into a pendant edge.

    Orients the bridge to (u, v) with x_u >= x_v and moves every other
    neighbour of v to u.

    Returns:
        The rewritten graph, or None when every bridge is already pendant
    """
    _require_connected_cactus(graph, "eliminate_triangle_bridge")
    _require_triangles(graph, "eliminate_triangle_bridge")
    if _consecutive_bridges(graph) is not None:
        raise TransformPreconditionError(
            "eliminate_triangle_bridge needs a graph without two consecutive bridges"
        )
    bridge = _internal_bridge(graph)
    if bridge is None:
        return None
    recorder = attach(graph, recorder, tol)
    u, v = orient_by_perron(graph, *bridge, perron=recorder.perron)
    return recorder.switch(u, v, private_neighbours(graph, u, v))


def consolidate_pendants(
    graph: Graph, recorder: Optional[TraceRecorder] = None, tol: Optional[float] = None
) -> Graph:
    """
    Pairs pendant edges into triangles until at most one pendant edge is left.

    Two leaves on a common support are joined by an edge. Otherwise the
    first two pendant edges have distinct supports; they are oriented by
    the supports' Perron entries and the leaf of the weaker support moves
    to the stronger one, after which the two leaves share a support.
    """
    _require_connected_cactus(graph, "consolidate_pendants")
    _require_triangles(graph, "consolidate_pendants")
    if _internal_bridge(graph) is not None:
        raise TransformPreconditionError("consolidate_pendants needs every bridge to be pendant")
    recorder = attach(graph, recorder, tol)
    while len(pendants := pendant_edges(recorder.graph)) >= 2:
        leaves = defaultdict(list)
        for support, leaf in pendants:
            leaves[support].append(leaf)
        shared = [s for s in sorted(leaves) if len(leaves[s]) >= 2]
        if shared:
            first, second = leaves[shared[0]][:2]
            recorder.add_edge(first, second)
            continue
        (x, leaf_x), (y, leaf_y) = pendants[0], pendants[1]
        u, v = orient_by_perron(recorder.graph, x, y, perron=recorder.perron)
        recorder.switch(u, v, (leaf_y if v == y else leaf_x,))
    return recorder.graph


def _normalize(recorder: TraceRecorder) -> None:
    saturate_cactus(recorder.graph, recorder)
    passes = 0
    while True:
        passes += 1
        before = len(recorder.steps)
        while shrink_cycle_once(recorder.graph, recorder) is not None:
            pass
        add_consecutive_bridge_edges(recorder.graph, recorder)
        while eliminate_triangle_bridge(recorder.graph, recorder) is not None:
            add_consecutive_bridge_edges(recorder.graph, recorder)
        consolidate_pendants(recorder.graph, recorder)
        if len(recorder.steps) == before:
            break
    logger.debug(f"Normalisation settled after {passes} passes")
    if not is_max_edge_cactus(recorder.graph):
        raise ClosureViolation("Normalisation fell short of the maximum edge count", recorder.graph)


def normalize_to_max_edge(graph: Graph, tol: Optional[float] = None) -> TransformTrace:
    """
    Rewrites a connected cactus into a max-edge cactus with rho never decreasing.

    Raises:
        TransformPreconditionError: input disconnected or not a cactus
        MonotonicityViolation: a recorded step moved rho the wrong way
    """
    _require_connected_cactus(graph, "normalize_to_max_edge")
    recorder = TraceRecorder(graph, tol)
    _normalize(recorder)
    trace = recorder.trace()
    logger.info(f"Normalised n={graph.n} m={graph.m} -> m={trace.final.m} in {len(trace)} steps")
    return trace


def _ascend(recorder: TraceRecorder) -> None:
    while (t := t_count(recorder.graph)) > 1:
        graph = recorder.graph
        pair = next(
            ((a, b) for a, b in graph.edges if graph.degree(a) >= 3 and graph.degree(b) >= 3),
            None,
        )
        if pair is None:
            raise ClosureViolation(f"No adjacent high-degree pair with t={t}", graph)
        u, v = orient_by_perron(graph, *pair, perron=recorder.perron)
        result = recorder.merge(u, v)
        if t_count(result) != t - 1 or not is_max_edge_cactus(result):
            raise ClosureViolation(f"Merge of ({u},{v}) did not reduce t from {t} by one", result)


def cactus_ascent(graph: Graph, tol: Optional[float] = None) -> TransformTrace:
    """
    Merges adjacent vertices of degree >= 3 until at most one remains.

    Above order 4 a max-edge cactus may still carry one C_4 block (even n
    only); it is first shrunk to a triangle by a single switch. The merges
    then number t - 1, counted on the all-triangle graph, and the result is
    H_n. C_4 itself has t = 0 and is returned unchanged.

    Raises:
        TransformPreconditionError: input is not a max-edge cactus of order >= 3
    """
    if graph.n < 3 or not is_max_edge_cactus(graph):
        raise TransformPreconditionError(
            "cactus_ascent needs a connected cactus of order >= 3 with the maximum edge count"
        )
    recorder = TraceRecorder(graph, tol)
    if graph.n > 4:
        while shrink_cycle_once(recorder.graph, recorder) is not None:
            pass
    _ascend(recorder)
    trace = recorder.trace()
    merges = sum(1 for step in trace.steps if step.kind == StepKind.MERGE)
    logger.info(f"Cactus ascent n={graph.n}: {merges} merges in {len(trace)} steps")
    return trace


def _connect(recorder: TraceRecorder) -> None:
    minima = [part[0] for part in components(recorder.graph)]
    for a, b in zip(minima, minima[1:]):
        recorder.add_edge(a, b)


def maximize_cactus(
    graph: Graph, tol: Optional[float] = None, connect_components: bool = False
) -> TransformTrace:
    """
    Full ascent from a cactus to the rho-maximal cactus of its order.

    Normalises to a max-edge cactus, then merges down to t <= 1. The trace
    is empty exactly when the input is already extremal.

    Args:
        graph: Input cactus
        tol: Eigensolver tolerance (settings default when None)
        connect_components: Join components by bridges between consecutive
            component minima first, instead of rejecting disconnected input

    Raises:
        TransformPreconditionError: input not a cactus, or disconnected while
            connect_components is False
    """
    if not is_cactus(graph):
        raise TransformPreconditionError("maximize_cactus needs a cactus")
    if graph.n < 1:
        raise TransformPreconditionError("maximize_cactus needs at least one vertex")
    if not is_connected(graph) and not connect_components:
        raise TransformPreconditionError(
            "maximize_cactus needs a connected cactus (pass connect_components=True to join parts)"
        )
    recorder = TraceRecorder(graph, tol)
    _connect(recorder)
    _normalize(recorder)
    if graph.n >= 3:
        _ascend(recorder)
    trace = recorder.trace()
    rho = recorder.perron.rho
    logger.info(f"Maximised cactus n={graph.n}: {len(trace)} steps, rho -> {rho:.10f}")
    return trace
