"""Switch ascent over unicyclic graphs towards K_{1,n-1}^+."""
import logging
from typing import Optional, Tuple

from ..graph.models import Graph
from ..graph.predicates import is_unicyclic
from .models import ClosureViolation, TransformPreconditionError, TransformTrace
from .recorder import TraceRecorder
from .switch import orient_by_perron, private_neighbours

logger = logging.getLogger(__name__)


def find_switchable_pair(graph: Graph) -> Optional[Tuple[int, int]]:
    """
    First edge (a, b), in lexicographic order, where both endpoints have a
    private neighbour: N(a) \\ (N(b) | {b}) and N(b) \\ (N(a) | {a}) nonempty.

    Returns None exactly when the graph is K_{1,n-1}^+ (C_3 included).

    Raises:
        TransformPreconditionError: graph is not unicyclic
    """
    if not is_unicyclic(graph):
        raise TransformPreconditionError("find_switchable_pair needs a unicyclic graph")
    for a, b in graph.edges:
        if private_neighbours(graph, b, a) and private_neighbours(graph, a, b):
            return (a, b)
    return None


def unicyclic_ascent(graph: Graph, tol: Optional[float] = None) -> TransformTrace:
    """
    Switches a unicyclic graph up to K_{1,n-1}^+.

    Each round orients the switchable pair so that x_u >= x_v and moves all
    of v's private neighbours to u. Every iterate stays unicyclic and rho
    strictly increases, so no graph repeats and the loop terminates.

    Raises:
        TransformPreconditionError: input is not unicyclic
        ClosureViolation: an iterate is not unicyclic
        MonotonicityViolation: a switch failed to raise rho
    """
    if not is_unicyclic(graph):
        raise TransformPreconditionError("unicyclic_ascent needs a unicyclic graph")
    recorder = TraceRecorder(graph, tol)
    while True:
        pair = find_switchable_pair(recorder.graph)
        if pair is None:
            break
        u, v = orient_by_perron(recorder.graph, *pair, perron=recorder.perron)
        result = recorder.switch(u, v, private_neighbours(recorder.graph, u, v))
        if not is_unicyclic(result):
            raise ClosureViolation("Switch left the unicyclic class", result)

    trace = recorder.trace()
    logger.info(
        f"Unicyclic ascent n={graph.n}: {len(trace)} switches, rho -> {recorder.perron.rho:.10f}"
    )
    return trace
