"""Step-by-step trace recording with a rho check on every rewrite."""
import logging
from typing import Iterable, List, Optional

from ..graph.models import Graph
from ..graph.structure import is_connected
from ..spectral.models import Ordering, PerronResult
from ..spectral.solver import compare_results, spectral_radius
from .models import (
    MonotonicityViolation,
    StepKind,
    TransformPreconditionError,
    TransformStep,
    TransformTrace,
)
from .switch import merge_high_degree, sigma_switch

logger = logging.getLogger(__name__)


class TraceRecorder:
    """
    Applies rewrites to a current graph and records them as a TransformTrace.

    The Perron vector is recomputed from scratch after every rewrite. Each
    step is checked with the residual-guarded comparison before it is
    accepted: SWITCH and MERGE must come out GREATER, ADD_EDGE must be
    GREATER when the result is connected (never LESS otherwise) and
    DELETE_EDGE must be LESS when the source is connected.
    """

    def __init__(self, graph: Graph, tol: Optional[float] = None):
        self.initial = graph
        self.graph = graph
        self.tol = tol
        self._steps: List[TransformStep] = []
        self._perron: Optional[PerronResult] = None

    @property
    def perron(self) -> PerronResult:
        """Perron result of the current graph"""
        if self._perron is None:
            self._perron = spectral_radius(self.graph, self.tol)
        return self._perron

    @property
    def steps(self) -> List[TransformStep]:
        return list(self._steps)

    def switch(self, u: int, v: int, moved: Iterable[int]) -> Graph:
        self._require_connected(StepKind.SWITCH)
        moved = tuple(sorted(set(moved)))
        result = sigma_switch(self.graph, u, v, moved)
        return self._accept(StepKind.SWITCH, u, v, moved, result, expected=Ordering.GREATER)

    def merge(self, u: int, v: int) -> Graph:
        self._require_connected(StepKind.MERGE)
        before = self.graph
        result = merge_high_degree(before, u, v)
        moved = tuple(sorted(before.adjacency[v] - result.adjacency[v]))
        return self._accept(StepKind.MERGE, u, v, moved, result, expected=Ordering.GREATER)

    def add_edge(self, u: int, v: int) -> Graph:
        result = self.graph.with_edge(u, v)
        strict = is_connected(result)
        return self._accept(
            StepKind.ADD_EDGE, min(u, v), max(u, v), (), result,
            expected=Ordering.GREATER if strict else None,
            forbidden=Ordering.LESS,
        )

    def delete_edge(self, u: int, v: int) -> Graph:
        result = self.graph.without_edge(u, v)
        strict = is_connected(self.graph)
        return self._accept(
            StepKind.DELETE_EDGE, min(u, v), max(u, v), (), result,
            expected=Ordering.LESS if strict else None,
            forbidden=Ordering.GREATER,
        )

    def _require_connected(self, kind: StepKind) -> None:
        if not is_connected(self.graph):
            raise TransformPreconditionError(
                f"{kind.value} only promises a rho increase on a connected graph"
            )

    def _accept(
        self,
        kind: StepKind,
        u: int,
        v: int,
        moved: tuple,
        result: Graph,
        expected: Optional[Ordering],
        forbidden: Optional[Ordering] = None,
    ) -> Graph:
        before = self.perron
        after = spectral_radius(result, self.tol)
        step = TransformStep(kind, u, v, moved, before.rho, after.rho)
        ordering = compare_results(after, before, self.tol)
        if expected is not None and ordering != expected:
            logger.error(f"{kind.value} ({u},{v}) gave {ordering.value}, expected {expected.value}")
            raise MonotonicityViolation(
                step, self.graph, result, f"{kind.value} step compared {ordering.value}"
            )
        if forbidden is not None and ordering == forbidden:
            logger.error(f"{kind.value} ({u},{v}) gave {ordering.value}")
            raise MonotonicityViolation(
                step, self.graph, result, f"{kind.value} step compared {ordering.value}"
            )
        logger.debug(
            f"{kind.value} u={u} v={v} moved={list(moved)} rho {before.rho:.12f}->{after.rho:.12f}"
        )
        self._steps.append(step)
        self.graph = result
        self._perron = after
        return result

    def trace(self) -> TransformTrace:
        return TransformTrace(self.initial, tuple(self._steps), self.graph)


def attach(
    graph: Graph, recorder: Optional[TraceRecorder], tol: Optional[float] = None
) -> TraceRecorder:
    """Returns recorder positioned at graph, creating one if needed."""
    if recorder is None:
        return TraceRecorder(graph, tol)
    if recorder.graph != graph:
        raise ValueError("Recorder is positioned at a different graph")
    return recorder
