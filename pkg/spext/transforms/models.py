"""
Rewrite steps and traces

A TransformTrace is a replayable record: applying its steps in order to the
initial graph reproduces the final graph exactly, and every step carries the
spectral radius before and after it.
"""

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Tuple

from ..graph.models import Graph, InvalidGraphError, make_graph
from ..graph.structure import is_connected
from ..schemas import GraphSchema, StepSchema, TraceSchema


class StepKind(str, Enum):
    """Rewrite operation types"""
    SWITCH = "SWITCH"
    ADD_EDGE = "ADD_EDGE"
    DELETE_EDGE = "DELETE_EDGE"
    MERGE = "MERGE"


class TransformPreconditionError(ValueError):
    """Raised when a rewrite is requested outside its preconditions"""
    pass


class MonotonicityViolation(RuntimeError):
    """Raised when a recorded step moves rho against the direction its kind promises"""

    def __init__(self, step: "TransformStep", before: Graph, after: Graph, detail: str):
        self.step = step
        self.before = before
        self.after = after
        payload = {
            "step": step.to_dict(),
            "before": _graph_dict(before),
            "after": _graph_dict(after),
        }
        super().__init__(f"{detail}: {json.dumps(payload)}")


class ClosureViolation(RuntimeError):
    """Raised when an ascent iterate leaves the graph class it must stay in"""

    def __init__(self, message: str, graph: Graph):
        self.graph = graph
        super().__init__(f"{message}: {json.dumps(_graph_dict(graph))}")


def _graph_dict(graph: Graph) -> dict:
    return {"n": graph.n, "edges": graph.edge_list()}


def _graph_from_schema(schema: GraphSchema) -> Graph:
    return make_graph(schema.n, schema.edges)


@dataclass(frozen=True)
class TransformStep:
    """
    One rewrite

    For SWITCH and MERGE the edges v-s (s in moved) were replaced by u-s. For
    ADD_EDGE and DELETE_EDGE the edge uv was added or removed and moved is
    empty.
    """
    kind: StepKind
    u: int
    v: int
    moved: Tuple[int, ...]
    rho_before: float
    rho_after: float

    @property
    def is_strict(self) -> bool:
        return self.kind in (StepKind.SWITCH, StepKind.MERGE)

    def apply(self, graph: Graph) -> Graph:
        """Re-executes this step on graph"""
        if self.kind in (StepKind.SWITCH, StepKind.MERGE):
            removed = {(min(self.v, s), max(self.v, s)) for s in self.moved}
            edges = [e for e in graph.edges if e not in removed]
            edges.extend((self.u, s) for s in self.moved)
            return make_graph(graph.n, edges)
        if self.kind == StepKind.ADD_EDGE:
            return graph.with_edge(self.u, self.v)
        return graph.without_edge(self.u, self.v)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "u": self.u,
            "v": self.v,
            "moved": list(self.moved),
            "rho_before": self.rho_before,
            "rho_after": self.rho_after,
        }

    @classmethod
    def from_schema(cls, schema: StepSchema) -> "TransformStep":
        return cls(
            kind=StepKind(schema.kind),
            u=schema.u,
            v=schema.v,
            moved=tuple(schema.moved),
            rho_before=schema.rho_before,
            rho_after=schema.rho_after,
        )


@dataclass(frozen=True)
class TransformTrace:
    initial: Graph
    steps: Tuple[TransformStep, ...] = field(default=())
    final: Optional[Graph] = None

    def __post_init__(self):
        if self.final is None:
            object.__setattr__(self, "final", self.initial)
        object.__setattr__(self, "steps", tuple(self.steps))

    def __len__(self) -> int:
        return len(self.steps)

    def replay(self) -> Graph:
        """Applies the steps to initial; equals final for a well-formed trace"""
        graph = self.initial
        for step in self.steps:
            graph = step.apply(graph)
        return graph

    def is_monotone(self, margin: float = 0.0) -> bool:
        """
        Replays the steps and checks the recorded rho values

        Each SWITCH and MERGE step must raise rho by more than margin. An
        ADD_EDGE step must raise it by more than margin when its result is
        connected and never lower it otherwise; a DELETE_EDGE step must lower
        it by more than margin when its source is connected and never raise it
        otherwise. Consecutive steps must chain: a step starts at the rho its
        predecessor ended at. A step that does not apply makes the trace fail.
        """
        graph = self.initial
        previous = None
        for step in self.steps:
            if previous is not None and abs(step.rho_before - previous) > margin:
                return False
            try:
                result = step.apply(graph)
            except InvalidGraphError:
                return False
            delta = step.rho_after - step.rho_before
            if step.is_strict and delta <= margin:
                return False
            if step.kind == StepKind.ADD_EDGE:
                if delta < -margin or (is_connected(result) and delta <= margin):
                    return False
            if step.kind == StepKind.DELETE_EDGE:
                if delta > margin or (is_connected(graph) and delta >= -margin):
                    return False
            graph = result
            previous = step.rho_after
        return True

    def concat(self, other: "TransformTrace") -> "TransformTrace":
        """Trace of self followed by other; other must start where self ends"""
        if other.initial != self.final:
            raise ValueError("Traces do not chain: second trace starts elsewhere")
        return TransformTrace(self.initial, self.steps + other.steps, other.final)

    def to_dict(self) -> dict:
        return {
            "initial": _graph_dict(self.initial),
            "steps": [step.to_dict() for step in self.steps],
            "final": _graph_dict(self.final),
        }

    def to_json(self, indent: Optional[int] = None) -> str:
        return TraceSchema.model_validate(self.to_dict()).model_dump_json(indent=indent)

    @classmethod
    def from_dict(cls, data: dict) -> "TransformTrace":
        schema = TraceSchema.model_validate(data)
        return cls(
            initial=_graph_from_schema(schema.initial),
            steps=tuple(TransformStep.from_schema(s) for s in schema.steps),
            final=_graph_from_schema(schema.final),
        )
