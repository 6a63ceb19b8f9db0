"""Enumeration classes, class reports and verification failures."""
import json
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from ..graph.models import Graph


class GraphClass(str, Enum):
    """Graph classes the enumerator can generate"""
    CACTUS = "cactus"
    MAX_EDGE_CACTUS = "max-edge-cactus"
    UNICYCLIC = "unicyclic"
    ODD_CYCLE = "odd-cycle"
    CONNECTED = "connected"
    TREE = "tree"

    @classmethod
    def parse(cls, name: str) -> "GraphClass":
        """Accepts the value ("max-edge-cactus") or the member name ("MAX_EDGE_CACTUS")"""
        key = name.strip()
        for member in cls:
            if key in (member.value, member.name) or key.upper().replace("-", "_") == member.name:
                return member
        raise UnsupportedClassError(f"Unknown graph class {name!r}")


EXTREMAL_CLASSES = (
    GraphClass.CACTUS,
    GraphClass.MAX_EDGE_CACTUS,
    GraphClass.UNICYCLIC,
    GraphClass.ODD_CYCLE,
)


class UnsupportedClassError(ValueError):
    """Raised when an operation does not support the requested graph class"""
    pass


class TheoremViolation(RuntimeError):
    """Raised when exhaustive or sampled verification finds a counterexample"""

    def __init__(
        self,
        message: str,
        graph: Optional[Graph] = None,
        report: Optional["ClassReport"] = None,
    ):
        self.graph = graph
        self.report = report
        detail = message
        if graph is not None:
            detail += f": {json.dumps({'n': graph.n, 'edges': graph.edge_list()})}"
        super().__init__(detail)


@dataclass(frozen=True)
class ClassReport:
    """
    Result of sweeping one graph class at one order

    unique_argmax is True when exactly one isomorphism class attains max_rho
    beyond the comparison guard; argmax_canonical is None for an empty class.
    """
    class_name: GraphClass
    n: int
    iso_class_count: int
    max_rho: float
    argmax_canonical: Optional[Graph]
    unique_argmax: bool
    runtime_ms: float

    CSV_HEADER = ("n", "class", "iso_classes", "max_rho", "argmax", "unique", "runtime_ms")

    def argmax_edges(self) -> str:
        """Canonical argmax edge list rendered as compact JSON"""
        if self.argmax_canonical is None:
            return "[]"
        return json.dumps(self.argmax_canonical.edge_list(), separators=(",", ":"))

    def to_csv_row(self) -> list:
        return [
            self.n,
            self.class_name.value,
            self.iso_class_count,
            f"{self.max_rho:.12f}",
            self.argmax_edges(),
            str(self.unique_argmax).lower(),
            f"{self.runtime_ms:.1f}",
        ]

    def to_dict(self) -> dict:
        argmax = None
        if self.argmax_canonical is not None:
            argmax = {"n": self.argmax_canonical.n, "edges": self.argmax_canonical.edge_list()}
        return {
            "class_name": self.class_name.value,
            "n": self.n,
            "iso_class_count": self.iso_class_count,
            "max_rho": self.max_rho,
            "argmax_canonical": argmax,
            "unique_argmax": self.unique_argmax,
            "runtime_ms": self.runtime_ms,
        }


@dataclass(frozen=True)
class SuiteSummary:
    """Outcome of a seeded property suite"""
    name: str
    seed: int
    cases: int
    passed: int
    steps: int = 0

    @property
    def ok(self) -> bool:
        return self.passed == self.cases

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "seed": self.seed,
            "cases": self.cases,
            "passed": self.passed,
            "steps": self.steps,
        }
