"""JSON wire schemas for graphs, Perron results, traces and class reports."""
from typing import List, Optional, Tuple

from pydantic import BaseModel, Field


class GraphSchema(BaseModel):
    """Graph in canonical form."""

    n: int = Field(ge=0, description="Vertex count; vertices are 0..n-1")
    edges: List[Tuple[int, int]] = Field(
        default_factory=list, description="Edges sorted lexicographically, each pair sorted"
    )


class PerronSchema(BaseModel):
    """Spectral radius with its Perron vector."""

    rho: float
    residual: float = Field(description="||A x - rho x||, an error bound on rho")
    iterations: int
    vector: List[float] = Field(default_factory=list)


class StepSchema(BaseModel):
    """One rewrite step."""

    kind: str = Field(description="SWITCH, ADD_EDGE, DELETE_EDGE or MERGE")
    u: int
    v: int
    moved: List[int] = Field(default_factory=list)
    rho_before: float
    rho_after: float


class TraceSchema(BaseModel):
    """A rho-monotone sequence of rewrites."""

    initial: GraphSchema
    steps: List[StepSchema] = Field(default_factory=list)
    final: GraphSchema


class ClassificationSchema(BaseModel):
    """Class membership flags for one graph."""

    n: int
    m: int
    connected: bool
    cactus: bool
    unicyclic: bool
    odd_cycle: bool
    max_edge_cactus: bool
    edge_maximal_cactus: bool
    t: int
    max_degree: int


class ClassReportSchema(BaseModel):
    """Enumeration result for one class at one order."""

    class_name: str
    n: int
    iso_class_count: int
    max_rho: float
    argmax_canonical: Optional[GraphSchema] = None
    unique_argmax: bool
    runtime_ms: float
