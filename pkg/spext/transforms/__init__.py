"""Rho-increasing rewrites and the ascent pipelines built from them."""
from .models import (
    ClosureViolation,
    MonotonicityViolation,
    StepKind,
    TransformPreconditionError,
    TransformStep,
    TransformTrace,
)
from .switch import merge_high_degree, orient_by_perron, private_neighbours, sigma_switch
from .recorder import TraceRecorder
from .unicyclic import find_switchable_pair, unicyclic_ascent
from .cactus import (
    add_consecutive_bridge_edges,
    cactus_ascent,
    consolidate_pendants,
    eliminate_triangle_bridge,
    maximize_cactus,
    normalize_to_max_edge,
    saturate_cactus,
    shrink_cycle_once,
)

__all__ = [
    "ClosureViolation",
    "MonotonicityViolation",
    "StepKind",
    "TransformPreconditionError",
    "TransformStep",
    "TransformTrace",
    "merge_high_degree",
    "orient_by_perron",
    "private_neighbours",
    "sigma_switch",
    "TraceRecorder",
    "find_switchable_pair",
    "unicyclic_ascent",
    "add_consecutive_bridge_edges",
    "cactus_ascent",
    "consolidate_pendants",
    "eliminate_triangle_bridge",
    "maximize_cactus",
    "normalize_to_max_edge",
    "saturate_cactus",
    "shrink_cycle_once",
]
