"""Isomorph-free enumeration, cycle oracle and extremal verification."""
from .models import (
    EXTREMAL_CLASSES,
    ClassReport,
    GraphClass,
    SuiteSummary,
    TheoremViolation,
    UnsupportedClassError,
)
from .cycles import all_cycles, iter_cycles
from .generator import enumerate_class
from .verifier import (
    class_report,
    expected_extremal,
    verify_extremal,
    verify_odd_cycle_implies_cactus,
)
from .sampling import (
    random_cactus,
    random_connected_graph,
    random_max_edge_cactus,
    random_valid_switch,
    verify_merge_reduces_t,
    verify_switch_soundness,
)
from .report import reports_to_json, write_csv

__all__ = [
    "EXTREMAL_CLASSES",
    "ClassReport",
    "GraphClass",
    "SuiteSummary",
    "TheoremViolation",
    "UnsupportedClassError",
    "all_cycles",
    "iter_cycles",
    "enumerate_class",
    "class_report",
    "expected_extremal",
    "verify_extremal",
    "verify_odd_cycle_implies_cactus",
    "random_cactus",
    "random_connected_graph",
    "random_max_edge_cactus",
    "random_valid_switch",
    "verify_merge_reduces_t",
    "verify_switch_soundness",
    "reports_to_json",
    "write_csv",
]
