"""Exhaustive verification of the extremal results at small orders."""
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from typing import List, Optional, Union

from ..config import get_settings
from ..families.constructions import h_n, k1n_plus
from ..graph.canonical import canonical_label
from ..graph.models import Graph
from ..graph.predicates import is_cactus, is_odd_cycle_graph
from ..spectral.models import PerronResult
from ..spectral.solver import spectral_radius
from .cycles import iter_cycles
from .generator import enumerate_class
from .models import (
    EXTREMAL_CLASSES,
    ClassReport,
    GraphClass,
    TheoremViolation,
    UnsupportedClassError,
)

logger = logging.getLogger(__name__)


def _radii(graphs: List[Graph], jobs: int, tol: Optional[float]) -> List[PerronResult]:
    solve = partial(spectral_radius, tol=tol)
    if jobs <= 1 or len(graphs) < 2:
        return [solve(g) for g in graphs]
    with ProcessPoolExecutor(max_workers=jobs) as executor:
        return list(executor.map(solve, graphs, chunksize=max(1, len(graphs) // (jobs * 4))))


def class_report(
    n: int,
    graph_class: Union[GraphClass, str],
    jobs: Optional[int] = None,
    tol: Optional[float] = None,
    guard: Optional[float] = None,
) -> ClassReport:
    """
    Enumerates a class and locates its rho-maximal members.

    A member counts as a co-maximum when its rho is within guard plus both
    residuals of the largest; unique_argmax holds when there is exactly one.
    The argmax is the first maximum in enumeration order.
    """
    if not isinstance(graph_class, GraphClass):
        graph_class = GraphClass.parse(graph_class)
    settings = get_settings()
    jobs = jobs if jobs is not None else settings.jobs
    guard = guard if guard is not None else settings.compare_guard

    started = time.perf_counter()
    graphs = list(enumerate_class(n, graph_class, jobs=jobs))
    results = _radii(graphs, jobs, tol)

    if not graphs:
        runtime_ms = (time.perf_counter() - started) * 1000.0
        return ClassReport(graph_class, n, 0, 0.0, None, False, runtime_ms)

    best_index = max(range(len(results)), key=lambda i: (results[i].rho, -i))
    best = results[best_index]
    contenders = [
        i for i, r in enumerate(results)
        if best.rho - r.rho <= guard + best.residual + r.residual
    ]
    runtime_ms = (time.perf_counter() - started) * 1000.0
    report = ClassReport(
        class_name=graph_class,
        n=n,
        iso_class_count=len(graphs),
        max_rho=best.rho,
        argmax_canonical=canonical_label(graphs[best_index]),
        unique_argmax=len(contenders) == 1,
        runtime_ms=runtime_ms,
    )
    logger.info(
        f"{graph_class.value} n={n}: {report.iso_class_count} classes, "
        f"max rho {report.max_rho:.10f}, unique={report.unique_argmax}"
    )
    return report


def expected_extremal(n: int, graph_class: GraphClass) -> Graph:
    """K_{1,n-1}^+ for unicyclic graphs, H_n for the cactus classes"""
    if graph_class == GraphClass.UNICYCLIC:
        return k1n_plus(n)
    return h_n(n)


def verify_extremal(
    n: int,
    graph_class: Union[GraphClass, str],
    jobs: Optional[int] = None,
    tol: Optional[float] = None,
    guard: Optional[float] = None,
) -> ClassReport:
    """
    Confirms the unique rho-maximal member of a class at order n.

    Raises:
        UnsupportedClassError: class has no extremal statement
        TheoremViolation: argmax is not the expected graph or not unique
    """
    if not isinstance(graph_class, GraphClass):
        graph_class = GraphClass.parse(graph_class)
    if graph_class not in EXTREMAL_CLASSES:
        raise UnsupportedClassError(
            f"verify_extremal supports {[c.value for c in EXTREMAL_CLASSES]}, "
            f"got {graph_class.value}"
        )
    report = class_report(n, graph_class, jobs=jobs, tol=tol, guard=guard)
    expected = canonical_label(expected_extremal(n, graph_class))
    if report.argmax_canonical != expected:
        logger.error(
            f"{graph_class.value} n={n}: argmax {report.argmax_canonical} is not {expected}"
        )
        raise TheoremViolation(
            f"{graph_class.value} n={n}: rho-maximal graph differs from the extremal construction",
            graph=report.argmax_canonical,
            report=report,
        )
    if not report.unique_argmax:
        logger.error(f"{graph_class.value} n={n}: maximum attained by several classes")
        raise TheoremViolation(
            f"{graph_class.value} n={n}: rho-maximum is not unique",
            graph=report.argmax_canonical,
            report=report,
        )
    return report


def verify_odd_cycle_implies_cactus(n: int, jobs: Optional[int] = None) -> bool:
    """
    Checks over all connected graphs of order n that odd-cycle graphs are cacti.

    The block-parity predicate is cross-checked against explicit cycle
    enumeration on every graph, stopping at the first even cycle.

    Raises:
        TheoremViolation: predicate disagreement or an odd-cycle non-cactus
    """
    if n < 3:
        return True
    checked = odd = 0
    for graph in enumerate_class(n, GraphClass.CONNECTED, jobs=jobs):
        by_blocks = is_odd_cycle_graph(graph)
        by_cycles = all(len(c) % 2 == 1 for c in iter_cycles(graph))
        if by_blocks != by_cycles:
            raise TheoremViolation(
                f"Block parity says odd-cycle={by_blocks}, cycle enumeration says {by_cycles}",
                graph=graph,
            )
        if by_blocks:
            odd += 1
            if not is_cactus(graph):
                raise TheoremViolation("Odd-cycle graph that is not a cactus", graph=graph)
        checked += 1
    logger.info(f"Odd-cycle implies cactus at n={n}: {checked} graphs, {odd} odd-cycle")
    return True
