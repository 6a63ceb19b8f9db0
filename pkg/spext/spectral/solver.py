"""Power iteration for the spectral radius and Perron vector."""
import logging
from typing import Optional

import numpy as np

from ..config import get_settings
from ..graph.models import Graph
from .models import ConvergenceError, Ordering, PerronResult

logger = logging.getLogger(__name__)


def _iteration_cap(n: int) -> int:
    settings = get_settings()
    return max(settings.iteration_factor * n * n, settings.min_iterations_cap)


def spectral_radius(
    graph: Graph,
    tol: Optional[float] = None,
    max_iterations: Optional[int] = None,
) -> PerronResult:
    """Compute rho(G) and its Perron vector.

    Iterates on A + I from the uniform positive vector. The shift keeps the
    dominant eigenvalue strictly dominant in modulus even for bipartite
    graphs, whose spectrum is symmetric and stalls plain power iteration; rho
    is read off as the Rayleigh quotient of A itself.

    Raises:
        ConvergenceError: residual still above tol after the iteration cap
    """
    tol = tol if tol is not None else get_settings().tol
    if tol <= 0:
        raise ValueError(f"tol must be positive, got {tol}")
    n = graph.n
    if n < 1:
        raise ValueError("spectral_radius needs at least one vertex")

    x = np.full(n, 1.0 / np.sqrt(n))
    if graph.m == 0:
        return PerronResult(rho=0.0, vector=x, residual=0.0, iterations=0)

    a = graph.adjacency_matrix()
    cap = max_iterations if max_iterations is not None else _iteration_cap(n)

    best_rho, best_residual = 0.0, float("inf")
    for iteration in range(1, cap + 1):
        ax = a @ x
        rho = float(x @ ax)
        residual = float(np.linalg.norm(ax - rho * x))
        if residual < best_residual:
            best_rho, best_residual = rho, residual
        if residual <= tol:
            logger.debug(f"Converged n={n} m={graph.m} rho={rho:.12f} after {iteration} iterations")
            return PerronResult(rho=rho, vector=x, residual=residual, iterations=iteration)
        y = ax + x
        x = y / np.linalg.norm(y)

    raise ConvergenceError(best_rho, best_residual, cap, tol)


def compare_results(
    first: PerronResult,
    second: PerronResult,
    tol: Optional[float] = None,
) -> Ordering:
    """Order two computed spectral radii, never claiming more than the residuals support."""
    tol = tol if tol is not None else get_settings().tol
    margin = first.residual + second.residual + tol
    difference = first.rho - second.rho
    if difference > margin:
        return Ordering.GREATER
    if -difference > margin:
        return Ordering.LESS
    return Ordering.INDISTINGUISHABLE


def compare_rho(first: Graph, second: Graph, tol: Optional[float] = None) -> Ordering:
    """GREATER iff rho(first) - rho(second) exceeds both residuals plus tol."""
    return compare_results(spectral_radius(first, tol), spectral_radius(second, tol), tol)
