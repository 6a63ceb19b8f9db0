"""
Seeded random graphs and the sampled property suites

All randomness flows through a numpy Generator, so a seed fixes every graph,
switch and verdict of a suite.
"""

import logging
from typing import Optional, Tuple

import numpy as np

from ..config import get_settings
from ..graph.models import Graph, make_graph
from ..graph.predicates import t_count
from ..spectral.models import Ordering, PerronResult
from ..spectral.solver import compare_results, spectral_radius
from ..transforms.models import ClosureViolation, MonotonicityViolation
from ..transforms.cactus import cactus_ascent
from ..transforms.switch import private_neighbours, sigma_switch
from .models import SuiteSummary, TheoremViolation

logger = logging.getLogger(__name__)


def _relabel(n: int, pairs, rng: np.random.Generator) -> Graph:
    permutation = rng.permutation(n)
    return make_graph(n, [(int(permutation[a]), int(permutation[b])) for a, b in pairs])


def random_connected_graph(
    n: int, rng: np.random.Generator, density: Optional[float] = None
) -> Graph:
    """Random spanning tree plus each remaining pair with probability density."""
    if n < 1:
        raise ValueError(f"Order must be positive, got {n}")
    density = density if density is not None else float(rng.uniform(0.1, 0.6))
    pairs = {(int(rng.integers(0, v)), v) for v in range(1, n)}
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in pairs and rng.random() < density:
                pairs.add((u, v))
    return _relabel(n, sorted(pairs), rng)


def random_cactus(n: int, rng: np.random.Generator, max_block: int = 6) -> Graph:
    """Connected cactus grown by gluing edges and cycles at random vertices."""
    if n < 1:
        raise ValueError(f"Order must be positive, got {n}")
    pairs = []
    size = 1
    while size < n:
        anchor = int(rng.integers(0, size))
        block = int(rng.integers(2, min(max_block, n - size + 1) + 1))
        fresh = list(range(size, size + block - 1))
        ring = [anchor] + fresh
        if block == 2:
            pairs.append((anchor, fresh[0]))
        else:
            pairs.extend(zip(ring, ring[1:] + ring[:1]))
        size += block - 1
    return _relabel(n, pairs, rng)


def random_max_edge_cactus(n: int, rng: np.random.Generator) -> Graph:
    """Triangles glued at random vertices, plus one pendant edge when n is even."""
    if n < 3:
        raise ValueError(f"Order must be at least 3, got {n}")
    pairs = []
    size = 1
    for _ in range((n - 1) // 2):
        anchor = int(rng.integers(0, size))
        a, b = size, size + 1
        pairs.extend([(anchor, a), (anchor, b), (a, b)])
        size += 2
    if size < n:
        pairs.append((int(rng.integers(0, size)), size))
    return _relabel(n, pairs, rng)


def random_valid_switch(
    graph: Graph,
    rng: np.random.Generator,
    perron: Optional[PerronResult] = None,
    tie_guard: Optional[float] = None,
) -> Optional[Tuple[int, int, Tuple[int, ...]]]:
    """
    Random (u, v, S) with x_u >= x_v and S a nonempty subset of v's private neighbours.

    Returns None when no ordered pair has a private neighbour (complete graphs).
    """
    perron = perron if perron is not None else spectral_radius(graph)
    tie_guard = tie_guard if tie_guard is not None else get_settings().tie_guard
    candidates = [
        (u, v)
        for u in range(graph.n)
        for v in range(graph.n)
        if u != v
        and perron.entry(u) >= perron.entry(v) - tie_guard
        and private_neighbours(graph, u, v)
    ]
    if not candidates:
        return None
    u, v = candidates[int(rng.integers(0, len(candidates)))]
    pool = private_neighbours(graph, u, v)
    size = int(rng.integers(1, len(pool) + 1))
    moved = tuple(sorted(int(s) for s in rng.choice(pool, size=size, replace=False)))
    return u, v, moved


def verify_switch_soundness(
    cases: int = 500,
    seed: int = 0,
    min_order: int = 4,
    max_order: int = 9,
    tol: Optional[float] = None,
) -> SuiteSummary:
    """
    Checks that a switch towards the larger Perron entry always raises rho.

    Raises:
        TheoremViolation: first sampled switch whose result does not compare GREATER
    """
    rng = np.random.default_rng(seed)
    passed = 0
    while passed < cases:
        n = int(rng.integers(min_order, max_order + 1))
        graph = random_connected_graph(n, rng)
        before = spectral_radius(graph, tol)
        switch = random_valid_switch(graph, rng, before)
        if switch is None:
            continue
        u, v, moved = switch
        after = spectral_radius(sigma_switch(graph, u, v, moved), tol)
        ordering = compare_results(after, before, tol)
        if ordering != Ordering.GREATER:
            raise TheoremViolation(
                f"Switch u={u} v={v} S={list(moved)} compared {ordering.value} "
                f"(rho {before.rho:.12f} -> {after.rho:.12f})",
                graph=graph,
            )
        passed += 1
    logger.info(f"Switch soundness: {passed}/{cases} cases GREATER (seed={seed})")
    return SuiteSummary("switch", seed, cases, passed, steps=passed)


def verify_merge_reduces_t(
    cases: int = 100,
    seed: int = 0,
    min_order: int = 6,
    max_order: int = 12,
    tol: Optional[float] = None,
) -> SuiteSummary:
    """
    Runs the high-degree merge ascent on random max-edge cacti with t > 1.

    Every merge must drop t by exactly one and strictly raise rho; the ascent
    therefore performs t - 1 merges.

    Raises:
        TheoremViolation: first cactus whose ascent breaks either property
    """
    rng = np.random.default_rng(seed)
    passed = 0
    merges = 0
    while passed < cases:
        n = int(rng.integers(min_order, max_order + 1))
        graph = random_max_edge_cactus(n, rng)
        t = t_count(graph)
        if t <= 1:
            continue
        try:
            trace = cactus_ascent(graph, tol)
        except (ClosureViolation, MonotonicityViolation) as e:
            raise TheoremViolation(f"Merge ascent failed: {e}", graph=graph) from e
        if len(trace) != t - 1:
            raise TheoremViolation(
                f"Merge ascent took {len(trace)} merges for t={t}", graph=graph
            )
        passed += 1
        merges += len(trace)
    logger.info(f"Merge suite: {passed}/{cases} cacti, {merges} merges (seed={seed})")
    return SuiteSummary("merge", seed, cases, passed, steps=merges)
