"""
Characteristic-polynomial oracle for the spectral radius

Independent of the power iteration: the characteristic polynomial is computed
exactly in integers (Faddeev-LeVerrier) and its largest root is bracketed by
bisection. Adjacency matrices are symmetric, so the polynomial is real-rooted
and so is each of its derivatives; the largest root of p then lies at or
above the largest root of p', where p is non-positive, and p is increasing
from there on. That gives a valid bracket by recursion on the degree.
"""
from typing import List, Sequence

import numpy as np

from ..graph.models import Graph


def characteristic_polynomial(graph: Graph) -> List[int]:
    """Coefficients of det(xI - A), highest degree first (leading 1)."""
    n = graph.n
    # object dtype keeps Python ints, so the traces stay exact at any order
    a = graph.adjacency_matrix().astype(np.int64).astype(object)
    identity = np.identity(n, dtype=np.int64).astype(object)

    coefficients = [1]
    m = np.zeros((n, n), dtype=np.int64).astype(object)  # M_0 = 0
    c = 1
    for k in range(1, n + 1):
        m = a @ m + c * identity  # M_k = A M_{k-1} + c_{n-k+1} I
        c = -int(np.trace(a @ m)) // k
        coefficients.append(c)
    return coefficients


def evaluate(coefficients: Sequence[float], x: float) -> float:
    """Horner evaluation, coefficients highest degree first."""
    value = 0.0
    for c in coefficients:
        value = value * x + c
    return value


def derivative(coefficients: Sequence[float]) -> List[float]:
    degree = len(coefficients) - 1
    return [c * (degree - i) for i, c in enumerate(coefficients[:-1])]


def largest_root(coefficients: Sequence[float], upper: float, iterations: int = 200) -> float:
    """Largest real root of a real-rooted polynomial with positive leading coefficient.

    upper must exceed every root.
    """
    degree = len(coefficients) - 1
    if degree < 1:
        raise ValueError("Constant polynomial has no roots")
    if degree == 1:
        return -coefficients[1] / coefficients[0]

    lower = largest_root(derivative(coefficients), upper, iterations)
    if evaluate(coefficients, lower) >= 0.0:
        return lower  # repeated root shared with the derivative
    lo, hi = lower, upper
    for _ in range(iterations):
        mid = (lo + hi) / 2.0
        if mid in (lo, hi):
            break
        if evaluate(coefficients, mid) > 0.0:
            hi = mid
        else:
            lo = mid
    return (lo + hi) / 2.0


def oracle_spectral_radius(graph: Graph) -> float:
    """rho(G) as the largest root of the characteristic polynomial."""
    if graph.m == 0:
        return 0.0
    coefficients = characteristic_polynomial(graph)
    return largest_root([float(c) for c in coefficients], float(graph.max_degree) + 1.0)
