"""Spectral result types."""
from dataclasses import dataclass
from enum import Enum

import numpy as np


class Ordering(str, Enum):
    """Guarded comparison outcome of two spectral radii."""
    LESS = "less"
    GREATER = "greater"
    INDISTINGUISHABLE = "indistinguishable"


class ConvergenceError(RuntimeError):
    """Raised when power iteration exhausts its cap before the residual meets tol"""

    def __init__(self, rho: float, residual: float, iterations: int, tol: float):
        self.rho = rho
        self.residual = residual
        self.iterations = iterations
        self.tol = tol
        super().__init__(
            f"Power iteration did not converge after {iterations} iterations: "
            f"best rho={rho:.15g}, residual={residual:.3e} > tol={tol:.3e}"
        )


@dataclass(frozen=True)
class PerronResult:
    """
    Dominant eigenpair of an adjacency matrix

    vector has unit Euclidean norm and, for connected graphs with at least one
    edge, strictly positive entries. residual = ||A x - rho x||, which bounds
    |rho - rho(G)| for the symmetric adjacency matrix.
    """
    rho: float
    vector: np.ndarray
    residual: float
    iterations: int

    def entry(self, v: int) -> float:
        """Perron entry x_v"""
        return float(self.vector[v])

    def to_dict(self) -> dict:
        return {
            "rho": self.rho,
            "residual": self.residual,
            "iterations": self.iterations,
            "vector": [float(x) for x in self.vector],
        }
