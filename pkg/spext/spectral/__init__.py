"""Spectral radius, Perron vector and guarded comparison."""
from .models import ConvergenceError, Ordering, PerronResult
from .solver import compare_results, compare_rho, spectral_radius
from .oracle import characteristic_polynomial, largest_root, oracle_spectral_radius

__all__ = [
    "ConvergenceError",
    "Ordering",
    "PerronResult",
    "compare_results",
    "compare_rho",
    "spectral_radius",
    "characteristic_polynomial",
    "largest_root",
    "oracle_spectral_radius",
]
