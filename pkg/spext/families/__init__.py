"""Named graph families and extremal-cactus characterisations."""
from .constructions import cycle, h_n, k1n_plus, path, star
from .extremal import (
    is_edge_maximal_cactus,
    is_h_n,
    is_k1n_plus,
    is_max_edge_cactus,
    max_cactus_edges,
)

__all__ = [
    "cycle",
    "h_n",
    "k1n_plus",
    "path",
    "star",
    "is_edge_maximal_cactus",
    "is_h_n",
    "is_k1n_plus",
    "is_max_edge_cactus",
    "max_cactus_edges",
]
