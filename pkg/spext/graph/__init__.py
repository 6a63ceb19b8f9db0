"""Graph core: representation, structure, class predicates and canonical labeling."""

from .models import (
    BlockDecomposition,
    Edge,
    Graph,
    InvalidGraphError,
    InvalidOrderError,
    UnsupportedOrderError,
    VertexOutOfRangeError,
    make_graph,
)
from .structure import (
    block_decomposition,
    common_neighbors,
    components,
    cycle_blocks,
    cycle_edges,
    is_connected,
    neighbors,
    pendant_edges,
)
from .predicates import is_cactus, is_odd_cycle_graph, is_unicyclic, t_count
from .canonical import canonical_label, canonical_relabeling, is_isomorphic
from .io import (
    EdgeListFormatError,
    format_edge_list,
    from_graph6,
    parse_edge_list,
    parse_graph,
    read_graph,
    to_graph6,
    write_graph,
)

__all__ = [
    "BlockDecomposition",
    "Edge",
    "Graph",
    "InvalidGraphError",
    "InvalidOrderError",
    "UnsupportedOrderError",
    "VertexOutOfRangeError",
    "make_graph",
    "block_decomposition",
    "common_neighbors",
    "components",
    "cycle_blocks",
    "cycle_edges",
    "is_connected",
    "neighbors",
    "pendant_edges",
    "is_cactus",
    "is_odd_cycle_graph",
    "is_unicyclic",
    "t_count",
    "canonical_label",
    "canonical_relabeling",
    "is_isomorphic",
    "EdgeListFormatError",
    "format_edge_list",
    "from_graph6",
    "parse_edge_list",
    "parse_graph",
    "read_graph",
    "to_graph6",
    "write_graph",
]
