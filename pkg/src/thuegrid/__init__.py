"""Exhaustive search for non-repetitive colorings of grid-like lattices.

A coloring is non-repetitive (square-free along paths) when no simple path
reads the same color word twice in a row.  This package enumerates all
non-repetitive c-colorings of growing finite prefixes of the square grid,
the king grid, and the triangular tiling; an empty frontier at some prefix
size certifies the lower bound pi >= c + 1 for the infinite lattice's
non-repetitive chromatic number.
"""

from .checker import Coloring, Witness, find_repetitive, find_repetitive_through
from .enumerator import (
    CheckpointError,
    CheckpointMeta,
    CountsTable,
    Frontier,
    canonical_seed_form,
    extend,
    load_checkpoint,
    run,
    save_checkpoint,
    seed_colorings,
)
from .lattice import (
    CARTESIAN,
    FAMILIES,
    STRONG,
    TRIANGULAR,
    Family,
    PrefixGraph,
    VertexOrder,
    build_order,
    neighbors,
    prefix_graph,
)
from .oracle import oracle_count, oracle_find_repetitive

__version__ = "0.1.0"

__all__ = [
    "CARTESIAN",
    "STRONG",
    "TRIANGULAR",
    "FAMILIES",
    "Family",
    "PrefixGraph",
    "VertexOrder",
    "build_order",
    "neighbors",
    "prefix_graph",
    "Coloring",
    "Witness",
    "find_repetitive",
    "find_repetitive_through",
    "oracle_find_repetitive",
    "oracle_count",
    "Frontier",
    "CountsTable",
    "CheckpointMeta",
    "CheckpointError",
    "canonical_seed_form",
    "seed_colorings",
    "extend",
    "run",
    "save_checkpoint",
    "load_checkpoint",
    "__version__",
]
