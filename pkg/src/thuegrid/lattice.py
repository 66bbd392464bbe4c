"""Lattice families, the square-shell vertex order, and finite prefix graphs.

Three infinite lattices are supported, all realized on integer coordinates
``(x, y)``: the square grid (4 neighbors per vertex), the king grid (8),
and the triangular tiling (6, obtained from the square grid by adding one
skew diagonal).  Finite search prefixes are induced subgraphs on the first
``i`` vertices of a fixed addition order that grows square shells around a
2x2 seed block; in that order every new vertex touches only a handful of
earlier vertices, which keeps incremental repetition checks cheap.
"""

from __future__ import annotations

from dataclasses import dataclass

Coord = tuple[int, int]

# Coordinates far beyond any realistic run are rejected rather than silently
# accepted; the largest shipped searches stay within single digits.
COORD_CAP = 1 << 15

SEED_COORDS: tuple[Coord, ...] = ((0, 0), (1, 0), (0, 1), (1, 1))


@dataclass(frozen=True, slots=True)
class Family:
    """An infinite lattice given by its adjacency displacement set.

    ``offsets`` is closed under negation; two coordinates are adjacent
    iff their difference is an offset.
    """

    kind: str
    offsets: tuple[Coord, ...]


CARTESIAN = Family("cartesian", ((-1, 0), (0, -1), (0, 1), (1, 0)))
STRONG = Family(
    "strong",
    ((-1, -1), (-1, 0), (-1, 1), (0, -1), (0, 1), (1, -1), (1, 0), (1, 1)),
)
# The triangular tiling uses the anti-diagonal: (1,0) and (0,1) are adjacent,
# (0,0) and (1,1) are not.  The mirrored convention exists but produces
# different prefix graphs under the square-shell order; this one reproduces
# the published frontier counts (see tests).
TRIANGULAR = Family(
    "triangular",
    ((-1, 0), (-1, 1), (0, -1), (0, 1), (1, -1), (1, 0)),
)

FAMILIES: dict[str, Family] = {
    f.kind: f for f in (CARTESIAN, STRONG, TRIANGULAR)
}

# Stable one-byte ids used by the checkpoint file format.
FAMILY_IDS: dict[str, int] = {"cartesian": 0, "strong": 1, "triangular": 2}
FAMILY_BY_ID: dict[int, Family] = {FAMILY_IDS[k]: f for k, f in FAMILIES.items()}


@dataclass(frozen=True, slots=True)
class VertexOrder:
    """A finite prefix of a family's vertex-addition order."""

    family: Family
    coords: tuple[Coord, ...]

    def __len__(self) -> int:
        return len(self.coords)


@dataclass(frozen=True, slots=True)
class PrefixGraph:
    """A small graph with sorted adjacency lists and per-vertex bitmask rows.

    ``rows[i]`` has bit ``j`` set iff vertices ``i`` and ``j`` are adjacent,
    so adjacency tests are a shift and a mask.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    rows: tuple[int, ...]

    def adjacent(self, i: int, j: int) -> bool:
        return (self.rows[i] >> j) & 1 == 1

    @classmethod
    def from_edges(cls, n: int, edges) -> "PrefixGraph":
        """Build a graph on vertices ``0..n-1`` from an iterable of edges."""
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for a, b in edges:
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"edge ({a}, {b}) out of range for n={n}")
            if a == b:
                raise ValueError(f"self-loop at vertex {a}")
            nbrs[a].add(b)
            nbrs[b].add(a)
        adjacency = tuple(tuple(sorted(s)) for s in nbrs)
        rows = tuple(sum(1 << j for j in adj) for adj in adjacency)
        return cls(n=n, adjacency=adjacency, rows=rows)


def _check_cap(coord: Coord) -> None:
    x, y = coord
    if abs(x) > COORD_CAP or abs(y) > COORD_CAP:
        raise ValueError(f"coordinate {coord} exceeds cap {COORD_CAP}")


def neighbors(family: Family, coord: Coord) -> set[Coord]:
    """All lattice neighbors of ``coord`` in ``family``."""
    _check_cap(coord)
    x, y = coord
    return {(x + dx, y + dy) for dx, dy in family.offsets}


def build_order(family: Family, n: int) -> VertexOrder:
    """First ``n`` coordinates of the square-shell addition order.

    The order starts with the 2x2 seed block (0,0),(1,0),(0,1),(1,1) and
    then, for each shell s = 2, 3, ...: the new column (s,0)..(s,s) top
    down followed by the new row (s-1,s)..(0,s) right to left, so each
    prefix fills a square.
    """
    if n < 4:
        raise ValueError(f"order length must be at least 4, got {n}")
    coords: list[Coord] = list(SEED_COORDS)
    s = 2
    while len(coords) < n:
        if s > COORD_CAP:
            raise ValueError(f"shell {s} exceeds coordinate cap {COORD_CAP}")
        coords.extend((s, y) for y in range(s + 1))
        coords.extend((x, s) for x in range(s - 1, -1, -1))
        s += 1
    return VertexOrder(family=family, coords=tuple(coords[:n]))


def prefix_graph(order: VertexOrder, i: int) -> PrefixGraph:
    """Induced subgraph on the first ``i`` vertices of ``order``."""
    if not 4 <= i <= len(order.coords):
        raise ValueError(
            f"prefix size {i} out of range [4, {len(order.coords)}]"
        )
    index = {coord: k for k, coord in enumerate(order.coords[:i])}
    adjacency = []
    for k in range(i):
        x, y = order.coords[k]
        adj = sorted(
            index[(x + dx, y + dy)]
            for dx, dy in order.family.offsets
            if (x + dx, y + dy) in index
        )
        adjacency.append(tuple(adj))
    rows = tuple(sum(1 << j for j in adj) for adj in adjacency)
    return PrefixGraph(n=i, adjacency=tuple(adjacency), rows=rows)
