"""Slow, transparent reference implementations.

These exist to anchor the fast search code: ``oracle_find_repetitive``
enumerates every simple path outright and tests the repetition condition
directly from its definition, and ``oracle_count`` brute-forces frontier
counts by checking every extension of every canonical seed coloring.
Nothing here is tuned; a reader should be able to audit it in minutes.
"""

from __future__ import annotations

from itertools import product

from .checker import TAIL_TO_HEAD, Coloring, Witness
from .lattice import Family, PrefixGraph, build_order, prefix_graph

# Upper bound on (number of seeds) * c**(i-4) accepted by oracle_count.
COUNT_GUARD = 10**8


def _dfs_paths(g: PrefixGraph, colors, path: list[int], used: int):
    length = len(path)
    if length % 2 == 0:
        k = length // 2
        if all(colors[path[t]] == colors[path[k + t]] for t in range(k)):
            return Witness(tuple(path[:k]), tuple(path[k:]), TAIL_TO_HEAD)
    for x in g.adjacency[path[-1]]:
        if used >> x & 1:
            continue
        path.append(x)
        w = _dfs_paths(g, colors, path, used | (1 << x))
        if w is not None:
            return w
        path.pop()
    return None


def oracle_find_repetitive(g: PrefixGraph, coloring: Coloring) -> Witness | None:
    """Plain exhaustive search over all simple paths of even length.

    Paths are enumerated depth-first from every start vertex in ascending
    order; the first repetitively colored one encountered is returned.
    """
    if len(coloring) != g.n:
        raise ValueError(
            f"coloring length {len(coloring)} != vertex count {g.n}"
        )
    colors = coloring.colors
    for s in range(g.n):
        w = _dfs_paths(g, colors, [s], 1 << s)
        if w is not None:
            return w
    return None


def _canonical_tuples(length: int, c: int) -> list[tuple[int, ...]]:
    # First-occurrence-canonical tuples: starts at 0, each entry at most
    # one above the running maximum, all entries below c.
    out: list[tuple[int, ...]] = []

    def rec(t: list[int], mx: int) -> None:
        if len(t) == length:
            out.append(tuple(t))
            return
        for col in range(min(mx + 1, c - 1) + 1):
            t.append(col)
            rec(t, max(mx, col))
            t.pop()

    rec([0], 0)
    return out


def oracle_count(family: Family, c: int, i: int) -> int:
    """Brute-force n(i): non-repetitive c-colorings of the size-i prefix
    whose seed restriction is in canonical (first-occurrence) form."""
    if i < 4:
        raise ValueError(f"prefix size must be at least 4, got {i}")
    order = build_order(family, i)
    seed_graph = prefix_graph(order, 4)
    seeds = [
        t
        for t in _canonical_tuples(4, c)
        if oracle_find_repetitive(seed_graph, Coloring(t, c)) is None
    ]
    if len(seeds) * c ** (i - 4) > COUNT_GUARD:
        raise ValueError(
            f"oracle_count({family.kind}, {c}, {i}) exceeds guard {COUNT_GUARD}"
        )
    g = prefix_graph(order, i)
    count = 0
    for seed in seeds:
        for tail in product(range(c), repeat=i - 4):
            f = Coloring(seed + tail, c)
            if oracle_find_repetitive(g, f) is None:
                count += 1
    return count
