"""Repetition checking via synchronized path-pair backtracking.

A coloring is non-repetitive when no simple path of even length 2k carries
a color word of shape ww.  Instead of enumerating paths one by one, the
search grows the two halves of a candidate repetition in lockstep: two
vertex sequences that carry identical color words at all times.  Whenever
an end of one sequence is adjacent to the opposite end of the other, the
concatenation is a repetitively colored path.

Two variants are provided.  ``find_repetitive`` scans a whole coloring and
extends both sequences at their tails only.  ``find_repetitive_through``
looks only for repetitions that pass through one designated vertex; there
the designated vertex may sit anywhere inside its half, so the search must
extend at heads as well as tails.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .lattice import PrefixGraph

# One byte of storage per vertex; color ids beyond this are rejected.
MAX_COLORS = 255

TAIL_TO_HEAD = "tail_to_head"
HEAD_TO_TAIL = "head_to_tail"


@dataclass(frozen=True, slots=True)
class Coloring:
    """A vertex coloring: one color id per vertex index, each below ``c``."""

    colors: tuple[int, ...]
    c: int

    def __post_init__(self) -> None:
        if not 1 <= self.c <= MAX_COLORS:
            raise ValueError(f"color count {self.c} outside 1..{MAX_COLORS}")
        for v, col in enumerate(self.colors):
            if not 0 <= col < self.c:
                raise ValueError(
                    f"color id {col} at vertex {v} outside 0..{self.c - 1}"
                )

    def __len__(self) -> int:
        return len(self.colors)


@dataclass(frozen=True, slots=True)
class Witness:
    """Certificate of a repetition: two equal-length, identically colored
    vertex sequences joined into a single simple path.

    ``joined_at`` records which adjacency closed the path: the first half's
    tail to the second half's head (path = first + second), or the first
    half's head to the second half's tail (path = second + first).
    """

    first_half: tuple[int, ...]
    second_half: tuple[int, ...]
    joined_at: str

    @property
    def k(self) -> int:
        return len(self.first_half)

    def as_path(self) -> tuple[int, ...]:
        if self.joined_at == TAIL_TO_HEAD:
            return self.first_half + self.second_half
        return self.second_half + self.first_half


def _join(p1, p2, g: PrefixGraph) -> Witness | None:
    if g.adjacent(p1[-1], p2[0]):
        return Witness(tuple(p1), tuple(p2), TAIL_TO_HEAD)
    if g.adjacent(p1[0], p2[-1]):
        return Witness(tuple(p1), tuple(p2), HEAD_TO_TAIL)
    return None


def _check_inputs(g: PrefixGraph, coloring: Coloring) -> tuple[int, ...]:
    if len(coloring) != g.n:
        raise ValueError(
            f"coloring length {len(coloring)} != vertex count {g.n}"
        )
    return coloring.colors


def _extend_tails(g, colors, p1: list[int], p2: list[int], used: int):
    w = _join(p1, p2, g)
    if w is not None:
        return w
    for x in g.adjacency[p1[-1]]:
        if used >> x & 1:
            continue
        cx = colors[x]
        for y in g.adjacency[p2[-1]]:
            if y == x or colors[y] != cx or used >> y & 1:
                continue
            p1.append(x)
            p2.append(y)
            w = _extend_tails(g, colors, p1, p2, used | (1 << x) | (1 << y))
            if w is not None:
                return w
            p1.pop()
            p2.pop()
    return None


def find_repetitive(g: PrefixGraph, coloring: Coloring) -> Witness | None:
    """Search the whole graph for a repetitively colored path.

    Returns a witness if one exists, else None (the coloring is
    non-repetitive on ``g``).  Every same-colored vertex pair seeds one
    half each; both halves then grow at their tails over all same-colored,
    unused neighbor pairs, with the join adjacency tested at every depth.
    An adjacent same-colored pair is itself a repetition (k = 1) and is
    reported before any extension.
    """
    colors = _check_inputs(g, coloring)
    for u in range(g.n):
        cu = colors[u]
        for v in range(u + 1, g.n):
            if colors[v] != cu:
                continue
            w = _extend_tails(g, colors, [u], [v], (1 << u) | (1 << v))
            if w is not None:
                return w
    return None


def _extend_both(g, colors, p1: deque[int], p2: deque[int], used: int):
    w = _join(p1, p2, g)
    if w is not None:
        return w
    # Head moves first, then tail moves; within each, candidates ascend.
    for x in g.adjacency[p1[0]]:
        if used >> x & 1:
            continue
        cx = colors[x]
        for y in g.adjacency[p2[0]]:
            if y == x or colors[y] != cx or used >> y & 1:
                continue
            p1.appendleft(x)
            p2.appendleft(y)
            w = _extend_both(g, colors, p1, p2, used | (1 << x) | (1 << y))
            if w is not None:
                return w
            p1.popleft()
            p2.popleft()
    for x in g.adjacency[p1[-1]]:
        if used >> x & 1:
            continue
        cx = colors[x]
        for y in g.adjacency[p2[-1]]:
            if y == x or colors[y] != cx or used >> y & 1:
                continue
            p1.append(x)
            p2.append(y)
            w = _extend_both(g, colors, p1, p2, used | (1 << x) | (1 << y))
            if w is not None:
                return w
            p1.pop()
            p2.pop()
    return None


def find_repetitive_through(
    g: PrefixGraph, coloring: Coloring, v: int
) -> Witness | None:
    """Search for a repetitively colored path that passes through ``v``.

    Returns None iff no repetition uses ``v``; other repetitions are not
    looked for, which is what makes frontier extension cheap when the rest
    of the graph is already known to be non-repetitive.  The second half is
    pinned to contain ``v`` and both halves may grow at either end, so
    every alignment of ``v`` inside a repetition is reachable.
    """
    colors = _check_inputs(g, coloring)
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range 0..{g.n - 1}")
    cv = colors[v]
    for u in range(g.n):
        if u == v or colors[u] != cv:
            continue
        w = _extend_both(
            g, colors, deque([u]), deque([v]), (1 << u) | (1 << v)
        )
        if w is not None:
            return w
    return None
