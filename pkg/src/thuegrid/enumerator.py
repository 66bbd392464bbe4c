"""Frontier enumeration: grow all non-repetitive c-colorings vertex by vertex.

The frontier at size i is the set of colorings of the first i vertices of a
family's addition order that contain no repetitively colored path, with the
four seed colors stored in canonical (first-occurrence) form so colorings
equivalent under a color permutation of the seed are counted once.  Each
step appends the next vertex in every possible color and keeps the
candidates for which no repetition passes through the new vertex; when the
frontier empties at size i, no coloring of any larger prefix exists either,
which certifies that one more color than c is needed for the infinite
lattice.

Frontiers are stored as contiguous uint8 rows (one byte per vertex), which
keeps scanning cache-friendly and makes checkpoints a straight dump.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass
from typing import Callable

import numpy as np
import numba

from . import _kernel
from .checker import MAX_COLORS, Coloring, find_repetitive, find_repetitive_through
from .lattice import (
    FAMILIES,
    FAMILY_BY_ID,
    FAMILY_IDS,
    Family,
    VertexOrder,
    build_order,
    prefix_graph,
)

CHECKPOINT_MAGIC = b"NRCF"
CHECKPOINT_VERSION = 1
_HEADER = struct.Struct("<4sHBBIQ")


class CheckpointError(ValueError):
    """Raised when a checkpoint file is malformed or inconsistent."""


@dataclass(frozen=True, slots=True)
class Frontier:
    """All surviving colorings at prefix size ``i``, one uint8 row each."""

    i: int
    colorings: np.ndarray

    def __len__(self) -> int:
        return self.colorings.shape[0]


@dataclass(frozen=True, slots=True)
class CheckpointMeta:
    family: Family
    c: int


@dataclass(frozen=True, slots=True)
class CountsTable:
    """Per-step frontier sizes of one run, plus the implied lower bound.

    ``derived_bound`` is c + 1 when the run ended with an empty frontier
    and None when it stopped at the size cap with survivors left.
    """

    family: Family
    c: int
    rows: tuple[tuple[int, int], ...]
    derived_bound: int | None


def canonical_seed_form(prefix: Coloring) -> Coloring:
    """Relabel the first four colors by first occurrence; idempotent."""
    if len(prefix) < 4:
        raise ValueError(f"need at least 4 colors, got {len(prefix)}")
    return Coloring(_canonical4(prefix.colors[:4]), prefix.c)


def _canonical4(seed) -> tuple[int, ...]:
    relabel: dict[int, int] = {}
    out = []
    for col in seed:
        if col not in relabel:
            relabel[col] = len(relabel)
        out.append(relabel[col])
    return tuple(out)


def _canonical_seed_tuples(c: int) -> list[tuple[int, ...]]:
    # Lexicographic enumeration of first-occurrence-canonical 4-tuples:
    # entry k is at most one above the maximum of entries < k, and < c.
    out: list[tuple[int, ...]] = []

    def rec(t: list[int], mx: int) -> None:
        if len(t) == 4:
            out.append(tuple(t))
            return
        for col in range(min(mx + 1, c - 1) + 1):
            t.append(col)
            rec(t, max(mx, col))
            t.pop()

    rec([0], 0)
    return out


def seed_colorings(family: Family, c: int) -> Frontier:
    """All canonical non-repetitive colorings of the 4-vertex seed block,
    in lexicographic order."""
    if not 1 <= c <= MAX_COLORS:
        raise ValueError(f"color count {c} outside 1..{MAX_COLORS}")
    g = prefix_graph(build_order(family, 4), 4)
    rows = [
        t
        for t in _canonical_seed_tuples(c)
        if find_repetitive(g, Coloring(t, c)) is None
    ]
    data = np.array(rows, dtype=np.uint8).reshape(len(rows), 4)
    return Frontier(i=4, colorings=data)


def _graph_arrays(g) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    indptr = np.zeros(g.n + 1, dtype=np.int64)
    for v in range(g.n):
        indptr[v + 1] = indptr[v] + len(g.adjacency[v])
    nbrs = np.fromiter(
        (w for v in range(g.n) for w in g.adjacency[v]),
        dtype=np.int64,
        count=int(indptr[-1]),
    )
    rows = np.array(g.rows, dtype=np.int64)
    return indptr, nbrs, rows


def _extend_mask_reference(frontier: Frontier, g, c: int) -> np.ndarray:
    mask = np.zeros((len(frontier), c), dtype=np.uint8)
    v = frontier.i
    for r in range(len(frontier)):
        base = tuple(int(x) for x in frontier.colorings[r])
        for a in range(c):
            f = Coloring(base + (a,), c)
            if find_repetitive_through(g, f, v) is None:
                mask[r, a] = 1
    return mask


def extend(frontier: Frontier, order: VertexOrder, c: int, *, threads: int = 1) -> Frontier:
    """One enumeration step: all repetition-free one-color extensions, in
    deterministic order (input row major, color minor)."""
    i = frontier.i
    if i + 1 > len(order.coords):
        raise ValueError(f"vertex order exhausted at size {i}")
    g = prefix_graph(order, i + 1)
    if g.n <= _kernel.KERNEL_MAX_VERTICES and len(frontier) > 0:
        numba.set_num_threads(min(max(threads, 1), numba.config.NUMBA_NUM_THREADS))
        indptr, nbrs, rows = _graph_arrays(g)
        mask = np.zeros((len(frontier), c), dtype=np.uint8)
        _kernel.extend_mask(frontier.colorings, c, indptr, nbrs, rows, mask)
    else:
        mask = _extend_mask_reference(frontier, g, c)
    keep_rows, keep_colors = np.nonzero(mask)
    new = np.empty((len(keep_rows), i + 1), dtype=np.uint8)
    new[:, :i] = frontier.colorings[keep_rows]
    new[:, i] = keep_colors
    return Frontier(i=i + 1, colorings=new)


def run(
    family: Family,
    c: int,
    max_i: int,
    sink: Callable[[int, int], None] | None = None,
    *,
    threads: int = 1,
    checkpoint_path=None,
    start: Frontier | None = None,
) -> CountsTable:
    """Seed (or resume) and extend until the frontier empties or max_i.

    Emits each (i, n(i)) to ``sink`` as soon as it is computed and, when a
    checkpoint path is given, rewrites the checkpoint after every completed
    step.  With ``start`` the run resumes from an existing frontier and
    emits only the rows after it.
    """
    if max_i < 4:
        raise ValueError(f"max size must be at least 4, got {max_i}")
    order = build_order(family, max_i)
    meta = CheckpointMeta(family=family, c=c)
    rows: list[tuple[int, int]] = []

    def step_done(frontier: Frontier) -> None:
        rows.append((frontier.i, len(frontier)))
        if sink is not None:
            sink(frontier.i, len(frontier))
        if checkpoint_path is not None:
            save_checkpoint(frontier, meta, checkpoint_path)

    if start is None:
        frontier = seed_colorings(family, c)
        step_done(frontier)
    else:
        frontier = start
        if frontier.i < 4:
            raise ValueError("resume frontier predates the seed block")
    while len(frontier) > 0 and frontier.i < max_i:
        frontier = extend(frontier, order, c, threads=threads)
        step_done(frontier)
    bound = c + 1 if len(frontier) == 0 else None
    return CountsTable(family=family, c=c, rows=tuple(rows), derived_bound=bound)


def save_checkpoint(frontier: Frontier, meta: CheckpointMeta, path) -> None:
    """Atomically write a frontier with its run parameters."""
    data = np.ascontiguousarray(frontier.colorings, dtype=np.uint8)
    header = _HEADER.pack(
        CHECKPOINT_MAGIC,
        CHECKPOINT_VERSION,
        FAMILY_IDS[meta.family.kind],
        meta.c,
        frontier.i,
        data.shape[0],
    )
    import os

    tmp = str(path) + ".tmp"
    with open(tmp, "wb") as fh:
        fh.write(header)
        fh.write(data.tobytes())
    os.replace(tmp, path)


def load_checkpoint(path, *, family: Family | None = None, c: int | None = None):
    """Read a checkpoint back, validating structure and stored colorings.

    Optional ``family``/``c`` assert that the file belongs to the intended
    run.  Returns (Frontier, CheckpointMeta).
    """
    with open(path, "rb") as fh:
        blob = fh.read()
    if len(blob) < _HEADER.size:
        raise CheckpointError("truncated checkpoint header")
    magic, version, family_id, file_c, i, count = _HEADER.unpack_from(blob)
    if magic != CHECKPOINT_MAGIC:
        raise CheckpointError(f"bad magic {magic!r}")
    if version != CHECKPOINT_VERSION:
        raise CheckpointError(f"unsupported format version {version}")
    if family_id not in FAMILY_BY_ID:
        raise CheckpointError(f"unknown family id {family_id}")
    file_family = FAMILY_BY_ID[family_id]
    if family is not None and file_family.kind != family.kind:
        raise CheckpointError(
            f"checkpoint family {file_family.kind} does not match requested {family.kind}"
        )
    if c is not None and file_c != c:
        raise CheckpointError(f"checkpoint c={file_c} does not match requested c={c}")
    if file_c < 1 or i < 4:
        raise CheckpointError(f"implausible header (c={file_c}, i={i})")
    body = blob[_HEADER.size:]
    if len(body) != count * i:
        raise CheckpointError(
            f"body holds {len(body)} bytes, header promises {count} rows of {i}"
        )
    data = np.frombuffer(body, dtype=np.uint8).reshape(count, i).copy()
    if count and int(data.max()) >= file_c:
        raise CheckpointError(f"color id {int(data.max())} outside 0..{file_c - 1}")
    for r in range(count):
        seed = tuple(int(x) for x in data[r, :4])
        if _canonical4(seed) != seed:
            raise CheckpointError(f"row {r} seed {seed} is not in canonical form")
    return Frontier(i=i, colorings=data), CheckpointMeta(family=file_family, c=file_c)
