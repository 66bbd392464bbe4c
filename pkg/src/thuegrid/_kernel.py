"""Batch repetition checks compiled with numba.

One call scans a whole frontier block: for every stored coloring and every
candidate color of the newly added vertex, an iterative twin-path search
decides whether a repetitively colored path through the new vertex exists.
Semantics are identical to ``checker.find_repetitive_through``; the pure
implementation stays the reference and the test suite pins the two to each
other.  Vertex sets are tracked in an int64 bitmask, so the kernel handles
graphs up to 62 vertices; larger prefixes fall back to the pure checker.
"""

from __future__ import annotations

import numpy as np
from numba import njit, prange

KERNEL_MAX_VERTICES = 62


@njit(cache=True, nogil=True)
def _pair_search(colors, u, v, indptr, nbrs, rows,
                 st_xh, st_xt, st_yh, st_yt, st_ax, st_ay, st_m):
    # Twin sequences start at u and v; both may grow at head or tail.
    # Moves are tried head-block first, then tail-block, candidates in
    # ascending vertex order (x major, y minor).
    xh = u
    xt = u
    yh = v
    yt = v
    used = (np.int64(1) << u) | (np.int64(1) << v)
    if (rows[xt] >> yh) & 1 or (rows[xh] >> yt) & 1:
        return True
    depth = 0
    m = 0
    while True:
        h1s = indptr[xh]
        h2s = indptr[yh]
        t1s = indptr[xt]
        t2s = indptr[yt]
        d2h = indptr[yh + 1] - h2s
        d2t = indptr[yt + 1] - t2s
        pcnt = (indptr[xh + 1] - h1s) * d2h
        total = pcnt + (indptr[xt + 1] - t1s) * d2t
        advanced = False
        while m < total:
            if m < pcnt:
                x = nbrs[h1s + m // d2h]
                y = nbrs[h2s + m % d2h]
            else:
                mm = m - pcnt
                x = nbrs[t1s + mm // d2t]
                y = nbrs[t2s + mm % d2t]
            m += 1
            if x == y or colors[x] != colors[y]:
                continue
            if (used >> x) & 1 or (used >> y) & 1:
                continue
            st_xh[depth] = xh
            st_xt[depth] = xt
            st_yh[depth] = yh
            st_yt[depth] = yt
            st_ax[depth] = x
            st_ay[depth] = y
            st_m[depth] = m
            if m - 1 < pcnt:
                xh = x
                yh = y
            else:
                xt = x
                yt = y
            used |= (np.int64(1) << x) | (np.int64(1) << y)
            depth += 1
            if (rows[xt] >> yh) & 1 or (rows[xh] >> yt) & 1:
                return True
            m = 0
            advanced = True
            break
        if advanced:
            continue
        if depth == 0:
            return False
        depth -= 1
        x = st_ax[depth]
        y = st_ay[depth]
        used &= ~((np.int64(1) << x) | (np.int64(1) << y))
        xh = st_xh[depth]
        xt = st_xt[depth]
        yh = st_yh[depth]
        yt = st_yt[depth]
        m = st_m[depth]


@njit(cache=True, nogil=True)
def _candidate_ok(buf, v, indptr, nbrs, rows,
                  st_xh, st_xt, st_yh, st_yt, st_ax, st_ay, st_m):
    cv = buf[v]
    for u in range(v):
        if buf[u] == cv:
            if _pair_search(buf, u, v, indptr, nbrs, rows,
                            st_xh, st_xt, st_yh, st_yt, st_ax, st_ay, st_m):
                return False
    return True


@njit(cache=True, parallel=True)
def extend_mask(frontier, c, indptr, nbrs, rows, out):
    """out[r, a] = 1 iff frontier row r extended by color a stays
    repetition-free through the new last vertex."""
    n_rows, i = frontier.shape
    n = i + 1
    v = i
    md = n // 2 + 2
    for r in prange(n_rows):
        buf = np.empty(n, np.uint8)
        for j in range(i):
            buf[j] = frontier[r, j]
        st_xh = np.empty(md, np.int64)
        st_xt = np.empty(md, np.int64)
        st_yh = np.empty(md, np.int64)
        st_yt = np.empty(md, np.int64)
        st_ax = np.empty(md, np.int64)
        st_ay = np.empty(md, np.int64)
        st_m = np.empty(md, np.int64)
        for a in range(c):
            buf[v] = a
            ok = _candidate_ok(buf, v, indptr, nbrs, rows,
                               st_xh, st_xt, st_yh, st_yt, st_ax, st_ay, st_m)
            out[r, a] = 1 if ok else 0
