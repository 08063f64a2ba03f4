"""Subset dynamic programs for maximum-weight colorful independent sets.

Two solvers live here:

* :func:`solve_dp_gamma` is the plain reference program over all subsets
  of the ``gamma`` colors.
* :func:`solve_dp_q` restricts every table row to the colors that are
  live at its position. Color subsets are encoded as bit masks over live
  *slots* (see :class:`~jisolve.graph.LiveColorIndex`), so a row has
  ``2**Q`` entries and a transition is a single mask-and-or. In value
  mode only ``ell + 2`` rows are kept in a ring buffer.

Bit conventions for a mask ``M`` read at position ``p``: bit ``s`` set
means the color occupying slot ``s`` at ``p`` is still available. Colors
whose window has not opened yet are implicitly available, colors whose
window has closed are implicitly unavailable.
"""
from dataclasses import dataclass

import numba
import numpy as np

from .exceptions import LimitExceededError
from .graph import build_live_index

SKIP = -1
_INT64_MAX = np.iinfo(np.int64).max


@dataclass(frozen=True)
class Solution:
    """A colorful independent set and its total weight."""

    vertices: tuple
    value: int

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(sorted(int(v) for v in self.vertices)))
        object.__setattr__(self, "value", int(self.value))

    def __len__(self):
        return len(self.vertices)


@dataclass(frozen=True)
class DpTable:
    """Full witness-mode table: ``values[p, M]`` and ``decisions[p, M]``
    for positions ``p = 1..c+1`` (row 0 unused)."""

    values: np.ndarray
    decisions: np.ndarray
    live: object


def _check_weights(weights):
    if len(weights) and int(weights.sum(dtype=object)) > _INT64_MAX:
        raise OverflowError("total weight does not fit into 64 bits")


# -- reference program over all color subsets --------------------------------

def solve_dp_gamma(g, max_gamma=25):
    """Maximum colorful independent set weight via the full-subset recurrence.

    Vertices are handled in order of decreasing start point; each row holds
    one entry per subset of ``[gamma]``.
    """
    if g.gamma > max_gamma:
        raise LimitExceededError(f"gamma too large for reference DP ({g.gamma} > {max_gamma})")
    if g.n == 0:
        return 0
    _check_weights(g.weights)
    size = 1 << g.gamma
    masks = np.zeros(g.n, dtype=np.int64)
    np.bitwise_or.at(masks, np.repeat(np.arange(g.n), g.list_sizes()), 1 << (g.color_ids - 1))
    ar = np.arange(size, dtype=np.int64)
    table = np.zeros((g.c + 2, size), dtype=np.int64)
    by_start = np.argsort(-g.rep.starts, kind="stable")
    i = 0
    for p in range(g.c, 0, -1):
        row = table[p]
        row[:] = table[p + 1]
        while i < g.n and g.rep.starts[by_start[i]] == p:
            v = by_start[i]
            m = masks[v]
            sel = (ar & m) == m
            cand = g.weights[v] + table[g.rep.ends[v] + 1][ar[sel] & ~m]
            row[sel] = np.maximum(row[sel], cand)
            i += 1
    return int(table[1, size - 1])


# -- live-slot program -------------------------------------------------------

@numba.njit(cache=True)
def _transition_masks(occ, starts, ends, color_ptr, color_ids, slot, c):
    n = len(starts)
    keep = np.zeros(n, dtype=np.int64)
    born = np.zeros(n, dtype=np.int64)
    need = np.zeros(n, dtype=np.int64)
    q = occ.shape[1]
    for v in range(n):
        a = starts[v]
        j = ends[v] + 1
        nd = 0
        for t in range(color_ptr[v], color_ptr[v + 1]):
            col = color_ids[t] - 1
            # every color of v is live at v's start
            assert occ[a, slot[col]] == col
            nd |= 1 << slot[col]
        kk = 0
        bb = 0
        for s in range(q):
            gj = occ[j, s]
            if gj >= 0:
                if occ[a, s] == gj:
                    kk |= 1 << s
                else:
                    bb |= 1 << s
        need[v] = nd
        keep[v] = kk & ~nd
        born[v] = bb
    skip_keep = np.zeros(c + 2, dtype=np.int64)
    skip_born = np.zeros(c + 2, dtype=np.int64)
    for p in range(1, c + 1):
        kk = 0
        bb = 0
        for s in range(q):
            gj = occ[p + 1, s]
            if gj >= 0:
                if occ[p, s] == gj:
                    kk |= 1 << s
                else:
                    bb |= 1 << s
        skip_keep[p] = kk
        skip_born[p] = bb
    return keep, born, need, skip_keep, skip_born


@numba.njit(cache=True)
def _fill(table, decisions, witness, c, q, by_start, starts, ends, weights,
          keep, born, need, skip_keep, skip_born):
    size = 1 << q
    rows = table.shape[0]
    table[(c + 1) % rows, :] = 0
    i = 0
    n = len(by_start)
    for p in range(c, 0, -1):
        cur = table[p % rows]
        nxt = table[(p + 1) % rows]
        kk = skip_keep[p]
        bb = skip_born[p]
        if witness:
            cur[:] = -1
            decisions[p, :] = SKIP
        else:
            # value mode: start from the skip transition, order is irrelevant for max
            for m in range(size):
                cur[m] = nxt[(m & kk) | bb]
        while i < n and starts[by_start[i]] == p:
            v = by_start[i]
            src = table[(ends[v] + 1) % rows]
            w = weights[v]
            nd = need[v]
            kk = keep[v]
            bb = born[v]
            # same work for every mask; masks lacking v's colors get -1
            if witness:
                for m in range(size):
                    val = w + src[(m & kk) | bb]
                    if m & nd != nd:
                        val = -1
                    if val > cur[m]:
                        cur[m] = val
                        decisions[p, m] = v
            else:
                for m in range(size):
                    val = w + src[(m & kk) | bb]
                    if m & nd != nd:
                        val = -1
                    cur[m] = max(cur[m], val)
            i += 1
        if witness:
            # skip last with strict comparison: picking a vertex wins ties
            kk = skip_keep[p]
            bb = skip_born[p]
            for m in range(size):
                val = nxt[(m & kk) | bb]
                if val > cur[m]:
                    cur[m] = val
                    decisions[p, m] = SKIP
    return table[1 % rows, size - 1]


def _prepare(g, max_q):
    live = build_live_index(g)
    if live.Q > max_q:
        raise LimitExceededError(f"Q too large for DP ({live.Q} > {max_q})")
    _check_weights(g.weights)
    masks = _transition_masks(live.occupancy, g.rep.starts, g.rep.ends,
                              g.color_ptr, g.color_ids, live.slot, g.c)
    # vertices by decreasing start, ties by increasing index
    by_start = np.lexsort((np.arange(g.n), -g.rep.starts))
    return live, masks, by_start


def table_shape(g, witness=False):
    """Shape of the table :func:`solve_dp_q` allocates for ``g``."""
    if g.n == 0:
        return (0, 0)
    q = build_live_index(g).Q
    rows = g.c + 2 if witness else int(np.max(g.rep.ends - g.rep.starts)) + 2
    return (rows, 1 << q)


def dp_q_table(g, max_q=30):
    """Run the live-slot program keeping every row and every decision."""
    live, masks, by_start = _prepare(g, max_q)
    size = 1 << live.Q
    table = np.zeros((g.c + 2, size), dtype=np.int64)
    decisions = np.full((g.c + 2, size), SKIP, dtype=np.int64)
    if g.n:
        _fill(table, decisions, True, g.c, live.Q, by_start, g.rep.starts, g.rep.ends,
              g.weights, *masks)
    return DpTable(table, decisions, live)


def solve_dp_q(g, mode="value", max_q=30):
    """Maximum colorful independent set weight via the live-slot recurrence.

    Parameters
    ----------
    g : ColoredIntervalGraph
    mode : {"value", "witness"}
        ``"value"`` returns the optimum using ``2**Q * (ell + 2)`` table
        entries; ``"witness"`` keeps the full table plus decisions and
        returns a :class:`Solution`.
    max_q : int
        Largest admissible number of simultaneously live colors.
    """
    if mode not in ("value", "witness"):
        raise ValueError(f"unknown mode {mode!r}")
    if g.n == 0:
        return 0 if mode == "value" else Solution((), 0)
    if mode == "value":
        live, masks, by_start = _prepare(g, max_q)
        rows = int(np.max(g.rep.ends - g.rep.starts)) + 2
        table = np.empty((rows, 1 << live.Q), dtype=np.int64)
        dummy = np.empty((1, 1), dtype=np.int64)
        return int(_fill(table, dummy, False, g.c, live.Q, by_start, g.rep.starts,
                         g.rep.ends, g.weights, *masks))

    t = dp_q_table(g, max_q)
    keep, born, _, skip_keep, skip_born = _transition_masks(
        t.live.occupancy, g.rep.starts, g.rep.ends, g.color_ptr, g.color_ids, t.live.slot, g.c)
    picked = []
    p, m = 1, (1 << t.live.Q) - 1
    while p <= g.c:
        v = int(t.decisions[p, m])
        if v == SKIP:
            m = (m & skip_keep[p]) | skip_born[p]
            p += 1
        else:
            picked.append(v)
            m = (m & keep[v]) | born[v]
            p = int(g.rep.ends[v]) + 1
    value = int(t.values[1, -1])
    sol = Solution(picked, int(g.weights[picked].sum()) if picked else 0)
    assert sol.value == value
    return sol


def decide(g, k, max_q=30):
    """Is there a colorful independent set with at least ``k`` vertices?"""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return True
    return solve_dp_q(g.with_unit_weights(), max_q=max_q) >= k
