"""Interval representations, compactification and structural predicates.

Vertex identities are array indices and never change: a ``CompactRep``
stores the compact interval of every vertex in vertex order and keeps
the canonical sorted order (start, then end, then vertex index) in
``order``.
"""
from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True)
class IntervalSet:
    """Closed intervals ``[start, end]``; vertex ``i`` is interval ``i``."""

    starts: np.ndarray
    ends: np.ndarray

    def __post_init__(self):
        starts = np.asarray(self.starts)
        ends = np.asarray(self.ends)
        if starts.shape != ends.shape or starts.ndim != 1:
            raise ValueError("starts and ends must be 1-d arrays of equal length")
        if np.any(starts > ends):
            bad = int(np.flatnonzero(starts > ends)[0])
            raise ValueError(f"interval {bad} has start > end")
        object.__setattr__(self, "starts", starts)
        object.__setattr__(self, "ends", ends)

    @classmethod
    def from_pairs(cls, pairs):
        pairs = list(pairs)
        if not pairs:
            return cls(np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64))
        arr = np.asarray(pairs)
        return cls(arr[:, 0], arr[:, 1])

    @property
    def n(self):
        return len(self.starts)

    def pairs(self):
        return list(zip(self.starts.tolist(), self.ends.tolist()))


def _as_interval_set(s):
    if isinstance(s, (IntervalSet, CompactRep)):
        return IntervalSet(s.starts, s.ends)
    return IntervalSet.from_pairs(s)


def _readonly(a):
    a = np.ascontiguousarray(a, dtype=np.int64)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class CompactRep:
    """A c-compact representation in which every position of ``[c]`` holds
    both a start point and an end point.

    ``starts[v]`` / ``ends[v]`` are the compact coordinates of vertex ``v``;
    ``order`` lists vertex ids by increasing start, then end, then id.
    """

    starts: np.ndarray
    ends: np.ndarray
    c: int
    order: np.ndarray = field(repr=False)

    @property
    def n(self):
        return len(self.starts)

    def sorted_pairs(self):
        """Intervals in canonical sorted order."""
        return [(int(self.starts[v]), int(self.ends[v])) for v in self.order]

    def pairs(self):
        return list(zip(self.starts.tolist(), self.ends.tolist()))

    def subset(self, keep):
        """Re-compactified representation of the vertices in ``keep`` (renumbered 0..)."""
        keep = np.asarray(keep, dtype=np.int64)
        rep, _ = compactify(IntervalSet(self.starts[keep], self.ends[keep]))
        return rep


def _canonical_order(starts, ends):
    idx = np.arange(len(starts))
    return np.lexsort((idx, ends, starts))


def compactify(s):
    """Map an interval set to the minimum-compactness representation.

    Event points are swept in increasing order with start events ahead of
    end events at equal coordinates, so touching closed intervals keep
    intersecting. A new position opens exactly when a start directly
    follows an end.

    Returns
    -------
    rep : CompactRep
    permutation : ndarray
        ``permutation[v]`` is the sorted position of vertex ``v``.
    """
    s = _as_interval_set(s)
    n = s.n
    if n == 0:
        empty = _readonly(np.zeros(0, dtype=np.int64))
        return CompactRep(empty, empty, 0, empty), empty

    coords = np.concatenate([s.starts, s.ends])
    is_end = np.concatenate([np.zeros(n, dtype=bool), np.ones(n, dtype=bool)])
    events = np.lexsort((is_end, coords))
    ev_end = is_end[events]
    opens = np.zeros(2 * n, dtype=np.int64)
    opens[1:] = ~ev_end[1:] & ev_end[:-1]
    pos = 1 + np.cumsum(opens)

    mapped = np.empty(2 * n, dtype=np.int64)
    mapped[events] = pos
    starts, ends = mapped[:n], mapped[n:]
    order = _canonical_order(starts, ends)
    perm = np.empty(n, dtype=np.int64)
    perm[order] = np.arange(n)
    rep = CompactRep(_readonly(starts), _readonly(ends), int(pos[-1]), _readonly(order))
    return rep, _readonly(perm)


def maximal_cliques(s):
    """All maximal cliques of the interval graph, in sweep order.

    Computed directly from pairwise containment of end points: the
    intervals containing each end point form a clique, and the maximal
    ones among those are exactly the maximal cliques.
    """
    pairs = _as_interval_set(s).pairs()
    candidates = []
    for x in sorted({e for _, e in pairs}):
        members = frozenset(i for i, (a, b) in enumerate(pairs) if a <= x <= b)
        candidates.append(members)
    result = []
    for i, cand in enumerate(candidates):
        if any(cand < other for other in candidates):
            continue
        if cand in candidates[:i]:
            continue
        result.append(set(cand))
    return result


def is_proper_rep(r):
    """True iff no interval of this representation strictly contains another."""
    if r.n < 2:
        return True
    uniq = np.unique(np.stack([r.starts, r.ends], axis=1), axis=0)
    return bool(np.all(np.diff(uniq[:, 0]) > 0) and np.all(np.diff(uniq[:, 1]) > 0))


def is_proper_graph(r):
    """True iff the represented graph is a proper interval graph.

    Relies on every position of ``r`` carrying a start and an end point:
    then an induced claw exists iff some interval sticks out strictly on
    both sides of another one.
    """
    if r.n < 3:
        return True
    o = r.order
    starts, ends = r.starts[o], r.ends[o]
    # max end over intervals with strictly smaller start
    first_of_group = np.searchsorted(starts, starts, side="left")
    run_max = np.maximum.accumulate(ends)
    prior = np.where(first_of_group > 0, run_max[np.maximum(first_of_group - 1, 0)], -1)
    return not bool(np.any(prior > ends))


def is_cluster(r):
    """True iff every connected component is a clique."""
    if r.n == 0:
        return True
    o = r.order
    starts, ends = r.starts[o], r.ends[o]
    run_max = np.maximum.accumulate(ends)
    breaks = np.flatnonzero(starts[1:] > run_max[:-1]) + 1
    bounds = np.concatenate([[0], breaks])
    min_end = np.minimum.reduceat(ends, bounds)
    last_start = starts[np.concatenate([breaks - 1, [len(starts) - 1]])]
    return bool(np.all(last_start <= min_end))


def components(r):
    """Connected-component label of every vertex (labels follow sweep order)."""
    labels = np.zeros(r.n, dtype=np.int64)
    if r.n == 0:
        return labels
    o = r.order
    starts, ends = r.starts[o], r.ends[o]
    run_max = np.maximum.accumulate(ends)
    new = np.zeros(r.n, dtype=np.int64)
    new[1:] = starts[1:] > run_max[:-1]
    labels[o] = np.cumsum(new)
    return labels


def max_length(r):
    """Maximum of ``end - start`` over all intervals."""
    if r.n == 0:
        raise ValueError("empty representation")
    return int(np.max(r.ends - r.starts))


def coverage(r):
    """Number of intervals covering each position ``1..c`` (index 0 unused)."""
    diff = np.zeros(r.c + 2, dtype=np.int64)
    np.add.at(diff, r.starts, 1)
    np.add.at(diff, r.ends + 1, -1)
    return np.cumsum(diff)[: r.c + 1]
