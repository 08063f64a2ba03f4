"""Colored interval graphs, 2-union instances and live-color bookkeeping."""
import heapq
from dataclasses import dataclass, field

import numpy as np

from .intervals import CompactRep, IntervalSet, compactify, coverage, max_length


def _readonly(a, dtype=np.int64):
    a = np.ascontiguousarray(a, dtype=dtype)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class ColoredIntervalGraph:
    """A CISL instance: compact intervals, color lists and vertex weights.

    Color lists are stored in CSR form: the colors of vertex ``v`` are
    ``color_ids[color_ptr[v]:color_ptr[v + 1]]``, sorted and 1-based.
    Colors are renumbered on construction so that every id in ``1..gamma``
    occurs; ``color_labels[g - 1]`` is the label color ``g`` had in the input.
    """

    rep: CompactRep
    color_ptr: np.ndarray
    color_ids: np.ndarray
    weights: np.ndarray
    gamma: int
    color_labels: np.ndarray = field(repr=False)

    @classmethod
    def from_arrays(cls, starts, ends, color_ptr, color_ids, weights=None):
        """Build from raw intervals and CSR color lists; compactifies and renumbers."""
        rep, _ = compactify(IntervalSet(np.asarray(starts), np.asarray(ends)))
        return cls.from_rep(rep, color_ptr, color_ids, weights)

    @classmethod
    def from_rep(cls, rep, color_ptr, color_ids, weights=None):
        n = rep.n
        color_ptr = np.asarray(color_ptr, dtype=np.int64)
        color_ids = np.asarray(color_ids, dtype=np.int64)
        if len(color_ptr) != n + 1 or color_ptr[0] != 0 or color_ptr[-1] != len(color_ids):
            raise ValueError("malformed color list pointers")
        if np.any(np.diff(color_ptr) <= 0):
            raise ValueError("every vertex needs a nonempty color list")
        if weights is None:
            weights = np.ones(n, dtype=np.int64)
        weights = np.asarray(weights, dtype=np.int64)
        if weights.shape != (n,):
            raise ValueError("one weight per vertex required")
        if np.any(weights < 0):
            raise ValueError("weights must be nonnegative")

        labels, dense = np.unique(color_ids, return_inverse=True)
        dense = dense.astype(np.int64) + 1
        # sort and deduplicate within each list
        owner = np.repeat(np.arange(n), np.diff(color_ptr))
        key = np.lexsort((dense, owner))
        owner, dense = owner[key], dense[key]
        if len(dense):
            keep = np.ones(len(dense), dtype=bool)
            keep[1:] = (owner[1:] != owner[:-1]) | (dense[1:] != dense[:-1])
            owner, dense = owner[keep], dense[keep]
        ptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(owner, minlength=n), out=ptr[1:])
        return cls(rep, _readonly(ptr), _readonly(dense), _readonly(weights), len(labels), _readonly(labels))

    @classmethod
    def from_lists(cls, intervals, colors, weights=None):
        """Build from a list of ``(start, end)`` pairs and a list of color iterables."""
        colors = [list(cs) for cs in colors]
        if len(colors) != len(intervals):
            raise ValueError("one color list per interval required")
        ptr = np.zeros(len(colors) + 1, dtype=np.int64)
        np.cumsum([len(cs) for cs in colors], out=ptr[1:])
        ids = np.array([x for cs in colors for x in cs], dtype=np.int64)
        rep, _ = compactify(IntervalSet.from_pairs(intervals))
        return cls.from_rep(rep, ptr, ids, weights)

    @property
    def n(self):
        return self.rep.n

    @property
    def c(self):
        return self.rep.c

    def colors(self, v):
        return tuple(self.color_ids[self.color_ptr[v]:self.color_ptr[v + 1]].tolist())

    def color_lists(self):
        return [self.colors(v) for v in range(self.n)]

    def list_sizes(self):
        return np.diff(self.color_ptr)

    def is_jisp(self):
        """True iff every vertex carries exactly one color."""
        return bool(np.all(self.list_sizes() == 1))

    def has_unit_weights(self):
        return bool(np.all(self.weights == 1))

    def with_unit_weights(self):
        return ColoredIntervalGraph(self.rep, self.color_ptr, self.color_ids,
                                    _readonly(np.ones(self.n)), self.gamma, self.color_labels)

    def induced(self, keep):
        """Subgraph on the vertices ``keep`` (renumbered in the given order)."""
        keep = np.asarray(keep, dtype=np.int64)
        sizes = self.list_sizes()[keep]
        ptr = np.zeros(len(keep) + 1, dtype=np.int64)
        np.cumsum(sizes, out=ptr[1:])
        if len(keep):
            ids = np.concatenate([self.color_ids[self.color_ptr[v]:self.color_ptr[v + 1]] for v in keep])
        else:
            ids = np.zeros(0, dtype=np.int64)
        return ColoredIntervalGraph.from_arrays(self.rep.starts[keep], self.rep.ends[keep],
                                                ptr, ids, self.weights[keep])


@dataclass(frozen=True)
class TwoUnionInstance:
    """Two interval representations over one vertex set, a target ``k`` and weights."""

    rep1: CompactRep
    rep2: CompactRep
    k: int = 0
    weights: np.ndarray = None

    def __post_init__(self):
        if self.rep1.n != self.rep2.n:
            raise ValueError(f"vertex counts differ: {self.rep1.n} vs {self.rep2.n}")
        if self.k < 0:
            raise ValueError("k must be nonnegative")
        w = np.ones(self.rep1.n) if self.weights is None else self.weights
        w = _readonly(w)
        if w.shape != (self.rep1.n,) or np.any(w < 0):
            raise ValueError("one nonnegative weight per vertex required")
        object.__setattr__(self, "weights", w)

    @classmethod
    def from_pairs(cls, pairs1, pairs2, k=0, weights=None):
        if len(pairs1) != len(pairs2):
            raise ValueError(f"vertex counts differ: {len(pairs1)} vs {len(pairs2)}")
        rep1, _ = compactify(IntervalSet.from_pairs(pairs1))
        rep2, _ = compactify(IntervalSet.from_pairs(pairs2))
        return cls(rep1, rep2, k, weights)

    @property
    def n(self):
        return self.rep1.n

    @property
    def c_all(self):
        return max(self.rep1.c, self.rep2.c)

    @property
    def c_exists(self):
        return min(self.rep1.c, self.rep2.c)

    def has_unit_weights(self):
        return bool(np.all(self.weights == 1))

    def induced(self, keep):
        keep = np.asarray(keep, dtype=np.int64)
        return TwoUnionInstance(self.rep1.subset(keep), self.rep2.subset(keep), self.k, self.weights[keep])


def two_union_to_cisl(t, use_second_as_colors="auto"):
    """Translate a 2-union instance into a CISL instance.

    One representation stays the interval side; every vertex receives the
    positions covered by its interval on the other side as its color list.
    In ``"auto"`` mode the side with the smaller compactness becomes the
    color side.
    """
    if t.rep1.n != t.rep2.n:
        raise ValueError("mismatched vertex counts")
    if use_second_as_colors == "auto":
        use_second_as_colors = t.rep2.c <= t.rep1.c
    graph_side, color_side = (t.rep1, t.rep2) if use_second_as_colors else (t.rep2, t.rep1)
    sizes = color_side.ends - color_side.starts + 1
    ptr = np.zeros(t.n + 1, dtype=np.int64)
    np.cumsum(sizes, out=ptr[1:])
    offs = np.arange(ptr[-1]) - np.repeat(ptr[:-1], sizes)
    ids = np.repeat(color_side.starts, sizes) + offs
    return ColoredIntervalGraph.from_rep(graph_side, ptr, ids, t.weights)


@dataclass(frozen=True)
class LiveColorIndex:
    """Liveness windows of the colors of a graph and a slot per color.

    Color ``g`` (1-based) is live at positions ``first[g-1]..last[g-1]``.
    ``occupancy[p, s]`` is the 0-based color occupying slot ``s`` at
    position ``p`` (``-1`` when free); rows run over ``0..c+1``.
    """

    first: np.ndarray
    last: np.ndarray
    slot: np.ndarray
    Q: int
    occupancy: np.ndarray = field(repr=False)
    deaths: tuple = field(repr=False)

    def live_colors(self, p):
        return sorted(int(g) + 1 for g in self.occupancy[p] if g >= 0)

    def live_mask(self):
        """Slot bit mask of live colors per position."""
        bits = (self.occupancy >= 0) * (1 << np.arange(self.Q, dtype=np.int64))
        return bits.sum(axis=1).astype(np.int64) if self.Q else np.zeros(len(self.occupancy), dtype=np.int64)


def build_live_index(g):
    c, gamma = g.c, g.gamma
    owner_start = np.repeat(g.rep.starts, g.list_sizes())
    cidx = g.color_ids - 1
    first = np.full(gamma, np.iinfo(np.int64).max, dtype=np.int64)
    last = np.zeros(gamma, dtype=np.int64)
    np.minimum.at(first, cidx, owner_start)
    np.maximum.at(last, cidx, owner_start)

    slot = np.zeros(gamma, dtype=np.int64)
    free, active, q = [], [], 0
    for col in np.lexsort((np.arange(gamma), first)):
        while active and active[0][0] < first[col]:
            heapq.heappush(free, heapq.heappop(active)[1])
        if free:
            s = heapq.heappop(free)
        else:
            s, q = q, q + 1
        slot[col] = s
        heapq.heappush(active, (last[col], s))

    occupancy = np.full((c + 2, q), -1, dtype=np.int64)
    deaths = [[] for _ in range(c + 2)]
    for col in range(gamma):
        occupancy[first[col]:last[col] + 1, slot[col]] = col
        deaths[last[col]].append(col + 1)
    return LiveColorIndex(_readonly(first), _readonly(last), _readonly(slot), q,
                          _readonly(occupancy), tuple(tuple(d) for d in deaths))


@dataclass(frozen=True)
class GraphStats:
    gamma: int
    Q: int
    Gamma: int
    omega: int
    ell: int
    n: int
    c: int


def stats(g, live=None):
    """Structural parameters of a colored interval graph."""
    if g.n == 0:
        return GraphStats(g.gamma, 0, 0, 0, 0, 0, 0)
    live = live or build_live_index(g)
    cov = coverage(g.rep)
    # per-position, per-color coverage counts
    sizes = g.list_sizes()
    diff = np.zeros((g.c + 2, g.gamma), dtype=np.int32)
    cidx = g.color_ids - 1
    np.add.at(diff, (np.repeat(g.rep.starts, sizes), cidx), 1)
    np.add.at(diff, (np.repeat(g.rep.ends + 1, sizes), cidx), -1)
    per_pos = (np.cumsum(diff, axis=0)[1:g.c + 1] > 0).sum(axis=1)
    return GraphStats(g.gamma, live.Q, int(per_pos.max()), int(cov.max()),
                      max_length(g.rep), g.n, g.c)


def first_violation(g, vertices):
    """Name the first constraint a vertex set violates, or ``None`` if it is a
    colorful independent set of ``g``."""
    vs = sorted(int(v) for v in vertices)
    if len(set(vs)) != len(vs):
        return "duplicate vertex in solution"
    for v in vs:
        if not 0 <= v < g.n:
            return f"vertex {v} out of range"
    for i, u in enumerate(vs):
        for v in vs[i + 1:]:
            if set(g.colors(u)) & set(g.colors(v)):
                return f"colors of {u} and {v} intersect"
            if g.rep.starts[u] <= g.rep.ends[v] and g.rep.starts[v] <= g.rep.ends[u]:
                return f"intervals {u} and {v} intersect"
    return None
