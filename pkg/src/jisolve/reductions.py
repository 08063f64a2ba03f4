"""Data reduction and polynomial special cases.

* :func:`signature_reduce` drops every vertex whose two intervals contain
  those of another vertex (dominance on 4-dimensional signatures).
* :func:`color_pack_reduce` and :func:`greedy_maximal_cis` are the two
  rules behind :func:`kernelize_proper` for proper interval graphs.
* :func:`solve_cluster_cluster` solves 2-union instances whose graphs are
  both cluster graphs via bipartite matching.
"""
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

import numba
import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from .dp import Solution
from .exceptions import PreconditionError
from .graph import stats
from .intervals import components, is_cluster, is_proper_graph

_BRUTE_BLOCK = 48


class Signature(NamedTuple):
    """``(-start1, end1, -start2, end2)``; smaller means nested in both graphs."""

    a: int
    b: int
    a2: int
    b2: int


def signatures(t):
    """One signature row per vertex, as an ``(n, 4)`` array."""
    return np.stack([-t.rep1.starts, t.rep1.ends, -t.rep2.starts, t.rep2.ends], axis=1).astype(np.int64)


# -- maxima of 4-d points ------------------------------------------------------

@numba.njit(cache=True)
def _dominated_by(ax, ay, az, bx, by, bz):
    """For each b: is there an a with ax >= bx, ay >= by, az >= bz?

    Sweeps x downward and keeps, in a Fenwick tree over y ranks (largest y
    first), the maximum z inserted so far.
    """
    na, nb = len(ax), len(bx)
    ys = np.unique(np.concatenate((ay, by)))
    m = len(ys)
    tree = np.full(m + 1, np.iinfo(np.int64).min, dtype=np.int64)
    out = np.zeros(nb, dtype=np.bool_)
    ea = np.argsort(-ax, kind="mergesort")
    eb = np.argsort(-bx, kind="mergesort")
    i = 0
    for jj in range(nb):
        j = eb[jj]
        while i < na and ax[ea[i]] >= bx[j]:
            a = ea[i]
            r = m - np.searchsorted(ys, ay[a])  # 1-based rank, largest y -> 1
            while r <= m:
                if az[a] > tree[r]:
                    tree[r] = az[a]
                r += r & -r
            i += 1
        r = m - np.searchsorted(ys, by[j])
        best = np.iinfo(np.int64).min
        while r > 0:
            if tree[r] > best:
                best = tree[r]
            r -= r & -r
        out[j] = best >= bz[j]
    return out


def _brute_block(pts, dominated):
    ge = np.all(pts[:, None, :] >= pts[None, :, :], axis=2)
    np.fill_diagonal(ge, False)
    dominated |= ge.any(axis=0)


def _maxima(P, idx, d, dominated):
    """Mark points of ``idx`` dominated within ``idx``. All points of ``idx``
    agree on coordinates ``< d`` and are pairwise distinct."""
    if len(idx) <= _BRUTE_BLOCK:
        sub = np.zeros(len(idx), dtype=bool)
        _brute_block(P[idx][:, d:], sub)
        dominated[idx] |= sub
        return
    col = P[idx, d]
    vals = np.unique(col)
    if len(vals) == 1:
        _maxima(P, idx, d + 1, dominated)
        return
    pivot = vals[len(vals) // 2]
    hi, lo = idx[col >= pivot], idx[col < pivot]
    _maxima(P, hi, d, dominated)
    _maxima(P, lo, d, dominated)
    # hi is strictly larger on coordinate d; compare the rest, padding with zeros
    a, b = _tail3(P, hi, d), _tail3(P, lo, d)
    dominated[lo] |= _dominated_by(a[:, 0], a[:, 1], a[:, 2], b[:, 0], b[:, 1], b[:, 2])


def _tail3(P, idx, d):
    out = np.zeros((len(idx), 3), dtype=np.int64)
    out[:, : 3 - d] = P[idx, d + 1:]
    return out


def pareto_survivors_4d(points):
    """Indices of the maximal points (nothing else is componentwise >= them).

    Equal points are merged first and only the first index of each group
    can survive. Runs in ``O(n log^2 n)``.
    """
    P = np.asarray(points, dtype=np.int64).reshape(-1, 4)
    if len(P) == 0:
        return np.zeros(0, dtype=np.int64)
    _, first = np.unique(P, axis=0, return_index=True)
    first = np.sort(first)
    U = P[first]
    dominated = np.zeros(len(U), dtype=bool)
    _maxima(U, np.arange(len(U)), 0, dominated)
    return first[~dominated]


# -- dominance rule on 2-union instances --------------------------------------

@dataclass(frozen=True)
class ReductionLog:
    """``kept[i]`` is the input index of output vertex ``i``."""

    kept: np.ndarray
    removed: np.ndarray

    def lift(self, vertices):
        return sorted(int(self.kept[v]) for v in vertices)


def signature_reduce(t, weighted=None):
    """Delete every vertex whose intervals contain those of another vertex in both graphs.

    Parameters
    ----------
    t : TwoUnionInstance
    weighted : bool, optional
        With weights, dominance no longer preserves the optimum and only
        vertices with equal signatures are merged (the heaviest one stays).
        Defaults to ``True`` iff the weights are not all one.

    Returns
    -------
    reduced : TwoUnionInstance
        Re-compactified instance on the surviving vertices, same ``k``.
    log : ReductionLog
    """
    if t.rep1.n != t.rep2.n:
        raise ValueError("mismatched vertex counts")
    if weighted is None:
        weighted = not t.has_unit_weights()
    n = t.n
    sig = signatures(t)
    # one representative per signature: heaviest, then lowest index
    order = np.lexsort((np.arange(n), -t.weights) + tuple(sig.T[::-1]))
    sorted_sig = sig[order]
    new_group = np.ones(n, dtype=bool)
    if n:
        new_group[1:] = np.any(sorted_sig[1:] != sorted_sig[:-1], axis=1)
    reps = order[new_group]
    if not weighted:
        # u goes when sig(v) <= sig(u): survivors are the maxima of -sig
        reps = reps[pareto_survivors_4d(-sig[reps])]
    kept = np.sort(reps)
    removed = np.setdiff1d(np.arange(n), kept)
    reduced = t.induced(kept)
    c_all = t.c_all
    assert reduced.n <= c_all ** (4 if weighted else 3), "signature kernel exceeds its bound"
    return reduced, ReductionLog(kept, removed)


def signature_bound(t, weighted=False):
    """Vertex bound that applies to the output of :func:`signature_reduce`."""
    c = t.c_all
    if weighted:
        return c ** 4
    if is_proper_graph(t.rep1) or is_proper_graph(t.rep2):
        return 2 * c * c
    return c ** 3


# -- proper interval kernel ----------------------------------------------------

def _check_jisp_unit(g, what):
    if not g.is_jisp():
        raise PreconditionError(f"{what} needs singleton color lists")
    if not g.has_unit_weights():
        raise PreconditionError(f"{what} is unweighted")


def _greedy_by_end(starts, ends, vertices):
    """Earliest-end greedy independent set among ``vertices``."""
    picked, last = [], -1
    for v in sorted(vertices, key=lambda v: (ends[v], starts[v], v)):
        if starts[v] > last:
            picked.append(v)
            last = ends[v]
    return picked


@dataclass(frozen=True)
class ColorPackLog:
    """Colors removed by the packing rule, in removal order.

    ``packings[i]`` is the independent set that justified removing
    ``colors[i]`` while the target was ``targets[i]``; indices refer to the
    input graph.
    """

    kept: np.ndarray
    colors: tuple
    packings: tuple
    targets: tuple

    def lift(self, g, vertices):
        """Extend a solution of the reduced graph to one of ``g`` of size
        ``len(vertices) + len(colors)``."""
        chosen = [int(self.kept[v]) for v in vertices]
        for packing in reversed(self.packings):
            for u in packing:
                if all(g.rep.ends[u] < g.rep.starts[w] or g.rep.ends[w] < g.rep.starts[u]
                       for w in chosen):
                    chosen.append(int(u))
                    break
            else:
                raise AssertionError("packing has no free interval; graph is not proper")
        return sorted(chosen)


def color_pack_reduce(g, k):
    """Remove every color with ``2k - 1`` disjoint intervals and decrement ``k``.

    Applied until no color qualifies or ``k`` reaches zero. Colors with
    larger packings go first.

    Returns
    -------
    reduced : ColoredIntervalGraph
    k_out : int
    log : ColorPackLog
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if not is_proper_graph(g.rep):
        raise PreconditionError("Rule 1 requires proper interval graphs")
    _check_jisp_unit(g, "color packing")
    color_of = g.color_ids  # one entry per vertex for JISP
    members = [[] for _ in range(g.gamma)]
    for v, col in enumerate(color_of.tolist()):
        members[col - 1].append(v)
    packs = [_greedy_by_end(g.rep.starts, g.rep.ends, vs) for vs in members]
    ranked = sorted(range(g.gamma), key=lambda x: (-len(packs[x]), x))

    removed, packings, targets = [], [], []
    for x in ranked:
        if k == 0 or len(packs[x]) < 2 * k - 1:
            break
        removed.append(x + 1)
        packings.append(tuple(packs[x]))
        targets.append(k)
        k -= 1
    drop = np.isin(color_of, removed)
    kept = np.flatnonzero(~drop)
    reduced = g.induced(kept) if removed else g
    labels = tuple(int(g.color_labels[x - 1]) for x in removed)
    return reduced, k, ColorPackLog(kept, labels, tuple(packings), tuple(targets))


def greedy_maximal_cis(g):
    """Colorful independent set built by taking first-ending valid intervals."""
    if not g.is_jisp():
        raise PreconditionError("greedy colorful independent set needs singleton color lists")
    used = np.zeros(g.gamma + 1, dtype=bool)
    picked, last = [], 0
    order = np.lexsort((np.arange(g.n), g.rep.starts, g.rep.ends))
    for v in order.tolist():
        col = g.color_ids[v]
        if g.rep.starts[v] > last and not used[col]:
            picked.append(v)
            used[col] = True
            last = g.rep.ends[v]
    return Solution(picked, int(g.weights[picked].sum()) if picked else 0)


class KernelVariant(Enum):
    SOLVED_YES = "solved_yes"
    REDUCED = "reduced"


@dataclass(frozen=True)
class KernelOutcome:
    """Result of :func:`kernelize_proper`.

    ``certificate`` (input indices, size ``k``) is set for ``SOLVED_YES``;
    ``graph``, ``k`` and ``kept`` describe the reduced instance otherwise.
    """

    variant: KernelVariant
    k: int
    graph: object = None
    kept: np.ndarray = None
    certificate: tuple = None
    bound: int = None


def kernelize_proper(g, k):
    """Kernel with at most ``4 k**2 omega`` intervals for proper interval JISP."""
    reduced, k_out, log = color_pack_reduce(g, k)
    greedy = greedy_maximal_cis(reduced)
    if len(greedy) >= k_out:
        cert = log.lift(g, greedy.vertices[:k_out])
        return KernelOutcome(KernelVariant.SOLVED_YES, k, certificate=tuple(cert))
    omega = stats(g).omega
    bound = 4 * k * k * omega
    assert reduced.n <= bound, "proper kernel exceeds its bound"
    return KernelOutcome(KernelVariant.REDUCED, k_out, graph=reduced, kept=log.kept, bound=bound)


# -- cluster / cluster ----------------------------------------------------------

def solve_cluster_cluster(t):
    """Maximum independent set when both graphs are disjoint unions of cliques.

    Each clique of one graph is a left node, each clique of the other a
    right node, and every vertex an edge between its two cliques. An
    independent set is a matching, converted back by taking the lowest
    vertex on each matched edge.
    """
    if not (is_cluster(t.rep1) and is_cluster(t.rep2)):
        raise PreconditionError("cluster-cluster solver requires cluster graphs")
    if not t.has_unit_weights():
        raise PreconditionError("cluster-cluster solver is unweighted")
    if t.n == 0:
        return Solution((), 0)
    left, right = components(t.rep1), components(t.rep2)
    nl, nr = int(left.max()) + 1, int(right.max()) + 1
    # lowest vertex per (left, right) pair
    key = left * nr + right
    pair, lowest = np.unique(key, return_index=True)
    adj = csr_matrix((np.ones(len(pair)), (pair // nr, pair % nr)), shape=(nl, nr))
    match = maximum_bipartite_matching(adj, perm_type="column")
    rows = np.flatnonzero(match >= 0)
    vertex_of = dict(zip(pair.tolist(), lowest.tolist()))
    picked = [vertex_of[int(r) * nr + int(match[r])] for r in rows]
    return Solution(picked, len(picked))
