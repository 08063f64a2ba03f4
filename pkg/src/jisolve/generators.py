"""Random instance generators and the 3-SAT hard-instance construction."""
from dataclasses import dataclass

import numpy as np

from .graph import ColoredIntervalGraph, TwoUnionInstance
from .intervals import IntervalSet, compactify


@dataclass(frozen=True)
class GenParams:
    n: int
    c: int
    gamma: int = 1
    color_prob: float = 0.5
    weight_max: int = 10
    seed: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be nonnegative")
        if self.c < 1:
            raise ValueError("c must be at least 1")
        if self.gamma < 1:
            raise ValueError("gamma must be at least 1")
        if not 0 < self.color_prob <= 1:
            raise ValueError("color_prob must lie in (0, 1]")
        if self.weight_max < 1:
            raise ValueError("weight_max must be at least 1")


def _endpoints(rng, n, c):
    a = rng.integers(1, c + 1, size=n)
    b = rng.integers(1, c + 1, size=n)
    return np.minimum(a, b), np.maximum(a, b)


def gen_cisl(p):
    """Random colored interval graph: endpoints uniform in ``[c]`` (swapped
    when reversed), each color kept with ``color_prob`` (empty lists are
    redrawn), weights uniform in ``1..weight_max``."""
    rng = np.random.default_rng(p.seed)
    starts, ends = _endpoints(rng, p.n, p.c)
    member = rng.random((p.n, p.gamma)) < p.color_prob
    empty = np.flatnonzero(~member.any(axis=1))
    while len(empty):
        member[empty] = rng.random((len(empty), p.gamma)) < p.color_prob
        empty = empty[~member[empty].any(axis=1)]
    weights = rng.integers(1, p.weight_max + 1, size=p.n)
    rows, cols = np.nonzero(member)
    ptr = np.zeros(p.n + 1, dtype=np.int64)
    np.cumsum(member.sum(axis=1), out=ptr[1:])
    return ColoredIntervalGraph.from_arrays(starts, ends, ptr, cols + 1, weights)


def gen_two_union(p, k=0):
    """Two independent endpoint draws over the same ``n`` vertices."""
    rng = np.random.default_rng(p.seed)
    s1, e1 = _endpoints(rng, p.n, p.c)
    s2, e2 = _endpoints(rng, p.n, p.c)
    rep1, _ = compactify(IntervalSet(s1, e1))
    rep2, _ = compactify(IntervalSet(s2, e2))
    return TwoUnionInstance(rep1, rep2, k)


def gen_proper_jisp(n, gamma, span, seed=0, length=None):
    """Random JISP instance whose interval graph is proper: every interval
    has the same real length, starts are uniform in ``[0, span)``."""
    rng = np.random.default_rng(seed)
    length = rng.uniform(0.5, 3.0) if length is None else length
    starts = rng.uniform(0, span, size=n)
    colors = rng.integers(1, gamma + 1, size=n)
    ptr = np.arange(n + 1)
    return ColoredIntervalGraph.from_arrays(starts, starts + length, ptr, colors)


def gen_cluster_pair(n, clusters1, clusters2, seed=0):
    """Random 2-union instance in which both graphs are cluster graphs."""
    rng = np.random.default_rng(seed)
    a = rng.integers(0, clusters1, size=n) * 2 + 1
    b = rng.integers(0, clusters2, size=n) * 2 + 1
    rep1, _ = compactify(IntervalSet(a, a))
    rep2, _ = compactify(IntervalSet(b, b))
    return TwoUnionInstance(rep1, rep2, 0)


def _path_layout(components):
    """Intervals for disjoint paths: vertex ``i`` of a path gets ``[p+i, p+i+1]``."""
    pairs = {}
    pos = 1
    for comp in components:
        for i, v in enumerate(comp):
            pairs[v] = (pos + i, pos + i + 1)
        pos += len(comp) + 2
    return pairs


def _clique_layout(components):
    pairs = {}
    for q, comp in enumerate(components, start=1):
        for v in comp:
            pairs[v] = (2 * q, 2 * q)
    return pairs


def reduce_sat3(f):
    """Encode a 3-CNF formula as a 2-union instance with target ``k``.

    Per clause: a clique (triangle, edge or single vertex) on the second
    side, one vertex per literal, each joined by an antenna on the first
    side to a leaf of the variable's cycle gadget. Per variable with
    ``m`` occurrences: an alternating cycle of ``2m`` T/F vertices whose
    odd edges lie on the first side and even edges on the second side.
    A positive occurrence attaches to an F-vertex, a negative one to a
    T-vertex, each on its own first-side cycle edge.

    The first side is a disjoint union of 3-vertex paths, the second a
    disjoint union of ``k = m + sum(m_i)`` cliques, and the formula is
    satisfiable iff the union has an independent set of size ``k``.
    """
    occurrences = {x: [] for x in range(1, f.num_vars + 1)}
    clause_vertices = []
    nxt = 0
    for j, cl in enumerate(f.clauses):
        tri = []
        for lit in cl:
            tri.append(nxt)
            occurrences[abs(lit)].append((nxt, lit > 0))
            nxt += 1
        clause_vertices.append(tri)

    first_side = []   # 3-vertex paths: antenna end, leaf, partner
    second_side = [list(t) for t in clause_vertices]
    for x in range(1, f.num_vars + 1):
        occ = occurrences[x]
        m = len(occ)
        if m == 0:
            continue
        t_vertices = list(range(nxt, nxt + m))
        f_vertices = list(range(nxt + m, nxt + 2 * m))
        nxt += 2 * m
        for q, (tv, positive) in enumerate(occ):
            leaf, partner = (f_vertices[q], t_vertices[q]) if positive else (t_vertices[q], f_vertices[q])
            first_side.append([tv, leaf, partner])
        for q in range(m):
            second_side.append([f_vertices[q], t_vertices[(q + 1) % m]])

    p1 = _path_layout(first_side)
    p2 = _clique_layout(second_side)
    pairs1 = [p1[v] for v in range(nxt)]
    pairs2 = [p2[v] for v in range(nxt)]
    k = len(f.clauses) + sum(len(o) for o in occurrences.values())
    return TwoUnionInstance.from_pairs(pairs1, pairs2, k)
