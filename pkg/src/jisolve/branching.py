"""Bounded search tree for the unweighted decision problem.

Every colorful independent set of size ``k`` can be rebuilt so that it
contains exactly one interval of the first clique ``K`` (the intervals
starting no later than the earliest end point), and for single-colored
intervals that interval may be taken to be the first-ending member of
its color. Branching over the colors present in ``K`` therefore gives a
tree with at most ``Gamma`` children per node and depth ``k``.
"""
from dataclasses import dataclass

import numpy as np

from .dp import Solution
from .exceptions import PreconditionError


@dataclass(frozen=True)
class FirstClique:
    """Vertices starting no later than the earliest end point, and their colors."""

    K: frozenset
    colorsInK: frozenset


@dataclass
class BranchStats:
    """Instrumentation filled in by :func:`solve_branch`."""

    nodes: int = 0
    max_depth: int = 0


def first_clique(g):
    if g.n == 0:
        raise ValueError("first clique of an empty graph is undefined")
    bound = g.rep.ends.min()
    members = np.flatnonzero(g.rep.starts <= bound)
    colors = set()
    for v in members:
        colors.update(g.colors(int(v)))
    return FirstClique(frozenset(int(v) for v in members), frozenset(colors))


class _Search:
    def __init__(self, g, allow_lists, stats):
        order = g.rep.order
        self.order = order
        self.starts = g.rep.starts[order]
        self.ends = g.rep.ends[order]
        self.colors = [g.colors(int(v)) for v in order]
        self.allow_lists = allow_lists
        self.stats = stats

    def _alive(self, lo, used):
        """Sorted positions of vertices starting after ``lo`` with no used color."""
        first = int(np.searchsorted(self.starts, lo, side="right"))
        return [i for i in range(first, len(self.starts))
                if not any(col in used for col in self.colors[i])]

    def run(self, lo, used, k, depth):
        self.stats.nodes += 1
        self.stats.max_depth = max(self.stats.max_depth, depth)
        if k == 0:
            return []
        alive = self._alive(lo, used)
        if len(alive) < k:
            return None
        bound = min(self.ends[i] for i in alive)
        clique = [i for i in alive if self.starts[i] <= bound]

        if self.allow_lists:
            # any member of K may be the solution's first interval, or none of them
            for i in clique:
                rest = self.run(self.ends[i], used | set(self.colors[i]), k - 1, depth + 1)
                if rest is not None:
                    return [i] + rest
            return self.run(bound, used, k, depth + 1)

        first_of = {}
        for i in clique:
            col = self.colors[i][0]
            j = first_of.get(col)
            # first-ending member, ties to the smaller vertex id
            if j is None or (self.ends[i], self.order[i]) < (self.ends[j], self.order[j]):
                first_of[col] = i
        for col in sorted(first_of):
            i = first_of[col]
            rest = self.run(self.ends[i], used | {col}, k - 1, depth + 1)
            if rest is not None:
                return [i] + rest
        return None


def solve_branch(g, k, allow_lists=False, stats=None):
    """Find a colorful independent set with exactly ``k`` vertices.

    Parameters
    ----------
    g : ColoredIntervalGraph
        Unit-weight instance. Singleton color lists unless ``allow_lists``.
    k : int
        Target size.
    allow_lists : bool
        Accept list-colored vertices by branching over every member of the
        first clique plus one branch that discards the whole clique. Exact,
        but the ``Gamma**k`` node bound no longer applies.
    stats : BranchStats, optional
        Receives the number of search-tree nodes visited.

    Returns
    -------
    Solution or None
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if not g.has_unit_weights():
        raise PreconditionError("branch solver is unweighted")
    if not allow_lists and not g.is_jisp():
        raise PreconditionError("branch solver needs singleton color lists (use allow_lists)")
    stats = stats if stats is not None else BranchStats()
    search = _Search(g, allow_lists, stats)
    picked = search.run(0, frozenset(), k, 0)
    if picked is None:
        return None
    vertices = [int(search.order[i]) for i in picked]
    return Solution(vertices, len(vertices))


def node_bound(gamma_max, k):
    """Largest node count the search may visit on a JISP instance."""
    return sum(gamma_max ** j for j in range(k + 1))
