"""Brute-force ground truth used to check every production solver.

Nothing here shares code with the solvers: intersection and color
disjointness are tested directly on plain Python tuples and sets.
"""
import itertools
from dataclasses import dataclass

from .dp import Solution
from .exceptions import LimitExceededError

MAX_BRUTE_N = 24


def _max_weight_independent(n, weights, conflict):
    """Exhaustive search over vertex subsets in index order.

    Among optimal sets the lexicographically smallest sorted index tuple
    wins.
    """
    best = [-1, None]
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] + weights[i]

    def rec(i, chosen, value):
        if value + suffix[i] < best[0]:
            return
        if i == n:
            cand = tuple(chosen)
            if value > best[0] or (value == best[0] and cand < best[1]):
                best[0], best[1] = value, cand
            return
        if all(not conflict(i, u) for u in chosen):
            chosen.append(i)
            rec(i + 1, chosen, value + weights[i])
            chosen.pop()
        rec(i + 1, chosen, value)

    rec(0, [], 0)
    return Solution(best[1], best[0])


def brute_max_cis(g):
    """Exact maximum-weight colorful independent set by enumeration."""
    if g.n > MAX_BRUTE_N:
        raise LimitExceededError(f"brute force limited to n <= {MAX_BRUTE_N}, got {g.n}")
    ivs = [(int(a), int(b)) for a, b in zip(g.rep.starts, g.rep.ends)]
    cols = [set(g.colors(v)) for v in range(g.n)]
    weights = [int(w) for w in g.weights]

    def conflict(u, v):
        (a, b), (x, y) = ivs[u], ivs[v]
        overlap = not (b < x or y < a)
        return overlap or bool(cols[u] & cols[v])

    return _max_weight_independent(g.n, weights, conflict)


def brute_two_union(t):
    """Exact maximum-weight independent set of the edge-wise union."""
    if t.n > MAX_BRUTE_N:
        raise LimitExceededError(f"brute force limited to n <= {MAX_BRUTE_N}, got {t.n}")
    first = [(int(a), int(b)) for a, b in zip(t.rep1.starts, t.rep1.ends)]
    second = [(int(a), int(b)) for a, b in zip(t.rep2.starts, t.rep2.ends)]
    weights = [int(w) for w in t.weights]

    def meets(p, q):
        return p[0] <= q[1] and q[0] <= p[1]

    def conflict(u, v):
        return meets(first[u], first[v]) or meets(second[u], second[v])

    return _max_weight_independent(t.n, weights, conflict)


def brute_pareto(points):
    """Indices of the maximal points, one survivor per group of equal points.

    Among equal points the first index survives. The caller may reorder
    points beforehand to prefer other survivors.
    """
    points = [tuple(p) for p in points]
    if len(points) > 10_000:
        raise LimitExceededError("brute_pareto limited to 10^4 points")
    first_seen = {}
    for i, p in enumerate(points):
        first_seen.setdefault(p, i)
    reps = sorted(first_seen.values())
    survivors = []
    for i in reps:
        p = points[i]
        dominated = any(
            j != i and points[j] != p and all(a >= b for a, b in zip(points[j], p))
            for j in reps
        )
        if not dominated:
            survivors.append(i)
    return survivors


@dataclass(frozen=True)
class Cnf3:
    """A CNF formula; literals are nonzero ints, ``-x`` negates variable ``x``."""

    num_vars: int
    clauses: tuple

    def __post_init__(self):
        clauses = tuple(tuple(int(l) for l in cl) for cl in self.clauses)
        for cl in clauses:
            if not cl or len(cl) > 3:
                raise ValueError(f"clause {cl} must have 1 to 3 literals")
            vars_ = [abs(l) for l in cl]
            if 0 in vars_ or max(vars_) > self.num_vars:
                raise ValueError(f"clause {cl} uses an unknown variable")
            if len(set(vars_)) != len(vars_):
                raise ValueError(f"clause {cl} repeats a variable")
        object.__setattr__(self, "clauses", clauses)


def sat3_satisfiable(f, max_vars=20):
    if f.num_vars > max_vars:
        raise LimitExceededError(f"exhaustive SAT limited to {max_vars} variables")
    for bits in itertools.product((False, True), repeat=f.num_vars):
        if all(any(bits[abs(l) - 1] == (l > 0) for l in cl) for cl in f.clauses):
            return True
    return False
