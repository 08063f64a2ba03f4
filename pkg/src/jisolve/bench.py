"""Benchmark harness: runtime and peak memory of the DP over parameter sweeps."""
import time
import tracemalloc
from dataclasses import dataclass

from .dp import solve_dp_gamma, solve_dp_q
from .generators import GenParams, gen_cisl
from .graph import build_live_index
from .intervals import max_length

CSV_VERSION = "# jisolve-bench v1"
CSV_HEADER = "algo,n,gamma,c,Q,ell,time_ms,peak_mem_bytes,value"
SOLVERS = {"dpq": solve_dp_q, "dpgamma": solve_dp_gamma}


@dataclass(frozen=True)
class BenchRow:
    algo: str
    n: int
    gamma: int
    c: int
    Q: int
    ell: int
    time_ms: float
    peak_mem_bytes: int
    value: int

    def csv(self):
        return (f"{self.algo},{self.n},{self.gamma},{self.c},{self.Q},{self.ell},"
                f"{self.time_ms:.3f},{self.peak_mem_bytes},{self.value}")


def parse_range(text):
    """``"10..15"`` -> ``[10, ..., 15]``; ``"1,5,9"`` -> ``[1, 5, 9]``."""
    text = text.strip()
    if ".." in text:
        lo, hi = text.split("..", 1)
        lo, hi = int(float(lo)), int(float(hi))
        if hi < lo:
            raise ValueError(f"empty range {text!r}")
        return list(range(lo, hi + 1))
    return [int(float(x)) for x in text.split(",") if x.strip()]


def sweep_points(sweep, n, gamma, c):
    """Expand the swept parameter against the fixed others.

    Every argument is an int or a list; only ``sweep`` may hold more than
    one value.
    """
    grid = {"n": n, "gamma": gamma, "c": c}
    if sweep not in grid:
        raise ValueError(f"unknown sweep {sweep!r}")
    grid = {key: list(val) if isinstance(val, (list, tuple)) else [val] for key, val in grid.items()}
    for key, vals in grid.items():
        if key != sweep and len(vals) != 1:
            raise ValueError(f"{key} must be a single value when sweeping {sweep}")
    base = {key: vals[0] for key, vals in grid.items()}
    return [dict(base, **{sweep: v}) for v in grid[sweep]]


def warm_up():
    """Trigger JIT compilation so the first timed run is not penalized."""
    solve_dp_q(gen_cisl(GenParams(n=8, c=4, gamma=3, seed=0)))


def measure(g, algo="dpq"):
    """Run one solve and return ``(seconds, peak_bytes, value)``.

    Peak memory is the tracemalloc high-water mark, which covers numpy
    buffers including the DP table.
    """
    solver = SOLVERS[algo]
    tracemalloc.start()
    tracemalloc.reset_peak()
    try:
        t0 = time.perf_counter()
        value = solver(g)
        elapsed = time.perf_counter() - t0
        _, peak = tracemalloc.get_traced_memory()
    finally:
        tracemalloc.stop()
    return elapsed, peak, int(value)


def run_bench(points, repeats=1, algo="dpq", seed=0, color_prob=0.5, weight_max=10):
    """Time every point ``repeats`` times.

    Repeats are interleaved across points (round robin) so slow drifts of
    the machine hit all points alike. Rows come back ordered by point, then
    repeat.
    """
    if algo not in SOLVERS:
        raise ValueError(f"unknown algorithm {algo!r}")
    warm_up()
    graphs = []
    for pt in points:
        g = gen_cisl(GenParams(n=pt["n"], c=pt["c"], gamma=pt["gamma"], color_prob=color_prob,
                               weight_max=weight_max, seed=seed))
        q = build_live_index(g).Q if g.n else 0
        ell = max_length(g.rep) if g.n else 0
        graphs.append((pt, g, q, ell))
    rows = [[] for _ in points]
    for _ in range(repeats):
        for i, (pt, g, q, ell) in enumerate(graphs):
            sec, peak, value = measure(g, algo)
            rows[i].append(BenchRow(algo, pt["n"], pt["gamma"], pt["c"], q, ell, sec * 1e3, peak, value))
    return [r for per_point in rows for r in per_point]


def to_csv(rows):
    return "\n".join([CSV_VERSION, CSV_HEADER] + [r.csv() for r in rows]) + "\n"
