"""Command line front end (``jisolve``).

Exit codes: 0 solved or yes, 1 no or invalid solution, 2 usage or format
error, 3 an algorithm precondition does not hold.
"""
import argparse
import sys

import numpy as np

from . import bench
from .branching import solve_branch
from .color_coding import CcConfig, solve_cc
from .dp import solve_dp_gamma, solve_dp_q
from .exceptions import InstanceFormatError, PreconditionError
from .generators import GenParams, gen_cisl, gen_two_union, reduce_sat3
from .graph import ColoredIntervalGraph, TwoUnionInstance, first_violation, stats, two_union_to_cisl
from .io import format_solution, parse_dimacs, parse_instance, parse_solution, serialize_instance
from .oracle import brute_max_cis, brute_two_union
from .reductions import (KernelVariant, color_pack_reduce, kernelize_proper, signature_bound,
                         signature_reduce, solve_cluster_cluster)

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_PRECONDITION = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _read(path):
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _write(text, path):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _load(path, weighted):
    inst = parse_instance(_read(path))
    if isinstance(inst, ColoredIntervalGraph) and not weighted:
        inst = inst.with_unit_weights()
    return inst


def _as_cisl(inst):
    return inst if isinstance(inst, ColoredIntervalGraph) else two_union_to_cisl(inst)


def _target(args, inst):
    if args.k is not None:
        if args.k < 0:
            raise UsageError("--k must be nonnegative")
        return args.k
    if isinstance(inst, TwoUnionInstance) and inst.k > 0:
        return inst.k
    return None


# -- solve --------------------------------------------------------------------

def _optimize(args, inst):
    """Return ``(value, pick or None)``."""
    algo = args.algo
    if algo == "dpq":
        g = _as_cisl(inst)
        if args.witness:
            sol = solve_dp_q(g, mode="witness", max_q=args.max_q)
            return sol.value, sol.vertices
        return solve_dp_q(g, max_q=args.max_q), None
    if algo == "dpgamma":
        if args.witness:
            raise UsageError("dpgamma computes values only; use --algo dpq for witnesses")
        return solve_dp_gamma(_as_cisl(inst)), None
    if algo == "brute":
        sol = brute_max_cis(inst) if isinstance(inst, ColoredIntervalGraph) else brute_two_union(inst)
        return sol.value, sol.vertices
    if algo == "matching":
        if not isinstance(inst, TwoUnionInstance):
            raise PreconditionError("matching needs a 2union instance")
        sol = solve_cluster_cluster(inst)
        return sol.value, sol.vertices
    raise AssertionError(algo)


def _decide(args, inst, k):
    """Return ``(answer, pick or None)`` for the size-``k`` question."""
    g = _as_cisl(inst)
    if args.algo == "branch":
        sol = solve_branch(g, k, allow_lists=args.allow_lists)
    elif k == 0:
        return True, ()
    else:
        cfg = CcConfig(k=k, epsilon=args.epsilon, seed=args.seed)
        sol = solve_cc(g, cfg, exhaustive=args.exhaustive_recolorings)
    return sol is not None, (sol.vertices if sol is not None else None)


def cmd_solve(args):
    inst = _load(args.instance, args.weighted)
    k = _target(args, inst)
    if args.algo in ("branch", "cc"):
        if k is None:
            raise UsageError(f"--algo {args.algo} needs --k")
        answer, pick = _decide(args, inst, k)
        out = format_solution(answer=answer, pick=pick if (args.witness and answer) else None)
        sys.stdout.write(out)
        return EXIT_OK if answer else EXIT_NO
    value, pick = _optimize(args, inst)
    answer = None if k is None else value >= k
    sys.stdout.write(format_solution(value=value, pick=pick if args.witness else None, answer=answer))
    return EXIT_NO if answer is False else EXIT_OK


# -- kernelize ----------------------------------------------------------------

def _stats_line(**kv):
    return "# stats " + " ".join(f"{key}={val}" for key, val in kv.items())


def cmd_kernelize(args):
    inst = _load(args.instance, args.weighted)
    rules = args.rules
    if rules == "signature":
        if not isinstance(inst, TwoUnionInstance):
            raise PreconditionError("signature rule needs a 2union instance")
        reduced, log = signature_reduce(inst)
        bound = signature_bound(inst, weighted=not inst.has_unit_weights())
        assert reduced.n <= bound
        kv = dict(rules=rules, n_in=inst.n, n_out=reduced.n, c_all=inst.c_all, bound=bound,
                  k=inst.k, k_out=reduced.k)
        kept = log.kept
    else:
        if not isinstance(inst, ColoredIntervalGraph):
            raise PreconditionError(f"{rules} needs a cisl instance")
        k = _target(args, inst)
        if k is None:
            raise UsageError(f"--rules {rules} needs --k")
        omega = stats(inst).omega
        if rules == "colorpack":
            reduced, k_out, log = color_pack_reduce(inst, k)
            kept, bound = log.kept, inst.n
        else:
            outcome = kernelize_proper(inst, k)
            if outcome.variant is KernelVariant.SOLVED_YES:
                sys.stderr.write(_stats_line(rules=rules, n_in=inst.n, k=k) + "\n")
                _write("solved yes\n" + format_solution(pick=outcome.certificate), args.output)
                return EXIT_OK
            reduced, k_out, kept, bound = outcome.graph, outcome.k, outcome.kept, outcome.bound
        kv = dict(rules=rules, n_in=inst.n, n_out=reduced.n, c_all=inst.c, omega=omega,
                  bound=bound, k=k, k_out=k_out)
    line = _stats_line(**kv)
    sys.stderr.write(line + "\n")
    body = line + "\n# kept " + " ".join(str(int(v)) for v in kept) + "\n" + serialize_instance(reduced)
    _write(body, args.output)
    return EXIT_OK


# -- generate / reduce-sat ----------------------------------------------------

def cmd_generate(args):
    try:
        p = GenParams(n=args.n, c=args.c, gamma=args.gamma, color_prob=args.color_prob,
                      weight_max=args.weight_max, seed=args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.kind == "cisl":
        inst = gen_cisl(p)
    else:
        if args.k < 0:
            raise UsageError("--k must be nonnegative")
        inst = gen_two_union(p, k=args.k)
    _write(serialize_instance(inst), args.output)
    return EXIT_OK


def cmd_reduce_sat(args):
    f = parse_dimacs(_read(args.formula))
    _write(serialize_instance(reduce_sat3(f)), args.output)
    return EXIT_OK


# -- bench ------------------------------------------------------------------------

def cmd_bench(args):
    try:
        grid = {key: bench.parse_range(getattr(args, key)) for key in ("n", "gamma", "c")}
        points = bench.sweep_points(args.sweep, **grid)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.repeats < 1:
        raise UsageError("--repeats must be positive")
    rows = bench.run_bench(points, repeats=args.repeats, algo=args.algo, seed=args.seed)
    _write(bench.to_csv(rows), args.output)
    return EXIT_OK


# -- verify -------------------------------------------------------------------------

def _two_union_violation(t, vertices):
    vs = sorted(vertices)
    if len(set(vs)) != len(vs):
        return "duplicate vertex in solution"
    for v in vs:
        if not 0 <= v < t.n:
            return f"vertex {v} out of range"
    for i, u in enumerate(vs):
        for v in vs[i + 1:]:
            for name, rep in (("g1", t.rep1), ("g2", t.rep2)):
                if rep.starts[u] <= rep.ends[v] and rep.starts[v] <= rep.ends[u]:
                    return f"intervals {u} and {v} intersect in {name}"
    return None


def cmd_verify(args):
    inst = _load(args.instance, args.weighted)
    sol = parse_solution(_read(args.solution))
    pick = sol.pick if sol.pick is not None else ()
    if sol.answer is False and not pick:
        print("invalid: a 'no' answer cannot be verified")
        return EXIT_NO
    if isinstance(inst, ColoredIntervalGraph):
        problem = first_violation(inst, pick)
    else:
        problem = _two_union_violation(inst, pick)
    if problem is None and sol.value is not None:
        actual = int(np.asarray(inst.weights)[list(pick)].sum()) if pick else 0
        if actual != sol.value:
            problem = f"claimed value {sol.value} but the picked vertices weigh {actual}"
    if problem is not None:
        print(f"invalid: {problem}")
        return EXIT_NO
    print("valid")
    return EXIT_OK


# -- parser ----------------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(prog="jisolve",
                                     description="Colorful independent sets in colored interval graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="solve an instance")
    s.add_argument("instance", help="instance file, '-' for stdin")
    s.add_argument("--algo", choices=["dpq", "dpgamma", "branch", "cc", "matching", "brute"], default="dpq")
    s.add_argument("--k", type=int, help="decide whether a solution of this size exists")
    s.add_argument("--epsilon", type=float, default=0.1, help="error probability for --algo cc")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--witness", action="store_true", help="print the chosen vertices")
    s.add_argument("--weighted", action="store_true", help="use vertex weights (default: cardinality)")
    s.add_argument("--allow-lists", action="store_true", help="let --algo branch accept color lists")
    s.add_argument("--exhaustive-recolorings", action="store_true",
                   help="--algo cc: try every recoloring instead of random ones")
    s.add_argument("--max-q", type=int, default=30)
    s.set_defaults(func=cmd_solve)

    kz = sub.add_parser("kernelize", help="apply reduction rules")
    kz.add_argument("instance")
    kz.add_argument("--rules", choices=["signature", "colorpack", "proper-kernel"], required=True)
    kz.add_argument("--k", type=int)
    kz.add_argument("--weighted", action="store_true")
    kz.add_argument("-o", "--output")
    kz.set_defaults(func=cmd_kernelize)

    g = sub.add_parser("generate", help="random instance")
    g.add_argument("kind", choices=["cisl", "2union"])
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--c", type=int, required=True)
    g.add_argument("--gamma", type=int, default=1)
    g.add_argument("--color-prob", type=float, default=0.5)
    g.add_argument("--weight-max", type=int, default=10)
    g.add_argument("--k", type=int, default=0)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_generate)

    r = sub.add_parser("reduce-sat", help="3-SAT formula (DIMACS) to a 2union instance")
    r.add_argument("formula")
    r.add_argument("-o", "--output")
    r.set_defaults(func=cmd_reduce_sat)

    b = sub.add_parser("bench", help="runtime / memory sweep as CSV")
    b.add_argument("--sweep", choices=["gamma", "n", "c"], required=True)
    b.add_argument("--n", default="100000", help="value, list a,b or range lo..hi")
    b.add_argument("--gamma", default="10..15")
    b.add_argument("--c", default="1000")
    b.add_argument("--repeats", type=int, default=1)
    b.add_argument("--algo", choices=sorted(bench.SOLVERS), default="dpq")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("-o", "--output")
    b.set_defaults(func=cmd_bench)

    v = sub.add_parser("verify", help="check a solution file")
    v.add_argument("instance")
    v.add_argument("solution")
    v.add_argument("--weighted", action="store_true")
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except (InstanceFormatError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PreconditionError, OverflowError) as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
