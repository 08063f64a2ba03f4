"""Colorful independent sets in colored interval graphs.

Exact and parameterized solvers for job interval selection (JISP), its
list-colored generalization (CISL) and independent sets in the union of
two interval graphs.
"""
from .branching import BranchStats, FirstClique, first_clique, solve_branch
from .color_coding import CcConfig, recolor, solve_cc, trials_needed
from .dp import Solution, decide, solve_dp_gamma, solve_dp_q
from .exceptions import InstanceFormatError, LimitExceededError, PreconditionError
from .generators import GenParams, gen_cisl, gen_two_union, reduce_sat3
from .graph import ColoredIntervalGraph, TwoUnionInstance, build_live_index, stats, two_union_to_cisl
from .intervals import CompactRep, IntervalSet, compactify, maximal_cliques
from .oracle import Cnf3, brute_max_cis, brute_two_union, sat3_satisfiable
from .reductions import (KernelOutcome, KernelVariant, color_pack_reduce, greedy_maximal_cis,
                         kernelize_proper, pareto_survivors_4d, signature_reduce, solve_cluster_cluster)

__version__ = "0.1.0"
