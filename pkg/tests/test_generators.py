import itertools
from pathlib import Path

import numpy as np
import pytest

from jisolve.generators import GenParams, gen_cisl, gen_cluster_pair, gen_proper_jisp, gen_two_union, reduce_sat3
from jisolve.intervals import is_cluster, is_proper_graph, maximal_cliques
from jisolve.io import serialize_instance
from jisolve.oracle import Cnf3, brute_two_union, sat3_satisfiable

GOLDEN = Path(__file__).parent / "golden"


def check_golden(name, text):
    path = GOLDEN / name
    if not path.exists():
        path.write_text(text)
    assert text == path.read_text()


class TestParams:
    @pytest.mark.parametrize("bad", [dict(n=-1), dict(c=0), dict(gamma=0), dict(color_prob=0.0),
                                     dict(color_prob=1.5), dict(weight_max=0)])
    def test_invalid(self, bad):
        with pytest.raises(ValueError):
            GenParams(**{**dict(n=1, c=1), **bad})


class TestGenCisl:
    def test_empty(self):
        assert gen_cisl(GenParams(n=0, c=3, gamma=2)).n == 0

    def test_golden(self):
        check_golden("gen_cisl_n5_c4_g2_s42.txt", serialize_instance(gen_cisl(GenParams(n=5, c=4, gamma=2, seed=42))))

    def test_c1_is_one_clique(self):
        g = gen_cisl(GenParams(n=6, c=1, gamma=3, seed=1))
        assert g.c == 1 and set(g.rep.pairs()) == {(1, 1)}

    def test_deterministic(self):
        p = GenParams(n=50, c=20, gamma=5, seed=9)
        assert serialize_instance(gen_cisl(p)) == serialize_instance(gen_cisl(p))

    def test_ranges(self):
        g = gen_cisl(GenParams(n=500, c=30, gamma=4, weight_max=7, seed=3))
        assert g.weights.min() >= 1 and g.weights.max() <= 7
        assert np.all(g.list_sizes() >= 1) and g.c <= 30

    def test_full_color_prob(self):
        g = gen_cisl(GenParams(n=20, c=5, gamma=3, color_prob=1.0, seed=0))
        assert all(len(cs) == 3 for cs in g.color_lists())


class TestGenTwoUnion:
    def test_empty(self):
        assert gen_two_union(GenParams(n=0, c=3)).n == 0

    def test_c1(self):
        t = gen_two_union(GenParams(n=5, c=1, seed=2))
        assert brute_two_union(t).value == 1

    def test_golden(self):
        check_golden("gen_2union_n5_c4_s42.txt", serialize_instance(gen_two_union(GenParams(n=5, c=4, seed=42))))


def test_proper_and_cluster_generators():
    for seed in range(30):
        assert is_proper_graph(gen_proper_jisp(30, 5, span=10, seed=seed).rep)
        t = gen_cluster_pair(20, 4, 3, seed)
        assert is_cluster(t.rep1) and is_cluster(t.rep2)


class TestReduceSat:
    def test_single_clause_three_vars(self):
        assert reduce_sat3(Cnf3(3, [(1, 2, 3)])).k == 4

    def test_contradiction(self):
        t = reduce_sat3(Cnf3(1, [(1,), (-1,)]))
        assert t.k == 4 and brute_two_union(t).value < 4

    def test_unit_clause(self):
        t = reduce_sat3(Cnf3(1, [(1,)]))
        assert t.k == 2 and brute_two_union(t).value >= 2

    def test_structure(self):
        f = Cnf3(3, [(1, -2, 3), (-1, 2), (2, -3), (1,)])
        t = reduce_sat3(f)
        cliques1 = maximal_cliques(t.rep1)
        assert all(len(q) <= 2 for q in cliques1)
        assert all(sum(v in q for q in cliques1) <= 2 for v in range(t.n))
        assert is_cluster(t.rep2)
        sizes = [len(q) for q in maximal_cliques(t.rep2)]
        assert max(sizes) <= 3 and len(sizes) == t.k

    def test_small_formulas_exhaustively(self):
        lits = [1, -1, 2, -2]
        clauses = [cl for r in (1, 2) for cl in itertools.combinations(lits, r)
                   if len({abs(x) for x in cl}) == len(cl)]
        for m in (1, 2):
            for cls in itertools.combinations_with_replacement(clauses, m):
                f = Cnf3(2, cls)
                t = reduce_sat3(f)
                assert sat3_satisfiable(f) == (brute_two_union(t).value >= t.k)
