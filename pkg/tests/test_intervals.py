import itertools

import numpy as np
import pytest
from hypothesis import given, settings

from jisolve.intervals import (IntervalSet, compactify, components, coverage, is_cluster, is_proper_graph,
                               is_proper_rep, max_length, maximal_cliques)

from conftest import interval_lists


def intersects(p, q):
    return p[0] <= q[1] and q[0] <= p[1]


def rep_of(pairs):
    return compactify(IntervalSet.from_pairs(pairs))[0]


class TestCompactify:
    def test_three_intervals_two_cliques(self):
        rep, perm = compactify(IntervalSet.from_pairs([(10, 20), (15, 30), (40, 50)]))
        assert rep.c == 2
        assert rep.pairs() == [(1, 1), (1, 1), (2, 2)]
        assert perm.tolist() == [0, 1, 2]

    def test_empty(self):
        rep, perm = compactify(IntervalSet.from_pairs([]))
        assert rep.c == 0 and rep.n == 0 and len(perm) == 0

    def test_chain(self):
        rep, _ = compactify(IntervalSet.from_pairs([(1, 3), (2, 5), (4, 6)]))
        assert rep.c == 2
        assert rep.pairs() == [(1, 1), (1, 2), (2, 2)]

    def test_touching_closed_intervals_still_intersect(self):
        rep = rep_of([(1, 2), (2, 3)])
        assert rep.c == 1

    def test_permutation_matches_sorted_order(self):
        rep, perm = compactify(IntervalSet.from_pairs([(5, 6), (1, 2), (1, 1)]))
        assert rep.sorted_pairs() == sorted(rep.pairs())
        assert [rep.order[p] for p in perm] == [0, 1, 2]

    def test_rejects_reversed_interval(self):
        with pytest.raises(ValueError):
            IntervalSet.from_pairs([(3, 1)])

    @settings(max_examples=300, deadline=None)
    @given(interval_lists(max_n=14, max_coord=20))
    def test_intersections_and_clique_count(self, pairs):
        rep, _ = compactify(IntervalSet.from_pairs(pairs))
        out = rep.pairs()
        for i, j in itertools.combinations(range(len(pairs)), 2):
            assert intersects(pairs[i], pairs[j]) == intersects(out[i], out[j])
        assert rep.c == len(maximal_cliques(pairs))

    @settings(max_examples=200, deadline=None)
    @given(interval_lists(max_n=14, max_coord=20))
    def test_every_position_has_start_and_end(self, pairs):
        rep = rep_of(pairs)
        positions = set(range(1, rep.c + 1))
        assert set(rep.starts.tolist()) == positions
        assert set(rep.ends.tolist()) == positions

    @settings(max_examples=100, deadline=None)
    @given(interval_lists(max_n=14, max_coord=20))
    def test_idempotent(self, pairs):
        rep = rep_of(pairs)
        again = rep_of(rep.pairs())
        assert again.c == rep.c and again.pairs() == rep.pairs()


class TestMaximalCliques:
    def test_path(self):
        assert maximal_cliques([(1, 2), (2, 3), (3, 4)]) == [{0, 1}, {1, 2}]

    def test_single(self):
        assert maximal_cliques([(1, 1)]) == [{0}]

    def test_disjoint(self):
        assert maximal_cliques([(1, 2), (5, 6)]) == [{0}, {1}]


class TestPredicates:
    def test_proper_rep_examples(self):
        assert is_proper_rep(IntervalSet.from_pairs([(1, 1), (2, 2)]))
        assert not is_proper_rep(IntervalSet.from_pairs([(1, 3), (2, 2)]))
        assert is_proper_rep(IntervalSet.from_pairs([(1, 2), (2, 3), (1, 2)]))

    def test_compaction_can_create_containment(self):
        # a proper P3 whose compact form nests the middle interval
        rep = rep_of([(1, 2), (1.5, 3), (2.5, 4)])
        assert rep.pairs() == [(1, 1), (1, 2), (2, 2)]
        assert not is_proper_rep(rep)
        assert is_proper_graph(rep)

    def test_claw_is_not_proper(self):
        rep = rep_of([(1, 9), (1, 2), (4, 5), (8, 9)])
        assert not is_proper_graph(rep)

    @settings(max_examples=200, deadline=None)
    @given(interval_lists(max_n=9, max_coord=12))
    def test_proper_graph_means_claw_free(self, pairs):
        rep = rep_of(pairs)
        out = rep.pairs()
        claw = False
        for center in range(len(out)):
            nbrs = [v for v in range(len(out)) if v != center and intersects(out[v], out[center])]
            for a, b, c in itertools.combinations(nbrs, 3):
                if not (intersects(out[a], out[b]) or intersects(out[a], out[c]) or intersects(out[b], out[c])):
                    claw = True
        assert is_proper_graph(rep) == (not claw)

    def test_cluster_examples(self):
        assert is_cluster(rep_of([(1, 1), (1, 1), (2, 2)]))
        assert not is_cluster(rep_of([(1, 2), (2, 3), (3, 4)]))
        assert is_cluster(rep_of([(1, 1)]))

    def test_components(self):
        rep = rep_of([(1, 2), (2, 3), (5, 6), (9, 9)])
        assert components(rep).tolist() == [0, 0, 1, 2]

    def test_max_length(self):
        assert max_length(IntervalSet.from_pairs([(1, 1), (2, 2)])) == 0
        assert max_length(IntervalSet.from_pairs([(1, 3), (2, 2)])) == 2
        assert max_length(IntervalSet.from_pairs([(1, 1), (1, 2)])) == 1
        with pytest.raises(ValueError, match="empty representation"):
            max_length(rep_of([]))

    def test_coverage(self):
        rep = rep_of([(1, 2), (2, 3), (3, 4)])
        assert coverage(rep)[1:].tolist() == [2, 2]
        assert np.all(coverage(rep_of([(1, 1)]))[1:] == 1)
