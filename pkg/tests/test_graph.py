import numpy as np
import pytest
from hypothesis import given, settings

from jisolve.graph import (ColoredIntervalGraph, TwoUnionInstance, build_live_index, first_violation, stats,
                           two_union_to_cisl)
from jisolve.oracle import brute_max_cis, brute_two_union

from conftest import cisl_graphs


def naive_live(g, p):
    """Colors with an occurrence starting at or before p and one at or after p."""
    out = set()
    for col in range(1, g.gamma + 1):
        starts = [g.rep.starts[v] for v in range(g.n) if col in g.colors(v)]
        if min(starts) <= p <= max(starts):
            out.add(col)
    return out


class TestColoredIntervalGraph:
    def test_renumbers_colors(self):
        g = ColoredIntervalGraph.from_lists([(1, 1), (2, 2)], [[7], [3, 7]])
        assert g.gamma == 2
        assert g.color_lists() == [(2,), (1, 2)]
        assert g.color_labels.tolist() == [3, 7]

    def test_rejects_empty_list(self):
        with pytest.raises(ValueError, match="nonempty"):
            ColoredIntervalGraph.from_lists([(1, 1)], [[]])

    def test_rejects_negative_weight(self):
        with pytest.raises(ValueError):
            ColoredIntervalGraph.from_lists([(1, 1)], [[1]], [-1])

    def test_dedups_lists(self):
        g = ColoredIntervalGraph.from_lists([(1, 1)], [[2, 1, 2]])
        assert g.colors(0) == (1, 2)

    def test_induced_keeps_colors_and_weights(self, e1):
        sub = e1.induced([0, 2])
        assert sub.n == 2 and sub.c == 2
        assert sub.color_lists() == [(1,), (2,)]


class TestTwoUnion:
    def test_mismatch(self):
        with pytest.raises(ValueError):
            TwoUnionInstance.from_pairs([(1, 1)], [])

    def test_translation_auto_picks_smaller_side(self):
        t = TwoUnionInstance.from_pairs([(1, 1), (2, 2)], [(1, 2), (2, 2)])
        # the second side compacts to a single clique, so it becomes the color side
        g = two_union_to_cisl(t)
        assert g.rep.pairs() == [(1, 1), (2, 2)]
        assert g.color_lists() == [(1,), (1,)]
        assert brute_max_cis(g).value == 1 == brute_two_union(t).value

    def test_translation_single_vertex(self):
        g = two_union_to_cisl(TwoUnionInstance.from_pairs([(1, 1)], [(1, 1)]))
        assert g.color_lists() == [(1,)] and brute_max_cis(g).value == 1

    def test_translation_disjoint(self):
        g = two_union_to_cisl(TwoUnionInstance.from_pairs([(1, 1), (2, 2)], [(1, 1), (2, 2)]))
        assert g.color_lists() == [(1,), (2,)]
        assert first_violation(g, [0, 1]) is None

    def test_translation_sound_on_random_instances(self):
        rng = np.random.default_rng(5)
        for _ in range(150):
            n = int(rng.integers(1, 11))
            p1 = [tuple(sorted(rng.integers(1, 7, size=2))) for _ in range(n)]
            p2 = [tuple(sorted(rng.integers(1, 7, size=2))) for _ in range(n)]
            t = TwoUnionInstance.from_pairs(p1, p2)
            for side in ("auto", True, False):
                g = two_union_to_cisl(t, side)
                sol = brute_max_cis(g)
                assert sol.value == brute_two_union(t).value
                for i, u in enumerate(sol.vertices):
                    for v in sol.vertices[i + 1:]:
                        for rep in (t.rep1, t.rep2):
                            assert rep.ends[u] < rep.starts[v] or rep.ends[v] < rep.starts[u]


class TestLiveIndex:
    def test_windows_and_q(self):
        g = ColoredIntervalGraph.from_lists([(p, p) for p in range(1, 6)], [[1], [2], [2], [3], [1]])
        live = build_live_index(g)
        assert list(zip(live.first.tolist(), live.last.tolist())) == [(1, 5), (2, 3), (4, 4)]
        assert live.Q == 2

    def test_single_color(self):
        assert build_live_index(ColoredIntervalGraph.from_lists([(1, 1)], [[1]])).Q == 1

    def test_all_colors_everywhere(self):
        g = ColoredIntervalGraph.from_lists([(1, 1), (2, 3), (5, 5)], [[1, 2, 3, 4]] * 3)
        assert build_live_index(g).Q == 4

    @settings(max_examples=150, deadline=None)
    @given(cisl_graphs(max_n=10, max_gamma=6))
    def test_q_and_slots_match_naive_liveness(self, g):
        if g.n == 0:
            return
        live = build_live_index(g)
        sizes = []
        for p in range(1, g.c + 1):
            expected = naive_live(g, p)
            assert set(live.live_colors(p)) == expected
            slots = [live.slot[x - 1] for x in expected]
            assert len(set(slots)) == len(slots)
            assert all(s < live.Q for s in slots)
            sizes.append(len(expected))
        assert live.Q == max(sizes)
        assert live.Q <= g.gamma


class TestStats:
    def test_disjoint(self):
        s = stats(ColoredIntervalGraph.from_lists([(1, 1), (2, 2)], [[1], [2]]))
        assert (s.Gamma, s.omega) == (1, 1) and s.Q <= 2

    def test_one_clique(self):
        s = stats(ColoredIntervalGraph.from_lists([(1, 1)] * 3, [[1], [2], [3]]))
        assert (s.Gamma, s.omega) == (3, 3)

    def test_e1(self, e1):
        s = stats(e1)
        assert (s.omega, s.Gamma, s.ell, s.c, s.n, s.gamma) == (2, 2, 1, 2, 3, 2)


def test_first_violation_messages(e1):
    assert first_violation(e1, [0, 2]) is None
    assert first_violation(e1, [0, 1]) == "intervals 0 and 1 intersect"
    assert first_violation(e1, [1, 2]) == "colors of 1 and 2 intersect"
    assert first_violation(e1, [0, 0]) == "duplicate vertex in solution"
    assert first_violation(e1, [5]) == "vertex 5 out of range"
