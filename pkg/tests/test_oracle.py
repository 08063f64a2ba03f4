import itertools

import pytest

from jisolve.exceptions import LimitExceededError
from jisolve.graph import ColoredIntervalGraph, TwoUnionInstance
from jisolve.oracle import Cnf3, brute_max_cis, brute_pareto, brute_two_union, sat3_satisfiable


def test_brute_cis_e1(e1):
    sol = brute_max_cis(e1)
    assert sol.value == 2 and sol.vertices == (0, 2)


def test_brute_cis_trivial():
    assert brute_max_cis(ColoredIntervalGraph.from_lists([], [])).value == 0
    assert brute_max_cis(ColoredIntervalGraph.from_lists([(1, 1)], [[1]], [7])).value == 7


def test_brute_cis_tie_break_is_lexicographic():
    g = ColoredIntervalGraph.from_lists([(1, 1), (1, 1), (2, 2)], [[1], [2], [3]])
    assert brute_max_cis(g).vertices == (0, 2)


def test_brute_limit():
    g = ColoredIntervalGraph.from_lists([(i, i) for i in range(1, 26)], [[1]] * 25)
    with pytest.raises(LimitExceededError):
        brute_max_cis(g)


def test_brute_two_union():
    disjoint = TwoUnionInstance.from_pairs([(1, 1), (2, 2), (3, 3)], [(1, 1), (2, 2), (3, 3)])
    assert brute_two_union(disjoint).value == 3
    cliques = TwoUnionInstance.from_pairs([(1, 1)] * 3, [(1, 1)] * 3)
    assert brute_two_union(cliques).value == 1
    # first graph cliques {a,b},{c}; second {a},{b,c}
    cluster = TwoUnionInstance.from_pairs([(1, 1), (1, 1), (2, 2)], [(1, 1), (2, 2), (2, 2)])
    assert brute_two_union(cluster).value == 2


def test_brute_pareto():
    assert brute_pareto([(0, 0, 0, 0), (1, 1, 1, 1)]) == [1]
    assert brute_pareto([(3, 1, 4, 1)]) == [0]
    assert brute_pareto([(2, 2, 2, 2), (2, 2, 2, 2)]) == [0]
    assert brute_pareto([(1, 0, 0, 0), (0, 1, 0, 0)]) == [0, 1]


def test_sat_examples():
    assert sat3_satisfiable(Cnf3(1, [(1,)]))
    assert not sat3_satisfiable(Cnf3(1, [(1,), (-1,)]))
    assert not sat3_satisfiable(Cnf3(2, [(1, 2), (-1, 2), (1, -2), (-1, -2)]))


def test_cnf_validation():
    with pytest.raises(ValueError):
        Cnf3(2, [(1, -1)])
    with pytest.raises(ValueError):
        Cnf3(1, [(2,)])
    with pytest.raises(ValueError):
        Cnf3(4, [(1, 2, 3, 4)])
    with pytest.raises(ValueError):
        Cnf3(1, [()])
    with pytest.raises(LimitExceededError):
        sat3_satisfiable(Cnf3(21, [(1,)]))


def test_oracles_agree_on_tiny_cases():
    # the two brute forces must agree through the obvious JISP <-> 2-union view
    for pairs in itertools.product([(1, 1), (1, 2), (2, 2), (2, 3)], repeat=3):
        g = ColoredIntervalGraph.from_lists(list(pairs), [[1], [2], [1]])
        t = TwoUnionInstance.from_pairs(list(pairs), [(1, 1), (2, 2), (1, 1)])
        assert brute_max_cis(g).value == brute_two_union(t).value
