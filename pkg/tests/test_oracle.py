import pytest

from maxpat.core import graph_db, itemset_db, sequence_db, support
from maxpat.domains import (
    Itemset, LabelledGraph, Sequence, is_connected, pattern_leq,
)
from maxpat.errors import OracleGuardError
from maxpat.feasibility import ALWAYS, CONNECTED_EDGES, evaluate
from maxpat.oracle import (
    GUARD, enumerate_patterns, oracle_all_feasible_frequent, oracle_max,
)


def graph(vs, es, directed=False):
    return LabelledGraph(frozenset(vs), frozenset(es), directed=directed)


def test_enumerate_itemsets_is_the_union_of_powersets():
    db = itemset_db([{1, 2}, {2, 3}])
    pats = enumerate_patterns(db)
    assert Itemset() in pats
    assert Itemset({1, 2}) in pats
    assert Itemset({1, 3}) not in pats  # not inside any single transaction
    assert len(pats) == len(set(pats))


def test_enumerate_sequences_are_subsequences():
    db = sequence_db([(1, 2, 3)])
    pats = enumerate_patterns(db)
    assert Sequence([1, 3]) in pats
    assert Sequence([3, 1]) not in pats
    assert Sequence([]) in pats


def test_enumerate_graphs_connected_only():
    p4 = graph({1, 2, 3, 4}, {(1, 2), (2, 3), (3, 4)})
    db = graph_db([p4])
    pats = enumerate_patterns(db)
    assert all(is_connected(g) for g in pats)
    # single vertices count as patterns
    assert graph({2}, set()) in pats
    # the disconnected edge pair {1-2, 3-4} must not appear
    assert not any(len(g.edges) == 2 and (1, 2) in g.edges and (3, 4) in g.edges
                   for g in pats)


def test_every_enumerated_pattern_is_contained_somewhere():
    db = sequence_db([(2, 4), (4, 1, 3)])
    for p in enumerate_patterns(db):
        assert support(p, db) >= 1 or p == Sequence([])


def test_oracle_max_worked_example():
    db = itemset_db([{1, 2}, {1, 2}, {2, 3}])
    assert oracle_max(db, 2, ALWAYS) == (Itemset({1, 2}),)
    assert oracle_max(db, 3, ALWAYS) == (Itemset({2}),)
    assert oracle_max(db, 1, ALWAYS) == (Itemset({1, 2}), Itemset({2, 3}))


def test_oracle_max_sequences_worked_example():
    db = sequence_db([(1, 2, 3), (1, 3, 2)])
    assert oracle_max(db, 2, ALWAYS) == (Sequence([1, 2]), Sequence([1, 3]))


def test_oracle_max_empty_pattern_fallback():
    db = itemset_db([{1}, {2}])
    assert oracle_max(db, 2, ALWAYS) == (Itemset(),)
    # infeasible empty pattern means no answers at all
    db2 = itemset_db([{(1, 2)}, {(3, 4)}])
    assert oracle_max(db2, 2, CONNECTED_EDGES) == ()


def test_oracle_max_is_an_antichain_of_feasible_frequent():
    db = itemset_db([{(1, 2), (2, 3)}, {(1, 2), (3, 4)}, {(2, 3)}])
    for tau in (1, 2, 3):
        out = oracle_max(db, tau, CONNECTED_EDGES)
        for p in out:
            assert evaluate(CONNECTED_EDGES, p)
            assert support(p, db) >= tau
        for p in out:
            for q in out:
                assert p == q or not pattern_leq(p, q)


def test_oracle_all_feasible_frequent_counts():
    db = itemset_db([{(1, 2), (2, 3)}, {(1, 2), (2, 3)}])
    by_size = oracle_all_feasible_frequent(db, 2, CONNECTED_EDGES)
    # size 1: both single edges frequent and trivially connected
    assert by_size[1] == (2, 2)
    # size 2: the full pair, connected through label 2
    assert by_size[2] == (1, 1)


def test_guard_trips_on_wide_universe():
    db = itemset_db([set(range(1, GUARD + 2))])
    with pytest.raises(OracleGuardError):
        enumerate_patterns(db)


def test_guard_trips_on_big_transaction():
    spine = list(range(1, 11))
    edges = {(a, a + 1) for a in spine[:-1]}
    g = graph(set(spine), edges)  # size 10 + 9 = 19 > 16
    with pytest.raises(OracleGuardError):
        enumerate_patterns(graph_db([g]))
