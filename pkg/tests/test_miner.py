import random

import pytest
from hypothesis import given, settings, strategies as st

from maxpat.core import graph_db, itemset_db, sequence_db, support
from maxpat.domains import Itemset, LabelledGraph, Sequence, pattern_leq
from maxpat.errors import DomainMismatchError, ExtendError
from maxpat.feasibility import (
    ALWAYS, CONNECTED_EDGES, PreimageExistsAnd, evaluate,
)
from maxpat.miner import (
    count_maximal, extend, extendible, extendible_k, mine, mine_max_ffis,
    mine_via_reduction,
)
from maxpat.oracle import oracle_max
from maxpat.reductions import ItemsetToStar, bind_reduction, reduce_database
from maxpat.synth import random_graph_db, random_itemset_db


def test_worked_example_and_level_stats():
    db = itemset_db([{1, 2}, {1, 2}, {2, 3}])
    res = mine(db, 2, ALWAYS)
    assert res.maximal == (Itemset({1, 2}),)
    assert [(s.level, s.candidates, s.frequent, s.feasible_frequent)
            for s in res.stats] == [(1, 3, 2, 2), (2, 1, 1, 1)]
    assert res.tau == 2 and res.phi == "always"


def test_tau_above_db_size_yields_nothing():
    db = itemset_db([{1}])
    assert mine(db, 2, ALWAYS).maximal == ()
    assert mine(itemset_db([]), 1, ALWAYS).maximal == ()


def test_empty_itemset_is_the_answer_when_nothing_overlaps():
    db = itemset_db([{1}, {2}])
    assert mine(db, 2, ALWAYS).maximal == (Itemset(),)


def test_levelwise_mode_requires_split_stable():
    db = itemset_db([{(1, 2)}])
    phi = bind_reduction("g2fis", graph_db(
        [LabelledGraph(frozenset({1, 2}), frozenset({(1, 2)}))],
    )).induced_feasibility(ALWAYS)
    with pytest.raises(ValueError):
        mine_max_ffis(db, 1, phi, mode="levelwise")
    with pytest.raises(ValueError):
        mine_max_ffis(db, 1, ALWAYS, mode="sideways")


def test_modes_agree_on_connectivity():
    rng = random.Random(23)
    for _ in range(25):
        db = random_itemset_db(rng, n_labels=5, n_txns=5, max_items=4,
                               pair_items=True)
        for tau in range(1, len(db.transactions) + 1):
            a = mine_max_ffis(db, tau, CONNECTED_EDGES, mode="levelwise")
            b = mine_max_ffis(db, tau, CONNECTED_EDGES, mode="postfilter")
            assert a.maximal == b.maximal
            # same generator in both modes, so the level tables line up too
            assert [(s.level, s.candidates) for s in a.stats] == \
                   [(s.level, s.candidates) for s in b.stats]


def test_auto_mode_proxy_matches_postfilter_on_bare_preimage():
    """A bare preimage predicate has no merge hint of its own, so the
    frequency-only climb really does wander through disconnected sets.  In
    auto mode the connected family that encloses every decodable set trims
    the climb; the output must not change."""
    rng = random.Random(41)
    trimmed_somewhere = False
    for _ in range(12):
        gdb = random_graph_db(rng, n_labels=6, n_txns=5, max_vertices=4)
        r = bind_reduction("g2fis", gdb)
        db = reduce_database(r, gdb)
        phi = PreimageExistsAnd(r, ALWAYS)
        assert phi.prune_proxy is CONNECTED_EDGES
        for tau in range(1, len(db.transactions) + 1):
            a = mine_max_ffis(db, tau, phi, mode="auto")
            b = mine_max_ffis(db, tau, phi, mode="postfilter")
            assert a.maximal == b.maximal
            for sa, sb in zip(a.stats, b.stats):
                assert sa.candidates <= sb.candidates
                if sa.candidates < sb.candidates:
                    trimmed_somewhere = True
    assert trimmed_somewhere


def test_constrained_candidates_never_exceed_unconstrained():
    rng = random.Random(29)
    for _ in range(25):
        db = random_itemset_db(rng, n_labels=5, n_txns=4, max_items=4,
                               pair_items=True)
        for tau in (1, 2):
            con = mine_max_ffis(db, tau, CONNECTED_EDGES).stats
            unc = mine_max_ffis(db, tau, ALWAYS).stats
            for s_con, s_unc in zip(con, unc):
                assert s_con.candidates <= s_unc.candidates


def test_feasibility_is_not_antimonotone_but_mining_still_works():
    """Two disconnected pair-sets whose union is connected: pruning that
    assumed subset-feasibility would lose the union."""
    a = Itemset({(1, 2), (3, 4)})
    b = Itemset({(2, 3), (4, 5)})
    union = Itemset(a.as_set() | b.as_set())
    assert not evaluate(CONNECTED_EDGES, a)
    assert not evaluate(CONNECTED_EDGES, b)
    assert evaluate(CONNECTED_EDGES, union)

    db = itemset_db([union.as_set(), union.as_set()])
    res = mine_max_ffis(db, 2, CONNECTED_EDGES)
    assert res.maximal == (union,)
    assert res.maximal == oracle_max(db, 2, CONNECTED_EDGES)


def test_maximal_is_an_antichain():
    rng = random.Random(31)
    for _ in range(20):
        db = random_itemset_db(rng, n_labels=6, n_txns=5, max_items=5)
        out = mine(db, 2, ALWAYS).maximal
        for p in out:
            for q in out:
                assert p == q or not pattern_leq(p, q)


def test_mine_via_reduction_needs_itemset_target():
    db = itemset_db([{1, 2}])
    with pytest.raises(DomainMismatchError):
        mine_via_reduction(ItemsetToStar(3), db, 1, ALWAYS)


def test_mine_via_reduction_checks_source_domain():
    db = sequence_db([(1, 2)])
    chain = bind_reduction("compose:fis2seq,seq2dag,dirg2fis",
                           itemset_db([{1, 2}]))
    with pytest.raises(DomainMismatchError):
        mine_via_reduction(chain, db, 1, ALWAYS)


def test_sequences_with_empty_transactions():
    db = sequence_db([(), (1, 2), (1, 2)])
    assert mine(db, 2, ALWAYS).maximal == (Sequence([1, 2]),)
    # tau hits the empty transactions only through the empty pattern
    assert mine(db, 3, ALWAYS).maximal == (Sequence(),)
    all_empty = sequence_db([(), ()])
    assert mine(all_empty, 2, ALWAYS).maximal == (Sequence(),)


def test_count_maximal():
    db = itemset_db([{1, 2}, {1, 2}, {2, 3}])
    assert count_maximal(db, 1, ALWAYS) == 2
    assert count_maximal(db, 2, ALWAYS) == 1


def test_extend_walks_canonical_order():
    db = itemset_db([{1, 2}, {1, 2}, {2, 3}])
    known = []
    seen = []
    while True:
        nxt = extend(db, 1, ALWAYS, known)
        if nxt is None:
            break
        seen.append(nxt)
        known.append(nxt)
    assert tuple(seen) == oracle_max(db, 1, ALWAYS)
    assert not extendible(db, 1, ALWAYS, known)


def test_extend_rejects_bogus_known():
    db = itemset_db([{1, 2}, {1, 2}, {2, 3}])
    with pytest.raises(ExtendError):
        extend(db, 2, ALWAYS, [Itemset({3})])


def test_extendible_k_bound():
    db = itemset_db([{1, 2}, {1, 2}, {2, 3}])
    assert extendible_k(db, 1, ALWAYS, [], 1)
    first = extend(db, 1, ALWAYS, [])
    with pytest.raises(ExtendError):
        extendible_k(db, 1, ALWAYS, [first], 1)
    assert extendible_k(db, 1, ALWAYS, [first], 2)


def test_phi_descriptor_is_a_string():
    db = graph_db([LabelledGraph(frozenset({1, 2}), frozenset({(1, 2)}))])
    res = mine(db, 1, ALWAYS)
    assert isinstance(res.phi, str) and res.phi == "always"


def test_repeat_runs_are_identical():
    rng = random.Random(37)
    db = random_itemset_db(rng, n_labels=7, n_txns=6, max_items=5)
    first = mine(db, 2, ALWAYS)
    again = mine(db, 2, ALWAYS)
    assert first.maximal == again.maximal
    assert first.stats == again.stats


@settings(max_examples=50)
@given(st.data())
def test_miner_matches_oracle_on_random_itemsets(data):
    labels = data.draw(st.integers(2, 6))
    txns = data.draw(st.lists(
        st.frozensets(st.integers(1, labels), max_size=4), max_size=5))
    db = itemset_db(txns)
    tau = data.draw(st.integers(1, max(1, len(txns))))
    assert mine(db, tau, ALWAYS).maximal == oracle_max(db, tau, ALWAYS)


@settings(max_examples=50)
@given(st.data())
def test_miner_output_supports_match_definition(data):
    txns = data.draw(st.lists(
        st.frozensets(st.integers(1, 6), max_size=4), min_size=1, max_size=5))
    db = itemset_db(txns)
    tau = data.draw(st.integers(1, len(txns)))
    for p in mine(db, tau, ALWAYS).maximal:
        assert support(p, db) >= tau
