from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from maxpat.domains import Itemset, Sequence
from maxpat.errors import DomainMismatchError
from maxpat.feasibility import (
    ALWAYS, CONNECTED_EDGES, And, PreimageExistsAnd,
    connected_edge_itemset, describe, evaluate, item_labels, mergeable,
)
from maxpat.reductions import GraphToEdgeItemset, Identity


def test_always():
    assert evaluate(ALWAYS, Itemset())
    assert evaluate(ALWAYS, Sequence([1, 2]))
    assert ALWAYS.split_stable


def test_connected_examples():
    assert connected_edge_itemset([(1, 2), (2, 3)])
    assert not connected_edge_itemset([(1, 2), (3, 4)])
    assert connected_edge_itemset([(1, 1)])          # bare marker
    assert connected_edge_itemset([(1, 1), (1, 2), (2, 2)])
    assert not connected_edge_itemset([(1, 1), (2, 2)])
    assert not connected_edge_itemset([])            # empty is infeasible


def test_connected_edges_split_stable_flag():
    assert CONNECTED_EDGES.split_stable


def test_connected_edges_wants_pair_items():
    with pytest.raises(DomainMismatchError):
        evaluate(CONNECTED_EDGES, Itemset([1, 2]))
    with pytest.raises(DomainMismatchError):
        evaluate(CONNECTED_EDGES, Sequence([(1, 2)]))


def test_split_stability_is_real_not_just_a_flag():
    """Every feasible set of size m must contain a feasible subset of each
    smaller positive size.  Exhaustive over a 4-label edge universe."""
    pool = [(a, b) for a in range(1, 5) for b in range(a, 5)]
    for m in range(1, 5):
        for items in combinations(pool, m):
            if not connected_edge_itemset(items):
                continue
            for k in range(1, m):
                assert any(connected_edge_itemset(sub)
                           for sub in combinations(items, k)), items


def test_mergeable_soundness_exhaustive():
    """mergeable may only return False when the union really is infeasible;
    checked exhaustively for all pairs of connected sets over 4 labels."""
    pool = [(a, b) for a in range(1, 5) for b in range(a, 5)]
    sets = [frozenset(c) for k in (1, 2) for c in combinations(pool, k)
            if connected_edge_itemset(c)]
    for a in sets:
        for b in sets:
            if not mergeable(Itemset(a), Itemset(b)):
                assert not connected_edge_itemset(a | b), (a, b)


def test_item_labels():
    assert item_labels([(1, 2), (2, 3)]) == {1, 2, 3}
    assert item_labels([(4, 4)]) == {4}
    assert item_labels([7]) == {7}


def test_preimage_predicate():
    r = GraphToEdgeItemset()
    phi = PreimageExistsAnd(r, ALWAYS)
    assert evaluate(phi, Itemset([(1, 1), (2, 2), (1, 2)]))
    assert not evaluate(phi, Itemset([(1, 2)]))       # markers missing
    assert not evaluate(phi, Itemset([(1, 1), (2, 2)]))  # decodes disconnected
    assert not phi.split_stable  # the encoding skips over sizes


def test_preimage_split_stable_via_identity():
    phi = PreimageExistsAnd(Identity("itemset"), ALWAYS)
    assert phi.split_stable
    assert evaluate(phi, Itemset([1, 2]))


def test_preimage_domain_check():
    phi = PreimageExistsAnd(GraphToEdgeItemset(), ALWAYS)
    with pytest.raises(DomainMismatchError):
        evaluate(phi, Sequence([1]))


def test_and_combination():
    phi = And((CONNECTED_EDGES, PreimageExistsAnd(GraphToEdgeItemset(), ALWAYS)))
    assert evaluate(phi, Itemset([(1, 1), (2, 2), (1, 2)]))
    assert not evaluate(phi, Itemset([(1, 1), (2, 2)]))
    assert not phi.split_stable


def test_prune_proxy_algebra():
    assert ALWAYS.prune_proxy is None
    assert CONNECTED_EDGES.prune_proxy is None
    bare = PreimageExistsAnd(GraphToEdgeItemset(), ALWAYS)
    assert bare.prune_proxy is CONNECTED_EDGES
    assert PreimageExistsAnd(Identity("itemset"), ALWAYS).prune_proxy is None
    # a split-stable conjunct is its own proxy for the whole conjunction
    assert And((CONNECTED_EDGES, bare)).prune_proxy is CONNECTED_EDGES
    assert And((bare,)).prune_proxy is CONNECTED_EDGES


def test_prune_proxy_encloses_the_decodable_family():
    """Everything the preimage predicate accepts must pass the proxy, or
    pruning with it would be unsound."""
    phi = PreimageExistsAnd(GraphToEdgeItemset(), ALWAYS)
    pool = [(1, 1), (2, 2), (3, 3), (1, 2), (2, 3), (1, 3)]
    for k in range(1, len(pool) + 1):
        for sub in combinations(pool, k):
            p = Itemset(sub)
            if evaluate(phi, p):
                assert evaluate(CONNECTED_EDGES, p)


def test_describe():
    assert describe(ALWAYS) == "always"
    assert describe(CONNECTED_EDGES) == "connected-edges"
    phi = PreimageExistsAnd(GraphToEdgeItemset(), ALWAYS)
    assert describe(phi) == "preimage(g2fis)"
    assert "connected-edges" in describe(And((CONNECTED_EDGES, phi)))


@given(st.frozensets(st.tuples(st.integers(1, 5), st.integers(1, 5)),
                     min_size=1, max_size=4))
def test_connectivity_matches_component_count(items):
    items = frozenset(tuple(sorted(t)) for t in items)
    labels = item_labels(items)
    # independent union-find over the pair labels
    parent = {x: x for x in labels}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in items:
        parent[find(a)] = find(b)
    n_comp = len({find(x) for x in labels})
    assert connected_edge_itemset(items) == (n_comp == 1)
