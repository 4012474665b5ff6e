import pytest
from hypothesis import given, strategies as st

from maxpat.domains import (
    DIGRAPH, GRAPH, ITEMSET, SEQUENCE,
    BOUNDED_DEGREE, DAG, DIRECTED, GENERAL, TREE,
    GraphClass, Itemset, LabelledGraph, Sequence,
    canonical_key, is_acyclic, is_connected, label_set, pattern_domain,
    pattern_leq, pattern_lt, pattern_size, undirected_degrees,
    validate_class,
)
from maxpat.errors import DomainMismatchError, PatternError

ints = st.integers(min_value=1, max_value=9)
int_sets = st.frozensets(ints, max_size=5)


def test_itemset_canonicalizes():
    assert Itemset([3, 1, 2, 1]).items == (1, 2, 3)
    assert Itemset([]).items == ()
    assert Itemset({(2, 5), (1, 1)}).items == ((1, 1), (2, 5))


def test_itemset_as_set():
    assert Itemset([2, 1]).as_set() == {1, 2}


@pytest.mark.parametrize("bad", [0, -1, True, "x", 1.5, (1,), (1, 2, 3),
                                 (0, 1), (1, "a")])
def test_bad_labels_rejected(bad):
    with pytest.raises(PatternError):
        Itemset([bad])


def test_itemset_rejects_mixed_kinds():
    with pytest.raises(PatternError):
        Itemset([1, (1, 2)])


def test_sequence_rejects_repeats():
    with pytest.raises(PatternError):
        Sequence([1, 2, 1])


def test_sequence_keeps_order():
    assert Sequence([3, 1, 2]).events == (3, 1, 2)


def test_graph_rejects_empty():
    with pytest.raises(PatternError):
        LabelledGraph(frozenset(), frozenset())


def test_graph_rejects_self_loop():
    with pytest.raises(PatternError):
        LabelledGraph(frozenset({1}), frozenset({(1, 1)}))


def test_graph_rejects_dangling_edge():
    with pytest.raises(PatternError):
        LabelledGraph(frozenset({1, 2}), frozenset({(1, 3)}))


def test_undirected_edges_normalized():
    g = LabelledGraph(frozenset({1, 2}), frozenset({(2, 1)}))
    assert g.edges == frozenset({(1, 2)})


def test_directed_keeps_orientation():
    g = LabelledGraph(frozenset({1, 2}), frozenset({(2, 1)}), directed=True)
    assert g.edges == frozenset({(2, 1)})
    # an opposing pair is two distinct arcs
    g2 = LabelledGraph(frozenset({1, 2}), frozenset({(1, 2), (2, 1)}),
                       directed=True)
    assert len(g2.edges) == 2


def test_connectivity_and_degrees():
    g = LabelledGraph(frozenset({1, 2, 3}), frozenset({(1, 2)}))
    assert not is_connected(g)
    path = LabelledGraph(frozenset({1, 2, 3}), frozenset({(1, 2), (2, 3)}))
    assert is_connected(path)
    assert undirected_degrees(path) == {1: 1, 2: 2, 3: 1}


def test_acyclicity():
    dag = LabelledGraph(frozenset({1, 2, 3}),
                        frozenset({(1, 2), (2, 3), (1, 3)}), directed=True)
    assert is_acyclic(dag)
    cyc = LabelledGraph(frozenset({1, 2}), frozenset({(1, 2), (2, 1)}),
                        directed=True)
    assert not is_acyclic(cyc)


def test_validate_class():
    star = LabelledGraph(frozenset({1, 2, 4}), frozenset({(1, 4), (2, 4)}))
    assert validate_class(star, GraphClass(TREE))
    assert validate_class(star, GraphClass(BOUNDED_DEGREE, 2))
    assert validate_class(star, GraphClass(GENERAL))
    assert not validate_class(star, GraphClass(DAG))  # not directed
    tri = LabelledGraph(frozenset({1, 2, 3}),
                        frozenset({(1, 2), (1, 3), (2, 3)}))
    assert not validate_class(tri, GraphClass(TREE))
    assert validate_class(tri, GraphClass(BOUNDED_DEGREE, 2))
    dag = LabelledGraph(frozenset({1, 2}), frozenset({(1, 2)}), directed=True)
    assert validate_class(dag, GraphClass(DAG))
    assert validate_class(dag, GraphClass(DIRECTED))
    assert not validate_class(dag, GraphClass(GENERAL))  # wrong directedness
    disc = LabelledGraph(frozenset({1, 2, 3}), frozenset({(1, 2)}))
    assert not validate_class(disc, GraphClass(GENERAL))


def test_graph_class_str():
    assert str(GraphClass(BOUNDED_DEGREE, 3)) == "bdg:3"
    assert str(GraphClass(TREE)) == "tree"


def test_pattern_domain():
    assert pattern_domain(Itemset([1])) == ITEMSET
    assert pattern_domain(Sequence([1])) == SEQUENCE
    g = LabelledGraph(frozenset({1}), frozenset())
    assert pattern_domain(g) == GRAPH
    d = LabelledGraph(frozenset({1}), frozenset(), directed=True)
    assert pattern_domain(d) == DIGRAPH


def test_leq_semantics():
    assert pattern_leq(Itemset([1]), Itemset([1, 2]))
    assert not pattern_leq(Itemset([3]), Itemset([1, 2]))
    assert pattern_leq(Sequence([1, 3]), Sequence([1, 2, 3]))
    assert not pattern_leq(Sequence([3, 1]), Sequence([1, 2, 3]))
    sub = LabelledGraph(frozenset({1, 2}), frozenset({(1, 2)}))
    sup = LabelledGraph(frozenset({1, 2, 3}), frozenset({(1, 2), (2, 3)}))
    assert pattern_leq(sub, sup)
    assert not pattern_leq(sup, sub)
    # vertex-only containment counts too
    assert pattern_leq(LabelledGraph(frozenset({3}), frozenset()), sup)


def test_leq_across_domains_raises():
    with pytest.raises(DomainMismatchError):
        pattern_leq(Itemset([1]), Sequence([1]))
    g = LabelledGraph(frozenset({1}), frozenset())
    d = LabelledGraph(frozenset({1}), frozenset(), directed=True)
    with pytest.raises(DomainMismatchError):
        pattern_leq(g, d)


def test_pattern_lt():
    assert pattern_lt(Itemset([1]), Itemset([1, 2]))
    assert not pattern_lt(Itemset([1]), Itemset([1]))


def test_sizes_and_labels():
    assert pattern_size(Itemset([1, 2])) == 2
    assert pattern_size(Sequence([])) == 0
    g = LabelledGraph(frozenset({1, 2}), frozenset({(1, 2)}))
    assert pattern_size(g) == 3
    assert label_set(Itemset([(1, 2), (2, 3)])) == {1, 2, 3}
    assert label_set(g) == {1, 2}


def test_canonical_key_sorts_itemsets():
    pats = [Itemset([2]), Itemset([1, 2]), Itemset([1])]
    ordered = sorted(pats, key=canonical_key)
    assert [p.items for p in ordered] == [(1,), (1, 2), (2,)]


# containment must be a partial order on every domain

@given(int_sets, int_sets)
def test_itemset_leq_antisymmetric(a, b):
    p, q = Itemset(a), Itemset(b)
    if pattern_leq(p, q) and pattern_leq(q, p):
        assert p == q


@given(int_sets, int_sets, int_sets)
def test_itemset_leq_transitive(a, b, c):
    p, q, r = Itemset(a), Itemset(b), Itemset(c)
    if pattern_leq(p, q) and pattern_leq(q, r):
        assert pattern_leq(p, r)


seq_events = st.lists(ints, unique=True, max_size=5)


@given(seq_events, seq_events)
def test_sequence_leq_antisymmetric(a, b):
    p, q = Sequence(a), Sequence(b)
    assert pattern_leq(p, p)
    if pattern_leq(p, q) and pattern_leq(q, p):
        assert p == q


@given(seq_events, seq_events, seq_events)
def test_sequence_leq_transitive(a, b, c):
    p, q, r = Sequence(a), Sequence(b), Sequence(c)
    if pattern_leq(p, q) and pattern_leq(q, r):
        assert pattern_leq(p, r)
