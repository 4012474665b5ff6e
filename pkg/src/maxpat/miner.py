"""Levelwise mining of maximal feasible frequent patterns.

The itemset miner is a classic candidate-generate-and-count loop with
bitset support counting.  Feasibility is folded in one of two ways:

* split-stable predicates prune during the climb: only feasible frequent
  sets survive a level and seed the next one, which can only shrink the
  per-level candidate counts relative to an unconstrained run;
* everything else runs frequency-only and applies the predicate as a
  post-filter before maximality extraction, which is always sound because
  the frequent sets are downward-closed and fully enumerated.

Candidates at level k are unions of two surviving (k-1)-sets sharing k-2
items.  Pairs are found by bucketing each survivor under its (k-2)-subsets,
so a union is attempted once per shared subset and deduplicated.  The
lexicographic prefix join familiar from unconstrained mining would be
incomplete here: the two connected (k-1)-subsets that witness a connected
k-set need not share a prefix (a three-edge path is the union of its two
overlapping two-edge halves, which differ in their first item).  For the
connectivity predicate a pair is skipped when the label sets are disjoint,
which is exactly the cheap merge test that makes the union disconnected.

Other domains are mined by encoding into itemsets through a reduction and
lifting the results back; the empty itemset / sequence, which some chains
cannot represent, is reported directly at the source level when nothing
else is frequent.
"""

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from . import _kernels
from .core import Database, check_tau
from .domains import (
    DIGRAPH, GRAPH, ITEMSET, SEQUENCE,
    Itemset, Sequence, canonical_key,
)
from .errors import DomainMismatchError, ExtendError
from .feasibility import ALWAYS, describe, evaluate, item_labels
from .reductions import (
    Composed, GraphToEdgeItemset, Reduction, SequenceToDag,
    lift_results, reduce_database,
)

MODES = ("auto", "levelwise", "postfilter")


@dataclass(frozen=True)
class LevelStats:
    """Counts for one level of the climb; feasible_frequent <= frequent <=
    candidates by construction."""

    level: int
    candidates: int
    frequent: int
    feasible_frequent: int


@dataclass(frozen=True)
class MiningResult:
    maximal: tuple
    stats: tuple
    tau: int
    phi: str


def _pack(sets, index, n_bits):
    return _kernels.pack_rows([[index[x] for x in s] for s in sets], n_bits)


def _generate(survivors, labels_of, merge_phi, k):
    """Level-k candidates: unions of survivor pairs sharing k-2 items."""
    buckets = {}
    for i, s in enumerate(survivors):
        for x in s:
            buckets.setdefault(s - {x}, []).append((x, i))
    out = set()
    for shared, entries in buckets.items():
        if len(entries) < 2:
            continue
        for (xa, ia), (xb, ib) in combinations(entries, 2):
            if not merge_phi.merge_hint(labels_of[ia], labels_of[ib]):
                continue
            out.add(shared | {xa, xb})
    return sorted(out, key=lambda s: tuple(sorted(s)))


def _maximal_among(collected, index, n_bits):
    """Drop every set with a strict superset in the collection.  Works size
    bucket by size bucket, largest first, against the packed rows of all
    strictly larger sets."""
    by_size = {}
    for s in collected:
        by_size.setdefault(len(s), []).append(s)
    maximal = []
    bigger = np.zeros((0, max(1, (n_bits + 63) // 64)), dtype=np.uint64)
    for size in sorted(by_size, reverse=True):
        rows = sorted(by_size[size], key=lambda s: tuple(sorted(s)))
        words = _pack(rows, index, n_bits)
        if bigger.shape[0]:
            hit = (bigger[None, :, :] & words[:, None, :]) == words[:, None, :]
            covered = hit.all(axis=2).any(axis=1)
        else:
            covered = np.zeros(len(rows), dtype=bool)
        maximal.extend(s for s, c in zip(rows, covered) if not c)
        bigger = np.vstack([bigger, words])
    return maximal


def mine_max_ffis(db: Database, tau: int, phi=ALWAYS, mode: str = "auto",
                  threads: int | None = None) -> MiningResult:
    """Mine an itemset database for its maximal feasible frequent itemsets.

    ``mode`` selects the feasibility strategy: "auto" prunes levelwise when
    the predicate declares itself split-stable and post-filters otherwise;
    the explicit modes exist so the two strategies can be compared.  Forcing
    "levelwise" on a predicate that does not claim split-stability is
    refused, since the climb could then miss feasible sets.
    """
    check_tau(tau)
    if db.domain != ITEMSET:
        raise DomainMismatchError(
            f"the levelwise miner works on itemset databases, got {db.domain}")
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    if mode == "levelwise" and not phi.split_stable:
        raise ValueError(
            "levelwise pruning requires a split-stable predicate; "
            "use mode='postfilter'")
    prune = phi.split_stable if mode == "auto" else (mode == "levelwise")
    # auto mode with a non-stable predicate may still trim the climb with a
    # split-stable family known to enclose it, keeping the exact predicate
    # for the post-filter; the explicit postfilter mode stays frequency-only
    proxy = phi.prune_proxy if mode == "auto" and not prune else None
    if threads is not None:
        _kernels.set_threads(threads)

    items = sorted({x for t in db.transactions for x in t.items})
    index = {x: i for i, x in enumerate(items)}
    n_bits = len(items)
    txn_words = _pack([t.as_set() for t in db.transactions], index, n_bits)

    # the merge hint is sound in both modes: any feasible set of size >= 2
    # keeps two one-smaller feasible subsets (drop a marker or a leaf/cycle
    # edge), so a climb through feasible sets never needs a pruned join
    merge_phi = proxy if proxy is not None else phi
    stats = []
    collected = []
    current = [frozenset({x}) for x in items]
    level = 1
    while current:
        counts = _kernels.count_supports(txn_words, _pack(current, index, n_bits))
        frequent = [s for s, c in zip(current, counts) if int(c) >= tau]
        feasible = [s for s in frequent if evaluate(phi, Itemset(s))]
        stats.append(LevelStats(level, len(current), len(frequent),
                                len(feasible)))
        collected.extend(feasible)
        if prune:
            survivors = feasible
        elif proxy is not None:
            survivors = [s for s in frequent if evaluate(proxy, Itemset(s))]
        else:
            survivors = frequent
        labels_of = [item_labels(s) for s in survivors]
        level += 1
        current = _generate(survivors, labels_of, merge_phi, level)

    if collected:
        maximal = [Itemset(s) for s in _maximal_among(collected, index, n_bits)]
    elif tau <= len(db) and evaluate(phi, Itemset()):
        maximal = [Itemset()]
    else:
        maximal = []
    return MiningResult(tuple(sorted(maximal, key=canonical_key)),
                        tuple(stats), tau, describe(phi))


def mine_via_reduction(r: Reduction, db: Database, tau: int, phi=ALWAYS,
                       mode: str = "auto",
                       threads: int | None = None) -> MiningResult:
    """Reduce, mine with the induced predicate, lift the results back.

    The chain must end in the itemset domain (compose with an edge-itemset
    encoding if it does not).  When the chain cannot represent the empty
    source pattern and nothing else is frequent, the empty pattern is
    reported directly at the source level.
    """
    check_tau(tau)
    if db.domain != r.source_domain:
        raise DomainMismatchError(
            f"{r.id} starts from {r.source_domain}, got a {db.domain} database")
    if r.target_domain != ITEMSET:
        raise DomainMismatchError(
            f"{r.id} ends in {r.target_domain}; compose it down to itemsets "
            f"to mine through it")
    reduced = reduce_database(r, db)
    induced = r.induced_feasibility(phi)
    res = mine_max_ffis(reduced, tau, induced, mode=mode, threads=threads)
    lifted = lift_results(r, res.maximal)
    if not lifted and tau <= len(db):
        empty = _empty_pattern(r.source_domain)
        if empty is not None and evaluate(phi, empty):
            lifted = (empty,)
    return MiningResult(lifted, res.stats, tau, describe(phi))


def _empty_pattern(domain):
    if domain == ITEMSET:
        return Itemset()
    if domain == SEQUENCE:
        return Sequence()
    return None  # graphs have no empty pattern


_SEQ_CHAIN = Composed(SequenceToDag(), GraphToEdgeItemset(directed=True))


def mine(db: Database, tau: int, phi=ALWAYS, mode: str = "auto",
         threads: int | None = None) -> MiningResult:
    """Mine any supported domain: itemsets directly, graphs through the
    edge-itemset encoding, sequences through the order-dag chain."""
    check_tau(tau)
    if db.domain == ITEMSET:
        return mine_max_ffis(db, tau, phi, mode=mode, threads=threads)
    if db.domain == GRAPH:
        return mine_via_reduction(GraphToEdgeItemset(directed=False), db, tau,
                                  phi, mode=mode, threads=threads)
    if db.domain == DIGRAPH:
        return mine_via_reduction(GraphToEdgeItemset(directed=True), db, tau,
                                  phi, mode=mode, threads=threads)
    assert db.domain == SEQUENCE
    nonempty = [t for t in db.transactions if len(t)]
    if len(nonempty) == len(db.transactions):
        return mine_via_reduction(_SEQ_CHAIN, db, tau, phi, mode=mode,
                                  threads=threads)
    # empty transactions cannot pass through the order-dag chain; they only
    # ever support the empty sequence, so mine the rest and patch it in
    res = mine_via_reduction(_SEQ_CHAIN, Database(SEQUENCE, tuple(nonempty)),
                             tau, phi, mode=mode, threads=threads)
    maximal = res.maximal
    if not maximal and tau <= len(db) and evaluate(phi, Sequence()):
        maximal = (Sequence(),)
    return MiningResult(maximal, res.stats, tau, res.phi)


def count_maximal(db: Database, tau: int, phi=ALWAYS, mode: str = "auto",
                  threads: int | None = None) -> int:
    return len(mine(db, tau, phi, mode=mode, threads=threads).maximal)


def extend(db: Database, tau: int, phi, known, mode: str = "auto",
           threads: int | None = None):
    """The canonically smallest maximal pattern outside ``known``, or None
    once ``known`` covers everything.  ``known`` must consist of maximal
    patterns of this instance; anything else is the caller holding the API
    wrong and raises."""
    result = mine(db, tau, phi, mode=mode, threads=threads)
    maximal = set(result.maximal)
    known = set(known)
    bad = known - maximal
    if bad:
        sample = min(bad, key=canonical_key)
        raise ExtendError(f"known set contains a non-maximal pattern: {sample!r}")
    rest = sorted(maximal - known, key=canonical_key)
    return rest[0] if rest else None


def extendible(db: Database, tau: int, phi, known, mode: str = "auto",
               threads: int | None = None) -> bool:
    return extend(db, tau, phi, known, mode=mode, threads=threads) is not None


def extendible_k(db: Database, tau: int, phi, known, k: int,
                 mode: str = "auto", threads: int | None = None) -> bool:
    """Bounded variant: only meaningful while fewer than ``k`` maximal
    patterns are known."""
    known = tuple(known)
    if len(known) >= k:
        raise ExtendError(f"extendible_k needs |known| < k, got {len(known)} >= {k}")
    return extendible(db, tau, phi, known, mode=mode, threads=threads)
