"""Feasibility predicates over patterns.

The algebra is deliberately closed and tiny so that a predicate is always
describable in constant space:

* ``AlwaysTrue``             -- the unconstrained problem
* ``ConnectedEdgeItemset``   -- pair-itemsets whose label graph is connected
* ``PreimageExistsAnd``      -- a reduction preimage exists and the inner
                                predicate holds on it
* ``And``                    -- finite conjunction of the above

Each predicate carries a ``split_stable`` flag.  Split-stability means every
feasible set of size m has feasible subsets of every smaller positive size,
which is what licenses levelwise pruning even though connectivity is not
anti-monotone.  The flag is conservative: conjunctions and preimage forms
only claim it when every constituent does and the reduction declares its
preimage set downward-reachable; otherwise the miner falls back to
post-filtering, which is always sound.
"""

from dataclasses import dataclass

from .domains import Itemset, pattern_domain
from .errors import DomainMismatchError


@dataclass(frozen=True)
class AlwaysTrue:
    split_stable = True
    prune_proxy = None

    def merge_hint(self, labels_a, labels_b):
        return True


@dataclass(frozen=True)
class ConnectedEdgeItemset:
    split_stable = True
    prune_proxy = None

    def merge_hint(self, labels_a, labels_b):
        # the union of two connected edge sets is connected iff their label
        # sets intersect, so disjoint pairs can be skipped wholesale
        return not labels_a.isdisjoint(labels_b)


@dataclass(frozen=True)
class PreimageExistsAnd:
    reduction: object  # any Reduction; duck-typed to avoid an import cycle
    inner: object

    @property
    def split_stable(self):
        return self.inner.split_stable and self.reduction.preimage_closed

    @property
    def prune_proxy(self):
        # a split-stable family enclosing everything with a preimage; the
        # miner may prune the climb with it and post-filter exactly
        return getattr(self.reduction, "image_proxy", None)

    def merge_hint(self, labels_a, labels_b):
        return True


@dataclass(frozen=True)
class And:
    parts: tuple

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))

    @property
    def split_stable(self):
        return all(p.split_stable for p in self.parts)

    @property
    def prune_proxy(self):
        # any one conjunct bounds the conjunction from above; a split-stable
        # conjunct is its own best proxy
        for p in self.parts:
            if p.split_stable:
                return p
            if p.prune_proxy is not None:
                return p.prune_proxy
        return None

    def merge_hint(self, labels_a, labels_b):
        return all(p.merge_hint(labels_a, labels_b) for p in self.parts)


ALWAYS = AlwaysTrue()
CONNECTED_EDGES = ConnectedEdgeItemset()


def connected_edge_itemset(items) -> bool:
    """Connectivity of the graph spelled by pair items.

    Every item (a, b) contributes labels a and b and, when a != b, the edge
    a--b.  The empty itemset is deemed infeasible so that the empty pattern
    never shadows real connected patterns.
    """
    items = tuple(items)
    if not items:
        return False
    labels = set()
    for a, b in items:
        labels.update((a, b))
    adj = {x: set() for x in labels}
    for a, b in items:
        if a != b:
            adj[a].add(b)
            adj[b].add(a)
    start = next(iter(labels))
    seen = {start}
    stack = [start]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(labels)


def item_labels(items) -> frozenset:
    out = set()
    for x in items:
        if isinstance(x, tuple):
            out.update(x)
        else:
            out.add(x)
    return frozenset(out)


def mergeable(a: Itemset, b: Itemset) -> bool:
    """Merge test for the connectivity predicate: the union of two connected
    edge itemsets stays connected exactly when their label sets share an
    element, so only the disjointness of the two label sets is tested."""
    return not item_labels(a).isdisjoint(item_labels(b))


def _require_pair_itemset(p):
    if not isinstance(p, Itemset):
        raise DomainMismatchError(
            f"connectivity feasibility expects an itemset, got {pattern_domain(p)}")
    if p.items and not isinstance(p.items[0], tuple):
        raise DomainMismatchError(
            "connectivity feasibility expects label-pair items")


def evaluate(phi, p) -> bool:
    """Evaluate a feasibility predicate on a pattern of the matching domain."""
    if isinstance(phi, AlwaysTrue):
        return True
    if isinstance(phi, ConnectedEdgeItemset):
        _require_pair_itemset(p)
        return connected_edge_itemset(p.items)
    if isinstance(phi, PreimageExistsAnd):
        if pattern_domain(p) != phi.reduction.target_domain:
            raise DomainMismatchError(
                f"predicate expects {phi.reduction.target_domain} patterns, "
                f"got {pattern_domain(p)}")
        q = phi.reduction.inverse(p)
        return q is not None and evaluate(phi.inner, q)
    if isinstance(phi, And):
        return all(evaluate(part, p) for part in phi.parts)
    raise TypeError(f"not a feasibility predicate: {phi!r}")


def describe(phi) -> str:
    """Render the textual descriptor used in CLI flags and mining results."""
    if isinstance(phi, AlwaysTrue):
        return "always"
    if isinstance(phi, ConnectedEdgeItemset):
        return "connected-edges"
    if isinstance(phi, PreimageExistsAnd):
        if isinstance(phi.inner, AlwaysTrue):
            return f"preimage({phi.reduction.id})"
        return f"preimage({phi.reduction.id}, {describe(phi.inner)})"
    if isinstance(phi, And):
        return "∧".join(describe(part) for part in phi.parts)
    raise TypeError(f"not a feasibility predicate: {phi!r}")
