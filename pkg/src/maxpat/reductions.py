"""Maximality-preserving encodings between pattern domains.

Each reduction is an injective polynomial map on patterns (transactions use
the same map) with three guarantees:

1. images are valid patterns of the target domain,
2. containment is preserved and reflected exactly, so support counts carry
   over unchanged,
3. the inverse is computable and returns None off the image.

Together these make maximality transfer both ways: the maximal feasible
frequent patterns of a reduced database are exactly the images of the
source's maximal feasible frequent patterns, in equal number.

Feasibility travels along a reduction by the preimage construction: a target
pattern is feasible iff it has a preimage and the source predicate accepts
that preimage.  ``induced_feasibility`` builds that predicate; compositions
spell out the full conjunction (target-level feasibility, one-step preimage
with the mid-level predicate, whole-chain preimage with the source
predicate) so each hop stays checkable in isolation.
"""

from dataclasses import dataclass
from itertools import combinations

from .core import Database
from .domains import (
    BOUNDED_DEGREE, DAG, DIGRAPH, GRAPH, ITEMSET, SEQUENCE, TREE,
    GraphClass, Itemset, LabelledGraph, Sequence,
    canonical_key, is_connected, pattern_domain,
)
from .errors import (
    DatabaseError, DomainMismatchError, NoPreimageError, PatternError,
)
from .feasibility import And, CONNECTED_EDGES, PreimageExistsAnd


class Reduction:
    """Base class; concrete reductions are frozen dataclasses below."""

    id = "?"
    source_domain = "?"
    target_domain = "?"
    #: True when the set of target patterns having preimages is itself
    #: split-stable, which lets a preimage predicate keep levelwise pruning.
    preimage_closed = False
    #: narrowest graph class the images are known to land in, if any
    target_class: GraphClass | None = None
    #: a split-stable predicate whose family encloses every target pattern
    #: with a preimage, if one is known; lets the miner prune a climb that
    #: will be post-filtered exactly
    image_proxy = None

    def forward(self, p):
        raise NotImplementedError

    def inverse(self, q):
        raise NotImplementedError

    def induced_feasibility(self, phi_source):
        return PreimageExistsAnd(self, phi_source)

    def _check_source(self, p):
        if pattern_domain(p) != self.source_domain:
            raise DomainMismatchError(
                f"{self.id} maps {self.source_domain} patterns, "
                f"got {pattern_domain(p)}")

    def _check_target(self, q):
        if pattern_domain(q) != self.target_domain:
            raise DomainMismatchError(
                f"{self.id} inverts {self.target_domain} patterns, "
                f"got {pattern_domain(q)}")


@dataclass(frozen=True)
class ItemsetToStar(Reduction):
    """Itemset -> star tree: a fresh root adjacent to one leaf per item.

    The root label must exceed every item label; binding it to
    max(universe) + 1 keeps it fresh even for sparse label sets.  The empty
    itemset maps to the bare root vertex.
    """

    root: int

    id = "fis2tree"
    source_domain = ITEMSET
    target_domain = GRAPH
    target_class = GraphClass(TREE)

    def forward(self, p: Itemset) -> LabelledGraph:
        self._check_source(p)
        for x in p.items:
            if not isinstance(x, int):
                raise PatternError(f"{self.id} needs plain int labels, got {x!r}")
            if x >= self.root:
                raise PatternError(
                    f"item {x} collides with root label {self.root}")
        return LabelledGraph(frozenset(p.items) | {self.root},
                             frozenset((x, self.root) for x in p.items))

    def inverse(self, q: LabelledGraph):
        self._check_target(q)
        if q.vertices == {self.root} and not q.edges:
            return Itemset()
        if self.root not in q.vertices:
            return None
        leaves = q.vertices - {self.root}
        if not all(isinstance(x, int) and x < self.root for x in leaves):
            return None
        if q.edges != frozenset((x, self.root) for x in leaves):
            return None
        return Itemset(leaves)


@dataclass(frozen=True)
class ItemsetToSequence(Reduction):
    """Itemset -> the sequence of its items in ascending order.  A sequence
    inverts iff it is strictly increasing."""

    id = "fis2seq"
    source_domain = ITEMSET
    target_domain = SEQUENCE

    def forward(self, p: Itemset) -> Sequence:
        self._check_source(p)
        return Sequence(p.items)

    def inverse(self, q: Sequence):
        self._check_target(q)
        ev = q.events
        if all(ev[i] < ev[i + 1] for i in range(len(ev) - 1)):
            return Itemset(ev)
        return None


@dataclass(frozen=True)
class GraphToBoundedDegree(Reduction):
    """Undirected graph -> degree-3 graph via one label path per vertex.

    Vertex v becomes an n-vertex path, its i-th stop labelled
    (v-1)*n + i; the edge {u, v} becomes the single cross edge between
    stop v of u's path and stop u of v's path.  A stop then has at most
    two path neighbours and at most one cross neighbour, so the image's
    maximum degree is 3.  ``n`` is fixed per database as the largest
    source label, so every cross position exists.  The arithmetic labels
    keep the images inside the plain-int world, where the edge-itemset
    encoding (and with it the miner) can pick them up unchanged.
    """

    n: int

    id = "g2bdg3"
    source_domain = GRAPH
    target_domain = GRAPH
    target_class = GraphClass(BOUNDED_DEGREE, 3)

    def _stop(self, v, i):
        return (v - 1) * self.n + i

    def _unstop(self, x):
        return (x - 1) // self.n + 1, (x - 1) % self.n + 1

    def forward(self, p: LabelledGraph) -> LabelledGraph:
        self._check_source(p)
        for v in p.vertices:
            if not isinstance(v, int) or v > self.n:
                raise PatternError(
                    f"vertex label {v!r} outside 1..{self.n}")
        vertices = {self._stop(v, i)
                    for v in p.vertices for i in range(1, self.n + 1)}
        edges = {(self._stop(v, i), self._stop(v, i + 1))
                 for v in p.vertices for i in range(1, self.n)}
        for a, b in p.edges:
            edges.add((self._stop(a, b), self._stop(b, a)))
        return LabelledGraph(frozenset(vertices), frozenset(edges))

    def inverse(self, q: LabelledGraph):
        self._check_target(q)
        groups = {}
        for x in q.vertices:
            if not isinstance(x, int) or x > self.n * self.n:
                return None
            a, i = self._unstop(x)
            groups.setdefault(a, set()).add(i)
        full = set(range(1, self.n + 1))
        if any(positions != full for positions in groups.values()):
            return None
        path_edges = set()
        cross = set()
        for e in q.edges:
            a, i = self._unstop(e[0])
            b, j = self._unstop(e[1])
            if a == b and abs(i - j) == 1:
                path_edges.add(e)
            elif a != b and i == b and j == a:
                cross.add((min(a, b), max(a, b)))
            else:
                return None
        want_paths = {(self._stop(a, i), self._stop(a, i + 1))
                      for a in groups for i in range(1, self.n)}
        if path_edges != want_paths:
            return None
        g = LabelledGraph(frozenset(groups), frozenset(cross))
        return g if is_connected(g) else None


@dataclass(frozen=True)
class GraphToEdgeItemset(Reduction):
    """Graph -> itemset of label pairs: one reflexive marker pair (v, v) per
    vertex plus one pair per edge (ordered when the graph is directed).

    Carrying a marker for every vertex, not only for isolated ones, is what
    keeps containment exact in both directions: a single vertex inside a
    larger graph must compare below that graph's image, and a bare edge set
    without its markers must not masquerade as an image.  An itemset inverts
    iff its proper pairs stay within the marker vertices and the decoded
    graph is connected; in particular a marker is feasible only on its own.
    """

    directed: bool = False

    source_domain = GRAPH  # overridden per instance below
    target_domain = ITEMSET
    image_proxy = CONNECTED_EDGES  # decodable itemsets spell connected graphs

    @property
    def id(self):
        return "dirg2fis" if self.directed else "g2fis"

    def __post_init__(self):
        object.__setattr__(self, "source_domain",
                           DIGRAPH if self.directed else GRAPH)

    def forward(self, p: LabelledGraph) -> Itemset:
        self._check_source(p)
        for v in p.vertices:
            if not isinstance(v, int):
                raise PatternError(f"{self.id} needs plain int labels, got {v!r}")
        return Itemset(tuple((v, v) for v in p.vertices) + tuple(p.edges))

    def inverse(self, q: Itemset):
        self._check_target(q)
        if not q.items:
            return None
        markers = set()
        propers = []
        for x in q.items:
            if not isinstance(x, tuple):
                return None
            a, b = x
            if a == b:
                markers.add(a)
            else:
                propers.append(x)
        if not markers:
            return None
        for a, b in propers:
            if a not in markers or b not in markers:
                return None
        g = LabelledGraph(frozenset(markers), frozenset(propers),
                          directed=self.directed)
        return g if is_connected(g) else None

    def induced_feasibility(self, phi_source):
        return And((CONNECTED_EDGES, PreimageExistsAnd(self, phi_source)))


@dataclass(frozen=True)
class SequenceToDag(Reduction):
    """Sequence -> the transitive tournament spelling its order: an edge
    from the i-th event to the j-th for every i < j.  Inverts iff the graph
    is a transitive tournament (exactly one arc per vertex pair, acyclic);
    the empty sequence maps to no graph and is handled at the source level
    by the miner."""

    id = "seq2dag"
    source_domain = SEQUENCE
    target_domain = DIGRAPH
    target_class = GraphClass(DAG)

    def forward(self, p: Sequence) -> LabelledGraph:
        self._check_source(p)
        if not p.events:
            raise PatternError("the empty sequence has no graph image")
        edges = {(a, b) for a, b in combinations(p.events, 2)}
        return LabelledGraph(frozenset(p.events), frozenset(edges),
                             directed=True)

    def inverse(self, q: LabelledGraph):
        self._check_target(q)
        n = len(q.vertices)
        if len(q.edges) != n * (n - 1) // 2:
            return None
        outdeg = {v: 0 for v in q.vertices}
        seen_pairs = set()
        for u, v in q.edges:
            key = (u, v) if u < v else (v, u)
            if key in seen_pairs:
                return None  # both directions present
            seen_pairs.add(key)
            outdeg[u] += 1
        order = sorted(q.vertices, key=lambda v: -outdeg[v])
        if q.edges != frozenset((a, b) for a, b in combinations(order, 2)):
            return None
        return Sequence(order)


@dataclass(frozen=True)
class Identity(Reduction):
    """The do-nothing reduction; mostly useful to exercise composition and
    as the one honest case of a preimage-closed reduction."""

    domain: str

    preimage_closed = True

    @property
    def id(self):
        return f"identity:{self.domain}"

    @property
    def source_domain(self):
        return self.domain

    @property
    def target_domain(self):
        return self.domain

    def forward(self, p):
        self._check_source(p)
        return p

    def inverse(self, q):
        self._check_target(q)
        return q


@dataclass(frozen=True)
class Composed(Reduction):
    """Left-to-right composition of two reductions."""

    first: Reduction
    second: Reduction

    def __post_init__(self):
        if self.first.target_domain != self.second.source_domain:
            raise DomainMismatchError(
                f"cannot compose {self.first.id} ({self.first.target_domain} "
                f"out) with {self.second.id} ({self.second.source_domain} in)")

    @property
    def id(self):
        # flattened so that any chain id parses back through bind_reduction
        def tail(r):
            rid = r.id
            return rid[len("compose:"):] if rid.startswith("compose:") else rid

        return f"compose:{tail(self.first)},{tail(self.second)}"

    @property
    def source_domain(self):
        return self.first.source_domain

    @property
    def target_domain(self):
        return self.second.target_domain

    @property
    def target_class(self):
        return self.second.target_class

    @property
    def preimage_closed(self):
        return self.first.preimage_closed and self.second.preimage_closed

    @property
    def image_proxy(self):
        # chain images are in particular images of the final link
        return self.second.image_proxy

    def forward(self, p):
        return self.second.forward(self.first.forward(p))

    def inverse(self, q):
        mid = self.second.inverse(q)
        if mid is None:
            return None
        return self.first.inverse(mid)

    def induced_feasibility(self, phi_source):
        # the transitivity construction, spelled out: target-level
        # feasibility, the one-hop preimage with the mid-level predicate,
        # and the whole-chain preimage with the source predicate
        phi_mid = self.first.induced_feasibility(phi_source)
        phi_target = self.second.induced_feasibility(phi_mid)
        return And((phi_target,
                    PreimageExistsAnd(self.second, phi_mid),
                    PreimageExistsAnd(self, phi_source)))


@dataclass(frozen=True)
class LiftedReduction:
    """A reduction bundled with a source feasibility predicate; the target
    predicate is the induced one.  Maps are unchanged."""

    base: Reduction
    source_feasibility: object

    @property
    def target_feasibility(self):
        return self.base.induced_feasibility(self.source_feasibility)

    def forward(self, p):
        return self.base.forward(p)

    def inverse(self, q):
        return self.base.inverse(q)


def lift_to_ffbp(r: Reduction, phi_source) -> LiftedReduction:
    return LiftedReduction(r, phi_source)


# ---------------------------------------------------------------------------
# database-level application

def reduce_database(r: Reduction, db: Database) -> Database:
    """Apply ``r`` to every transaction.  A transaction the map rejects
    (wrong labels, empty sequence, ...) raises with its index."""
    if db.domain != r.source_domain:
        raise DomainMismatchError(
            f"{r.id} reduces {r.source_domain} databases, got {db.domain}")
    images = []
    for i, t in enumerate(db.transactions):
        try:
            images.append(r.forward(t))
        except (PatternError, DomainMismatchError) as e:
            raise DatabaseError(f"cannot reduce: {e}", i) from e
    return Database(r.target_domain, tuple(images), r.target_class)


def lift_results(r: Reduction, results) -> tuple:
    """Pull mining results back through ``r``.  Every pattern must invert;
    anything off the image means the caller's pipeline is broken, so that
    raises rather than being dropped silently."""
    out = []
    for q in results:
        p = r.inverse(q)
        if p is None:
            raise NoPreimageError(f"{r.id}: no preimage for {q!r}")
        out.append(p)
    return tuple(sorted(out, key=canonical_key))


# ---------------------------------------------------------------------------
# registry

#: ids accepted on the command line and inside preimage(...) descriptors
REDUCTION_IDS = ("fis2tree", "fis2seq", "g2bdg3", "g2fis", "dirg2fis",
                 "seq2dag")


def _max_int_label(universe, default=0):
    ints = [x for x in universe if isinstance(x, int)]
    return max(ints, default=default)


def bind_reduction(rid: str, db: Database | None = None) -> Reduction:
    """Construct the reduction named ``rid``, fixing any parameters from the
    source database.  ``compose:a,b[,c...]`` folds left to right.

    The star and path-bundle encodings take their fresh-root / path-length
    parameter from the largest label actually present, which keeps them
    collision-free on sparse label sets and matches 1..n universes exactly.
    """
    if rid.startswith("compose:"):
        parts = rid[len("compose:"):].split(",")
        if len(parts) < 2 or not all(parts):
            raise ValueError(f"compose needs at least two ids: {rid!r}")
        r = bind_reduction(parts[0], db)
        for part in parts[1:]:
            if _needs_binding(part) and db is not None:
                nxt = bind_reduction(part, reduce_database(r, db))
            else:
                nxt = bind_reduction(part, None)
            r = Composed(r, nxt)
        return r
    if rid == "fis2tree":
        top = _max_int_label(db.universe) if db is not None else 0
        return ItemsetToStar(root=top + 1)
    if rid == "fis2seq":
        return ItemsetToSequence()
    if rid == "g2bdg3":
        top = _max_int_label(db.universe, default=1) if db is not None else 1
        return GraphToBoundedDegree(n=top)
    if rid == "g2fis":
        return GraphToEdgeItemset(directed=False)
    if rid == "dirg2fis":
        return GraphToEdgeItemset(directed=True)
    if rid == "seq2dag":
        return SequenceToDag()
    raise ValueError(f"unknown reduction id {rid!r}")


def _needs_binding(rid):
    return rid in ("fis2tree", "g2bdg3")
