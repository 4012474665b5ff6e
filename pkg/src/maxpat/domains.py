"""Pattern domains: itemsets, repetition-free sequences and labelled graphs.

All three pattern kinds are immutable and hashable so they can live in sets
and serve as dict keys.  Labels are positive integers; the pair-labelled
universes used by the graph encodings additionally allow (int, int) tuples
as labels.  Within one pattern every label has the same shape.

The containment order is plain inclusion per domain:

* itemsets:   subset of items
* sequences:  subsequence (order preserved, labels distinct)
* graphs:     subgraph (vertex set and edge set inclusion); vertex identity
              is the label itself, so there is no separate isomorphism test
"""

from dataclasses import dataclass, field

from .errors import DomainMismatchError, PatternError

ITEMSET = "itemset"
SEQUENCE = "sequence"
GRAPH = "graph"       # undirected
DIGRAPH = "digraph"   # directed


def _check_label(x):
    if isinstance(x, bool):
        raise PatternError(f"label must be a positive int or label pair, got {x!r}")
    if isinstance(x, int):
        if x < 1:
            raise PatternError(f"labels are 1-based positive ints, got {x}")
        return
    if (isinstance(x, tuple) and len(x) == 2
            and all(isinstance(c, int) and not isinstance(c, bool) and c >= 1
                    for c in x)):
        return
    raise PatternError(f"label must be a positive int or label pair, got {x!r}")


def _label_kind(x):
    return "pair" if isinstance(x, tuple) else "int"


def _canonical_items(items):
    out = set(items)
    for x in out:
        _check_label(x)
    if len({_label_kind(x) for x in out}) > 1:
        raise PatternError("itemset mixes plain labels and label pairs")
    return tuple(sorted(out))


@dataclass(frozen=True, repr=False)
class Itemset:
    """A set of labels in canonical (sorted, duplicate-free) form."""

    items: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "items", _canonical_items(self.items))

    def __len__(self):
        return len(self.items)

    def __iter__(self):
        return iter(self.items)

    def __contains__(self, x):
        return x in self.items

    def as_set(self):
        return frozenset(self.items)

    def __repr__(self):
        return "Itemset(%s)" % ", ".join(map(repr, self.items))


@dataclass(frozen=True, repr=False)
class Sequence:
    """An ordered run of pairwise-distinct labels."""

    events: tuple = ()

    def __post_init__(self):
        events = tuple(self.events)
        for x in events:
            _check_label(x)
        if len(set(events)) != len(events):
            raise PatternError(f"sequence repeats a label: {events}")
        if len({_label_kind(x) for x in events}) > 1:
            raise PatternError("sequence mixes plain labels and label pairs")
        object.__setattr__(self, "events", events)

    def __len__(self):
        return len(self.events)

    def __iter__(self):
        return iter(self.events)

    def __repr__(self):
        return "Sequence(%s)" % ", ".join(map(repr, self.events))


def _normalize_edge(e, directed):
    if not (isinstance(e, tuple) and len(e) == 2):
        raise PatternError(f"edge must be a 2-tuple, got {e!r}")
    u, v = e
    _check_label(u)
    _check_label(v)
    if _label_kind(u) != _label_kind(v):
        raise PatternError(f"edge ({u!r}, {v!r}) mixes label kinds")
    if u == v:
        raise PatternError(f"self-loop on {u!r} is not allowed")
    if not directed and u > v:
        u, v = v, u
    return (u, v)


@dataclass(frozen=True, repr=False)
class LabelledGraph:
    """A graph whose vertices are identified by their (unique) labels.

    Undirected edges are stored smaller-endpoint-first.  The empty graph is
    rejected; a single vertex with no edges is fine.  Connectivity is not
    enforced here because intermediate construction steps may pass through
    disconnected shapes; database validation and the class validators check
    it where the contract requires it.
    """

    vertices: frozenset = field(default_factory=frozenset)
    edges: frozenset = field(default_factory=frozenset)
    directed: bool = False

    def __post_init__(self):
        vertices = frozenset(self.vertices)
        if not vertices:
            raise PatternError("the empty graph is not a pattern")
        for v in vertices:
            _check_label(v)
        if len({_label_kind(v) for v in vertices}) > 1:
            raise PatternError("graph mixes plain labels and label pairs")
        edges = frozenset(_normalize_edge(e, self.directed) for e in self.edges)
        for u, v in edges:
            if u not in vertices or v not in vertices:
                raise PatternError(f"edge ({u!r}, {v!r}) leaves the vertex set")
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", edges)

    def __repr__(self):
        arrow = "->" if self.directed else "--"
        es = ", ".join(f"{u}{arrow}{v}" for u, v in sorted(self.edges))
        vs = ", ".join(map(repr, sorted(self.vertices)))
        return f"LabelledGraph([{vs}], [{es}])"


def is_connected(g: LabelledGraph) -> bool:
    """Connectivity of the undirected view; a single vertex counts."""
    if len(g.vertices) == 1:
        return True
    adj = {v: set() for v in g.vertices}
    for u, v in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    start = next(iter(g.vertices))
    seen = {start}
    stack = [start]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(g.vertices)


def undirected_degrees(g: LabelledGraph):
    deg = {v: 0 for v in g.vertices}
    for u, v in g.edges:
        deg[u] += 1
        deg[v] += 1
    return deg


def is_acyclic(g: LabelledGraph) -> bool:
    """True iff a directed graph has no directed cycle (Kahn's algorithm)."""
    indeg = {v: 0 for v in g.vertices}
    out = {v: [] for v in g.vertices}
    for u, v in g.edges:
        indeg[v] += 1
        out[u].append(v)
    queue = [v for v, d in indeg.items() if d == 0]
    removed = 0
    while queue:
        v = queue.pop()
        removed += 1
        for w in out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return removed == len(g.vertices)


# ---------------------------------------------------------------------------
# graph classes

TREE = "tree"
BOUNDED_DEGREE = "bounded-degree"
GENERAL = "general"
DAG = "dag"
DIRECTED = "directed"


@dataclass(frozen=True)
class GraphClass:
    kind: str
    degree_bound: int | None = None

    def __post_init__(self):
        if self.kind not in (TREE, BOUNDED_DEGREE, GENERAL, DAG, DIRECTED):
            raise ValueError(f"unknown graph class kind {self.kind!r}")
        if self.kind == BOUNDED_DEGREE:
            if not isinstance(self.degree_bound, int) or self.degree_bound < 1:
                raise ValueError("bounded-degree class needs a positive bound")
        elif self.degree_bound is not None:
            raise ValueError(f"{self.kind} takes no degree bound")

    @property
    def directed(self) -> bool:
        return self.kind in (DAG, DIRECTED)

    def __str__(self):
        if self.kind == BOUNDED_DEGREE:
            return f"bdg:{self.degree_bound}"
        return self.kind


def validate_class(g: LabelledGraph, cls: GraphClass) -> bool:
    """Membership test: directedness, connectivity and the class shape."""
    if g.directed != cls.directed:
        return False
    if not is_connected(g):
        return False
    if cls.kind == TREE:
        return len(g.edges) == len(g.vertices) - 1
    if cls.kind == BOUNDED_DEGREE:
        return max(undirected_degrees(g).values()) <= cls.degree_bound
    if cls.kind == DAG:
        return is_acyclic(g)
    return True  # general / directed: connectivity was the only constraint


# ---------------------------------------------------------------------------
# containment orders

def itemset_leq(p: Itemset, q: Itemset) -> bool:
    return p.as_set() <= q.as_set()


def sequence_leq(p: Sequence, q: Sequence) -> bool:
    it = iter(q.events)
    return all(x in it for x in p.events)


def graph_leq(p: LabelledGraph, q: LabelledGraph) -> bool:
    if p.directed != q.directed:
        raise DomainMismatchError(
            "cannot compare a directed graph with an undirected one")
    return p.vertices <= q.vertices and p.edges <= q.edges


def pattern_domain(p) -> str:
    if isinstance(p, Itemset):
        return ITEMSET
    if isinstance(p, Sequence):
        return SEQUENCE
    if isinstance(p, LabelledGraph):
        return DIGRAPH if p.directed else GRAPH
    raise DomainMismatchError(f"not a pattern: {p!r}")


def pattern_leq(p, q) -> bool:
    """Containment in whichever domain both operands share."""
    dp, dq = pattern_domain(p), pattern_domain(q)
    if dp != dq:
        raise DomainMismatchError(f"cannot compare {dp} with {dq}")
    if dp == ITEMSET:
        return itemset_leq(p, q)
    if dp == SEQUENCE:
        return sequence_leq(p, q)
    return graph_leq(p, q)


def pattern_lt(p, q) -> bool:
    return p != q and pattern_leq(p, q)


def canonical_key(p):
    """Sort key giving the canonical output order within one domain:
    itemsets by item list, sequences by event list, graphs by sorted edge
    list then sorted vertex list."""
    if isinstance(p, Itemset):
        return p.items
    if isinstance(p, Sequence):
        return p.events
    if isinstance(p, LabelledGraph):
        return (tuple(sorted(p.edges)), tuple(sorted(p.vertices)))
    raise DomainMismatchError(f"not a pattern: {p!r}")


def label_set(p) -> frozenset:
    """The plain labels a pattern touches.  Pair items contribute both of
    their components, which is what the connectivity merge test needs."""
    if isinstance(p, Itemset):
        out = set()
        for x in p.items:
            if isinstance(x, tuple):
                out.update(x)
            else:
                out.add(x)
        return frozenset(out)
    if isinstance(p, Sequence):
        return frozenset(p.events)
    if isinstance(p, LabelledGraph):
        return frozenset(p.vertices)
    raise DomainMismatchError(f"not a pattern: {p!r}")


def element_kind(p):
    """'int' or 'pair' judged from the pattern's own elements; None when the
    pattern is empty.  Databases must not mix the two kinds."""
    if isinstance(p, Itemset):
        xs = p.items
    elif isinstance(p, Sequence):
        xs = p.events
    elif isinstance(p, LabelledGraph):
        xs = tuple(p.vertices)
    else:
        raise DomainMismatchError(f"not a pattern: {p!r}")
    return _label_kind(xs[0]) if xs else None


def pattern_size(p) -> int:
    """Uniform size notion: items, events, or vertices plus edges."""
    if isinstance(p, Itemset):
        return len(p.items)
    if isinstance(p, Sequence):
        return len(p.events)
    if isinstance(p, LabelledGraph):
        return len(p.vertices) + len(p.edges)
    raise DomainMismatchError(f"not a pattern: {p!r}")
