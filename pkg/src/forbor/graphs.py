"""Immutable graphs, digraphs and orientations on dense integer vertices.

Vertices are always 0..n-1.  Everything here is a pure function over
frozen values, so results can be cached and shared between threads.
The module also provides the small-universe isomorphism machinery
(canonical forms, exhaustive enumeration of isomorphism classes) that
the rest of the package uses as its brute-force substrate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations, product

import numpy as np

#: hard cap for exhaustive isomorphism-class enumeration
ENUM_LIMIT = 5

#: permutation-based canonical forms always work up to this many vertices
CANON_LIMIT = 8

#: beyond CANON_LIMIT, proceed only if colour refinement leaves at most
#: this many class-respecting permutations to scan
CANON_PERM_BUDGET = 1_000_000


def _check_vertex(v, n):
    if not (0 <= v < n):
        raise ValueError(f"vertex {v} out of range [0, {n})")


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: no loops, no parallel edges."""

    n: int
    edges: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "edges", frozenset(
            (min(u, v), max(u, v)) for u, v in self.edges))
        for u, v in self.edges:
            _check_vertex(u, self.n)
            _check_vertex(v, self.n)
            if u == v:
                raise ValueError(f"loop at vertex {u}")

    def has_edge(self, u, v):
        return (min(u, v), max(u, v)) in self.edges

    def neighbours(self, v):
        return {b if a == v else a for a, b in self.edges if v in (a, b)}

    def degree(self, v):
        return len(self.neighbours(v))

    def sorted_edges(self):
        return sorted(self.edges)


@dataclass(frozen=True)
class Digraph:
    """Directed graph: no loops, no parallel arcs; symmetric pairs allowed."""

    n: int
    arcs: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "arcs", frozenset(tuple(a) for a in self.arcs))
        for u, v in self.arcs:
            _check_vertex(u, self.n)
            _check_vertex(v, self.n)
            if u == v:
                raise ValueError(f"loop at vertex {u}")

    def has_arc(self, u, v):
        return (u, v) in self.arcs

    def out_neighbours(self, v):
        return {b for a, b in self.arcs if a == v}

    def in_neighbours(self, v):
        return {a for a, b in self.arcs if b == v}

    def degrees(self, v):
        """(in-degree, out-degree) of v."""
        return (len(self.in_neighbours(v)), len(self.out_neighbours(v)))

    def sorted_arcs(self):
        return sorted(self.arcs)


@dataclass(frozen=True)
class OrientedGraph(Digraph):
    """Digraph with no symmetric arc pair (and no loops)."""

    def __post_init__(self):
        super().__post_init__()
        for u, v in self.arcs:
            if (v, u) in self.arcs:
                raise ValueError(f"symmetric arc pair between {u} and {v}")


@dataclass(frozen=True)
class Orientation:
    """An assignment of a direction to every edge of a base graph."""

    base: Graph
    arcs: frozenset

    def __post_init__(self):
        object.__setattr__(self, "arcs", frozenset(tuple(a) for a in self.arcs))
        seen = set()
        for u, v in self.arcs:
            e = (min(u, v), max(u, v))
            if e not in self.base.edges:
                raise ValueError(f"arc {(u, v)} is not an edge of the base graph")
            if e in seen:
                raise ValueError(f"edge {e} oriented twice")
            seen.add(e)
        if len(seen) != len(self.base.edges):
            raise ValueError("not every edge received a direction")

    def direction(self, u, v):
        """The oriented arc carried by edge {u, v}."""
        if (u, v) in self.arcs:
            return (u, v)
        if (v, u) in self.arcs:
            return (v, u)
        raise KeyError(f"{{{u}, {v}}} is not an edge")

    def oriented_graph(self):
        return OrientedGraph(self.base.n, self.arcs)


def underlying(d: Digraph) -> Graph:
    """Underlying simple graph of a digraph (digons collapse to one edge)."""
    return Graph(d.n, frozenset((min(u, v), max(u, v)) for u, v in d.arcs))


# ---------------------------------------------------------------------------
# generators


def make_path(k: int) -> Graph:
    """Path with k edges (k+1 vertices); k = 0 gives a single vertex."""
    if k < 0:
        raise ValueError("edge count must be >= 0")
    return Graph(k + 1, frozenset((i, i + 1) for i in range(k)))


def make_cycle(k: int) -> Graph:
    """Cycle with k edges and k vertices, k >= 3."""
    if k < 3:
        raise ValueError("a cycle needs at least 3 edges")
    return Graph(k, frozenset((i, (i + 1) % k) for i in range(k)))


def coupling(r: int, s: int) -> Graph:
    """Two cycles, of r and s edges, glued at a single shared vertex.

    The shared vertex is 0; the result has r+s-1 vertices and r+s edges.
    """
    if r < 3 or s < 3:
        raise ValueError("both cycles need at least 3 edges")
    edges = {(i, i + 1) for i in range(r - 1)} | {(0, r - 1)}
    second = [0] + list(range(r, r + s - 1))
    edges |= {(min(a, b), max(a, b)) for a, b in zip(second, second[1:])}
    edges.add((0, r + s - 2))
    return Graph(r + s - 1, frozenset(edges))


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset(combinations(range(n), 2)))


def directed_path(k: int) -> OrientedGraph:
    """Directed path with k arcs, all pointing 0 -> 1 -> ... -> k."""
    if k < 0:
        raise ValueError("arc count must be >= 0")
    return OrientedGraph(k + 1, frozenset((i, i + 1) for i in range(k)))


def directed_cycle(k: int) -> OrientedGraph:
    if k < 3:
        raise ValueError("a directed cycle needs at least 3 arcs")
    return OrientedGraph(k, frozenset((i, (i + 1) % k) for i in range(k)))


def transitive_tournament(n: int) -> OrientedGraph:
    """Acyclic tournament on n vertices: arc i -> j whenever i < j."""
    if n < 1:
        raise ValueError("need at least one vertex")
    return OrientedGraph(n, frozenset((i, j) for i in range(n) for j in range(i + 1, n)))


def disjoint_union(*ds):
    """Disjoint union of digraphs (vertices of later parts are shifted)."""
    n = 0
    arcs = set()
    oriented = all(isinstance(d, OrientedGraph) for d in ds)
    for d in ds:
        arcs |= {(u + n, v + n) for u, v in d.arcs}
        n += d.n
    return OrientedGraph(n, frozenset(arcs)) if oriented else Digraph(n, frozenset(arcs))


def graph_union(*gs):
    """Disjoint union of undirected graphs."""
    n = 0
    edges = set()
    for g in gs:
        edges |= {(u + n, v + n) for u, v in g.edges}
        n += g.n
    return Graph(n, frozenset(edges))


def connected_components(d):
    """Weakly connected components, as sorted vertex lists (works for Graph too)."""
    if isinstance(d, Digraph):
        pairs = d.arcs
    else:
        pairs = d.edges
    adj = {v: set() for v in range(d.n)}
    for u, v in pairs:
        adj[u].add(v)
        adj[v].add(u)
    seen = set()
    comps = []
    for start in range(d.n):
        if start in seen:
            continue
        comp = []
        stack = [start]
        seen.add(start)
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def induced_subdigraph(d: Digraph, vertices):
    """Induced subdigraph on the given vertices, relabelled 0..k-1 in sorted order."""
    vs = sorted(vertices)
    index = {v: i for i, v in enumerate(vs)}
    arcs = frozenset((index[u], index[v]) for u, v in d.arcs
                     if u in index and v in index)
    cls = OrientedGraph if isinstance(d, OrientedGraph) else Digraph
    return cls(len(vs), arcs)


def induced_subgraph(g: Graph, vertices):
    vs = sorted(vertices)
    index = {v: i for i, v in enumerate(vs)}
    edges = frozenset((index[u], index[v]) for u, v in g.edges
                      if u in index and v in index)
    return Graph(len(vs), edges)


# ---------------------------------------------------------------------------
# containment, orientation enumeration, acyclicity, girth


def contains_induced(h: Digraph, d: Digraph):
    """Injective vertex map embedding h as an *induced* subdigraph of d.

    Returns the first embedding found (vertices of h assigned in decreasing
    degree order, images tried in ascending order) or None.  The image's
    induced subdigraph of d is exactly isomorphic to h: arcs and non-arcs
    both have to match.
    """
    if h.n > d.n:
        return None
    horder = sorted(range(h.n), key=lambda v: (-sum(h.degrees(v)), v))
    hdeg = {v: h.degrees(v) for v in range(h.n)}
    ddeg = {v: d.degrees(v) for v in range(d.n)}
    assignment = {}
    used = set()

    def compatible(v, w):
        if hdeg[v][0] > ddeg[w][0] or hdeg[v][1] > ddeg[w][1]:
            return False
        for v2, w2 in assignment.items():
            if ((v, v2) in h.arcs) != ((w, w2) in d.arcs):
                return False
            if ((v2, v) in h.arcs) != ((w2, w) in d.arcs):
                return False
        return True

    def extend(i):
        if i == len(horder):
            return True
        v = horder[i]
        for w in range(d.n):
            if w in used:
                continue
            if compatible(v, w):
                assignment[v] = w
                used.add(w)
                if extend(i + 1):
                    return True
                del assignment[v]
                used.remove(w)
        return False

    if extend(0):
        return dict(assignment)
    return None


def is_acyclic(d: Digraph) -> bool:
    """True iff d has no directed cycle (a digon counts as a 2-cycle)."""
    indeg = {v: 0 for v in range(d.n)}
    for _, v in d.arcs:
        indeg[v] += 1
    queue = [v for v in range(d.n) if indeg[v] == 0]
    removed = 0
    while queue:
        v = queue.pop()
        removed += 1
        for w in d.out_neighbours(v):
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return removed == d.n


def orientations_of(g: Graph, acyclic_only: bool = False):
    """All 2^|E| orientations of g, lazily, in lexicographic direction order.

    Edges are taken in sorted order; for each edge the direction low->high
    is tried before high->low, with the last edge varying fastest.  With
    acyclic_only the stream is filtered down to acyclic orientations.
    """
    edges = g.sorted_edges()
    for bits in product((0, 1), repeat=len(edges)):
        arcs = frozenset((u, v) if b == 0 else (v, u)
                         for (u, v), b in zip(edges, bits))
        o = Orientation(g, arcs)
        if acyclic_only and not is_acyclic(o.oriented_graph()):
            continue
        yield o


def girth(g: Graph):
    """Length of a shortest cycle, or math.inf for forests."""
    best = math.inf
    adj = {v: g.neighbours(v) for v in range(g.n)}
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: None}
        queue = [root]
        while queue:
            nxt = []
            for v in queue:
                for w in adj[v]:
                    if w not in dist:
                        dist[w] = dist[v] + 1
                        parent[w] = v
                        nxt.append(w)
                    elif parent[v] != w:
                        # non-tree edge closes a cycle through the BFS tree
                        best = min(best, dist[v] + dist[w] + 1)
            queue = nxt
    return best


# ---------------------------------------------------------------------------
# isomorphism and canonical forms


def _refined_colours(d: Digraph):
    """Stable vertex colouring refined from (in-degree, out-degree)."""
    colours = {v: d.degrees(v) for v in range(d.n)}
    while True:
        fresh = {}
        for v in range(d.n):
            outs = sorted(colours[w] for w in d.out_neighbours(v))
            ins = sorted(colours[w] for w in d.in_neighbours(v))
            fresh[v] = (colours[v], tuple(outs), tuple(ins))
        # compress to ranks so tuples stay small
        ranking = {c: i for i, c in enumerate(sorted(set(fresh.values())))}
        fresh = {v: ranking[fresh[v]] for v in fresh}
        if len(set(fresh.values())) == len(set(colours.values())):
            return fresh
        colours = fresh


def _class_respecting_permutations(colours, n):
    """Permutations mapping vertices onto positions sorted by colour class."""
    order = sorted(range(n), key=lambda v: (colours[v], v))
    blocks = []
    i = 0
    while i < n:
        j = i
        while j < n and colours[order[j]] == colours[order[i]]:
            j += 1
        blocks.append(order[i:j])
        i = j
    for parts in product(*(permutations(b) for b in blocks)):
        perm = [0] * n
        pos = 0
        for part in parts:
            for v in part:
                perm[v] = pos
                pos += 1
        yield perm


def canonical_form(d: Digraph) -> Digraph:
    """Canonical representative of d's isomorphism class.

    Minimizes the sorted arc tuple over all permutations compatible with a
    degree-refinement colouring.  Always fine up to CANON_LIMIT vertices;
    larger inputs are accepted only while the refinement keeps the
    permutation count within CANON_PERM_BUDGET.
    """
    colours = _refined_colours(d)
    if d.n > CANON_LIMIT:
        sizes = {}
        for c in colours.values():
            sizes[c] = sizes.get(c, 0) + 1
        perms = 1
        for s in sizes.values():
            perms *= math.factorial(s)
            if perms > CANON_PERM_BUDGET:
                raise ValueError(
                    f"canonical form would scan {perms}+ permutations; "
                    f"exhaustive search is capped at {CANON_PERM_BUDGET}")
    best = None
    for perm in _class_respecting_permutations(colours, d.n):
        arcs = tuple(sorted((perm[u], perm[v]) for u, v in d.arcs))
        if best is None or arcs < best:
            best = arcs
    cls = OrientedGraph if isinstance(d, OrientedGraph) else Digraph
    return cls(d.n, frozenset(best or ()))


def is_isomorphic(d1: Digraph, d2: Digraph) -> bool:
    if d1.n != d2.n or len(d1.arcs) != len(d2.arcs):
        return False
    return canonical_form(d1).arcs == canonical_form(d2).arcs


def graph_canonical_form(g: Graph) -> Graph:
    """Canonical representative for undirected graphs, via the digraph form."""
    d = Digraph(g.n, frozenset((u, v) for u, v in g.edges) |
                frozenset((v, u) for u, v in g.edges))
    c = canonical_form(d)
    return underlying(c)


def graphs_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or len(g1.edges) != len(g2.edges):
        return False
    return graph_canonical_form(g1).edges == graph_canonical_form(g2).edges


# ---------------------------------------------------------------------------
# exhaustive universes


def _orbit_minima(n, slots, perm_to_slot):
    """Vector of min-over-orbit bitmasks for all 2^slots arc masks.

    perm_to_slot(perm, i) gives the slot index that slot i moves to under a
    vertex permutation perm.
    """
    count = 1 << slots
    dtype = np.uint32 if slots <= 31 else np.uint64
    masks = np.arange(count, dtype=dtype)
    canon = masks.copy()
    for perm in permutations(range(n)):
        if list(perm) == list(range(n)):
            continue
        moved = np.zeros(count, dtype=dtype)
        for i in range(slots):
            moved |= ((masks >> dtype(i)) & dtype(1)) << dtype(perm_to_slot(perm, i))
        np.minimum(canon, moved, out=canon)
    return masks, canon


@lru_cache(maxsize=None)
def enumerate_digraphs(n: int, oriented_only: bool = False, limit: int = ENUM_LIMIT):
    """One canonical representative per isomorphism class of digraphs on n vertices.

    Results come back as a tuple sorted by the canonical bitmask, so the
    order is stable.  With oriented_only, classes containing a symmetric
    arc pair are dropped.  Exhaustive over all 2^(n(n-1)) labelled digraphs.
    """
    if n > limit:
        raise ValueError(f"enumeration bound exceeded: {n} > {limit}")
    if n < 1:
        raise ValueError("need at least one vertex")
    arc_slots = [(u, v) for u in range(n) for v in range(n) if u != v]
    slot_index = {a: i for i, a in enumerate(arc_slots)}

    def to_slot(perm, i):
        u, v = arc_slots[i]
        return slot_index[(perm[u], perm[v])]

    masks, canon = _orbit_minima(n, len(arc_slots), to_slot)
    reps = masks[canon == masks]
    out = []
    for m in reps.tolist():
        arcs = frozenset(arc_slots[i] for i in range(len(arc_slots)) if m >> i & 1)
        if oriented_only:
            if any((v, u) in arcs for u, v in arcs):
                continue
            out.append(OrientedGraph(n, arcs))
        else:
            out.append(Digraph(n, arcs))
    return tuple(out)


@lru_cache(maxsize=None)
def enumerate_graphs(n: int, limit: int = 6):
    """One representative per isomorphism class of simple graphs on n vertices."""
    if n > limit:
        raise ValueError(f"enumeration bound exceeded: {n} > {limit}")
    if n < 1:
        raise ValueError("need at least one vertex")
    edge_slots = list(combinations(range(n), 2))
    slot_index = {e: i for i, e in enumerate(edge_slots)}

    def to_slot(perm, i):
        u, v = edge_slots[i]
        a, b = perm[u], perm[v]
        return slot_index[(min(a, b), max(a, b))]

    masks, canon = _orbit_minima(n, len(edge_slots), to_slot)
    reps = masks[canon == masks]
    return tuple(
        Graph(n, frozenset(edge_slots[i] for i in range(len(edge_slots)) if m >> i & 1))
        for m in reps.tolist())
