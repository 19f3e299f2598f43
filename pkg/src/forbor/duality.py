"""Digraph homomorphisms, cores, and bounded duality verification.

A duality pair (A, B) asserts that the digraphs admitting no homomorphism
from A are exactly those mapping into B; the generalized form replaces
both sides by finite sets.  Verification here is brute force over the
canonical universe of digraphs up to a vertex bound: each universe member
is tested on both sides and the first violation is returned with
re-verified certificates.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations

from .graphs import (
    Digraph, connected_components, enumerate_digraphs, induced_subdigraph,
    is_isomorphic, underlying,
)
from .search import WorkBudgetExceeded

HOM_BUDGET = 10_000_000
CORE_LIMIT = 8


@dataclass(frozen=True)
class HomWitness:
    """Arc-preserving vertex map, stored as a tuple indexed by source vertex."""

    mapping: tuple

    def verify(self, source: Digraph, target: Digraph) -> bool:
        if len(self.mapping) != source.n:
            return False
        if any(not 0 <= w < target.n for w in self.mapping):
            return False
        return all((self.mapping[u], self.mapping[v]) in target.arcs
                   for u, v in source.arcs)

    def compose(self, then: "HomWitness") -> "HomWitness":
        return HomWitness(tuple(then.mapping[w] for w in self.mapping))


def hom_exists(d1: Digraph, d2: Digraph,
               budget: int = HOM_BUDGET) -> HomWitness | None:
    """First homomorphism d1 -> d2 in deterministic order, or None.

    Backtracking over d1's vertices (decreasing degree), with domains of
    the unassigned vertices pruned for consistency against every assigned
    neighbour after each assignment.
    """
    if d1.n == 0:
        return HomWitness(())
    if d2.n == 0:
        return None
    order = sorted(range(d1.n), key=lambda v: (-sum(d1.degrees(v)), v))
    position = {v: i for i, v in enumerate(order)}
    domains = [list(range(d2.n)) for _ in range(d1.n)]
    mapping = [None] * d1.n
    work = 0

    out1 = [d1.out_neighbours(v) for v in range(d1.n)]
    in1 = [d1.in_neighbours(v) for v in range(d1.n)]

    def consistent(v, w):
        for x in out1[v]:
            if mapping[x] is not None and (w, mapping[x]) not in d2.arcs:
                return False
        for x in in1[v]:
            if mapping[x] is not None and (mapping[x], w) not in d2.arcs:
                return False
        return True

    def prune(v):
        """Shrink domains of later unassigned vertices against mapping[v]."""
        removed = []
        for x in out1[v] | in1[v]:
            if mapping[x] is not None or position[x] < position[v]:
                continue
            keep = [w for w in domains[x] if consistent(x, w)]
            if len(keep) != len(domains[x]):
                removed.append((x, domains[x]))
                domains[x] = keep
            if not keep:
                return removed, True
        return removed, False

    def restore(removed):
        for x, dom in removed:
            domains[x] = dom

    def assign(i):
        nonlocal work
        if i == d1.n:
            return True
        v = order[i]
        for w in domains[v]:
            work += 1
            if work > budget:
                raise WorkBudgetExceeded(f"hom search exceeded {budget} nodes")
            if not consistent(v, w):
                continue
            mapping[v] = w
            removed, wiped = prune(v)
            if not wiped and assign(i + 1):
                return True
            restore(removed)
            mapping[v] = None
        return False

    if assign(0):
        return HomWitness(tuple(mapping))
    return None


def is_hom_equivalent(d1: Digraph, d2: Digraph) -> bool:
    return hom_exists(d1, d2) is not None and hom_exists(d2, d1) is not None


def core_of(d: Digraph, limit: int = CORE_LIMIT) -> Digraph:
    """Minimum-order induced subdigraph hom-equivalent to d.

    All minimum candidates are compared pairwise to confirm the core is
    unique up to isomorphism before one is returned.
    """
    if d.n > limit:
        raise ValueError(f"core computation is exhaustive, capped at {limit} vertices")
    for size in range(1, d.n + 1):
        found = []
        for subset in combinations(range(d.n), size):
            sub = induced_subdigraph(d, subset)
            if hom_exists(d, sub) is not None:
                found.append(sub)
        if found:
            first = found[0]
            if any(not is_isomorphic(first, other) for other in found[1:]):
                raise AssertionError("minimum retracts disagree up to isomorphism")
            return first
    raise AssertionError("unreachable: d is hom-equivalent to itself")


def is_oriented_forest(d: Digraph) -> bool:
    """No symmetric arc pair and an acyclic underlying graph."""
    if any((v, u) in d.arcs for u, v in d.arcs):
        return False
    g = underlying(d)
    return len(g.edges) == d.n - len(connected_components(d))


def is_oriented_tree(d: Digraph) -> bool:
    return is_oriented_forest(d) and len(connected_components(d)) == 1


def minimal_elements(F):
    """Members D such that anything in F mapping to D also receives D."""
    F = list(F)
    out = []
    for d in F:
        if all(hom_exists(d, d2) is not None
               for d2 in F if hom_exists(d2, d) is not None):
            out.append(d)
    return out


# ---------------------------------------------------------------------------
# duality verification over bounded universes


@dataclass(frozen=True)
class DualityReport:
    """Outcome of a bounded duality check.

    With counterexample None the pair held on every universe member up to
    holds_up_to vertices.  Otherwise lhs_witnesses[i] carries the hom from
    the i-th forbidden digraph into the counterexample (None = certified
    absence by exhaustion) and rhs_witnesses[j] the hom from the
    counterexample into the j-th target.
    """

    holds_up_to: int
    counterexample: Digraph | None = None
    lhs_witnesses: tuple = ()
    rhs_witnesses: tuple = ()

    @property
    def holds(self) -> bool:
        return self.counterexample is None


def _duality_violation(D, forb, targets):
    """Witness tuples if D separates the two sides of the claimed duality."""
    lhs = tuple(hom_exists(h, D) for h in forb)
    rhs = tuple(hom_exists(D, m) for m in targets)
    in_forb = all(w is None for w in lhs)
    in_csp = any(w is not None for w in rhs)
    if in_forb != in_csp:
        return lhs, rhs
    return None


def _scan_chunk(args):
    forb, targets, chunk = args
    for i, D in chunk:
        v = _duality_violation(D, forb, targets)
        if v is not None:
            return i, D, v
    return None


def _universe(n_max):
    for n in range(1, n_max + 1):
        yield from enumerate_digraphs(n)


def verify_generalized_duality(F, M, n_max: int = 4,
                               jobs: int = 1) -> DualityReport:
    """Check the duality over every canonical digraph on <= n_max vertices.

    The claim under test: a digraph receives no member of F exactly when
    it maps into some member of M.  Returns the first violation in
    canonical order, certificates verified.  With jobs > 1 the universe is
    scanned in parallel chunks; the merged result is still the canonically
    first counterexample.
    """
    forb = tuple(F)
    targets = tuple(M)
    universe = list(_universe(n_max))
    hit = None
    if jobs > 1:
        indexed = list(enumerate(universe))
        step = max(1, len(indexed) // (jobs * 4))
        chunks = [indexed[i:i + step] for i in range(0, len(indexed), step)]
        try:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results = [r for r in pool.map(
                    _scan_chunk, [(forb, targets, c) for c in chunks]) if r]
            if results:
                hit = min(results)
        except (OSError, PermissionError):
            jobs = 1  # environments without process spawning fall back
    if jobs <= 1:
        for i, D in enumerate(universe):
            v = _duality_violation(D, forb, targets)
            if v is not None:
                hit = (i, D, v)
                break
    if hit is None:
        return DualityReport(holds_up_to=n_max)
    _, D, (lhs, rhs) = hit
    for h, w in zip(forb, lhs):
        if w is not None and not w.verify(h, D):
            raise AssertionError("forbidden-side certificate failed")
    for m, w in zip(targets, rhs):
        if w is not None and not w.verify(D, m):
            raise AssertionError("target-side certificate failed")
    return DualityReport(holds_up_to=n_max, counterexample=D,
                         lhs_witnesses=lhs, rhs_witnesses=rhs)


def verify_duality_pair(a: Digraph, b: Digraph, n_max: int = 4,
                        jobs: int = 1) -> DualityReport:
    """Check that (a, b) is a duality pair over digraphs on <= n_max vertices."""
    return verify_generalized_duality((a,), (b,), n_max, jobs)


def known_duality_catalog():
    """Small catalog of path/tournament duality pairs with verified bounds.

    Each entry is (name, source, target, bound): the directed path on k
    arcs against the acyclic tournament on k vertices, shipped as fixtures
    for tests and demos.
    """
    from .graphs import directed_path, transitive_tournament
    return tuple(
        (f"path{k + 1}-tournament{k}", directed_path(k), transitive_tournament(k), 4)
        for k in (1, 2, 3))
