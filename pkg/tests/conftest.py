"""Shared builders and independent oracles for the test suite.

The oracles here deliberately avoid the library code paths they check:
isomorphism is decided by raw permutation search, periodicity by explicit
power expansion, induced cycles by subset enumeration.
"""

from itertools import combinations, permutations, product

import pytest

from forbor import (
    Digraph, Graph, directed_cycle, directed_path,
    induced_subgraph, is_A_free, transitive_tournament, word_to_path,
)


def tt3():
    return transitive_tournament(3)


def c3():
    return directed_cycle(3)


def p3():
    return directed_path(2)


def p4():
    return directed_path(3)


def b1():
    """Three vertices, two arcs out of the centre."""
    return word_to_path("<>")


def arc():
    return directed_path(1)


# ---------------------------------------------------------------------------
# independent oracles


def iso_oracle(d1, d2) -> bool:
    """Isomorphism by raw permutation search (no canonical forms)."""
    if d1.n != d2.n or len(d1.arcs) != len(d2.arcs):
        return False
    return any(
        {(p[u], p[v]) for u, v in d1.arcs} == d2.arcs
        for p in permutations(range(d1.n)))


def graph_iso_oracle(g1, g2) -> bool:
    if g1.n != g2.n or len(g1.edges) != len(g2.edges):
        return False
    return any(
        {(min(p[u], p[v]), max(p[u], p[v])) for u, v in g1.edges} == g2.edges
        for p in permutations(range(g1.n)))


def all_labelled_digraphs(n):
    slots = [(u, v) for u in range(n) for v in range(n) if u != v]
    for bits in product((0, 1), repeat=len(slots)):
        yield Digraph(n, frozenset(s for s, b in zip(slots, bits) if b))


def max_independent_set(g: Graph) -> int:
    best = 0
    for r in range(g.n, 0, -1):
        for sub in combinations(range(g.n), r):
            if not any(g.has_edge(u, v) for u, v in combinations(sub, 2)):
                return r
    return best


def induced_cycle_lengths(g: Graph):
    """Lengths of all induced cycles, by subset enumeration."""
    out = set()
    for r in range(3, g.n + 1):
        for sub in combinations(range(g.n), r):
            h = induced_subgraph(g, sub)
            if len(h.edges) == r and all(h.degree(v) == 2 for v in range(r)):
                # connected 2-regular with r edges on r vertices = a cycle
                seen = {0}
                frontier = [0]
                while frontier:
                    v = frontier.pop()
                    for w in h.neighbours(v):
                        if w not in seen:
                            seen.add(w)
                            frontier.append(w)
                if len(seen) == r:
                    out.add(r)
    return out


def powers_all_free(w, A, n_max) -> bool:
    """Explicit power expansion: w**n is A-free for every n up to n_max."""
    return all(is_A_free(w * n, A) for n in range(1, n_max + 1))


def random_word(rng, length):
    return "".join(rng.choice("><") for _ in range(length))


@pytest.fixture
def rng():
    import random
    return random.Random(20240811)
