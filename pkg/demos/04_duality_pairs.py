"""Homomorphism dualities, verified over a bounded universe.

A duality pair (A, B) says: no map from A into D exactly when D maps into
B.  Directed paths against acyclic tournaments are the classic family;
anything whose core is not an oriented tree cannot head a pair, and the
verifier hunts down concrete counterexamples.

Run:  python3 demos/04_duality_pairs.py
"""

from forbor import (
    Digraph, core_of, directed_cycle, hom_exists,
    is_oriented_tree, known_duality_catalog, transitive_tournament,
    verify_duality_pair, verify_generalized_duality,
)

print("== the path / tournament catalog ==")
for name, a, b, bound in known_duality_catalog():
    rep = verify_duality_pair(a, b, bound)
    print(f"{name}: holds over every digraph on <= {bound} vertices: {rep.holds}")
    print(f"  source core is an oriented tree: {is_oriented_tree(core_of(a))}")

print()
print("== a non-tree source fails, with certificates ==")
c3 = directed_cycle(3)
tt2 = transitive_tournament(2)
rep = verify_duality_pair(c3, tt2, 4)
print(f"(directed C3, single arc) holds: {rep.holds}")
D = rep.counterexample
print(f"counterexample on {D.n} vertices: arcs {sorted(D.arcs)}")
print(f"  C3 -> D: {hom_exists(c3, D)}   D -> arc: {hom_exists(D, tt2)}")
five = directed_cycle(5)
print(f"the directed C5 violates it too: C3 -> C5 is {hom_exists(c3, five)}, "
      f"C5 -> arc is {hom_exists(five, tt2)}")

print()
print("== no finite target captures the triangle-free digraphs ==")
tt3 = transitive_tournament(3)
tricky = Digraph(4, frozenset({(0, 1), (1, 2), (2, 0), (0, 3), (3, 0)}))
print("hardest single target on 4 vertices: a directed triangle with a pendant")
print(f"  survives the 4-vertex universe: "
      f"{verify_generalized_duality((tt3,), (tricky,), 4).holds}")
rep5 = verify_generalized_duality((tt3,), (tricky,), 5)
print(f"  falls at 5 vertices: counterexample arcs {sorted(rep5.counterexample.arcs)}")
