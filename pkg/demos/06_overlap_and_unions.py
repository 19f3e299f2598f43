"""Disconnected patterns, overlaps, and what disjoint unions destroy.

A pattern with several components can be dodged by a small graph while
overlap containment (components embedded independently, images may
share vertices) already catches it.  The gap is not stable: pile up
enough disjoint copies of the dodging graph and a pigeonhole argument
forces the full pattern back in.  Classes decided by such patterns are
therefore not closed under disjoint unions, and component substitution
cannot always repair the set.

Run:  python3 demos/06_overlap_and_unions.py
"""

from forbor import (
    ForbiddenSet, SearchMode, admits_orientation, directed_cycle,
    directed_path, disjoint_union, graph_union, make_path,
    reduce_to_connected,
)

two_arcs = ForbiddenSet((disjoint_union(directed_path(1), directed_path(1)),))
print("pattern: two disjoint arcs (one member, two components)")

g = make_path(2)
ind, ovl = SearchMode("induced"), SearchMode("overlap")
print(f"3-vertex path, induced mode: admits = "
      f"{admits_orientation(g, two_arcs, ind).admits}"
      "  (both its arcs share the middle vertex)")
print(f"3-vertex path, overlap mode: admits = "
      f"{admits_orientation(g, two_arcs, ovl).admits}"
      "  (each component lands on any single oriented edge)")

print()
doubled = graph_union(g, g)
print(f"two disjoint copies ({doubled.n} vertices), induced mode: admits = "
      f"{admits_orientation(doubled, two_arcs, ind).admits}")
print("arcs in different components are disjoint and induced, so the union")
print("cannot dodge what each copy could: the decided class is not additive.")

print()
print("component substitution as a repair attempt:")
found, rep = reduce_to_connected(two_arcs, n_verify=5)
print(f"  two-arcs pattern: candidate found = {found is not None} "
      f"(tried {rep.tried}); a single arc forbids every edge, far too strong")
doubled_cycles = ForbiddenSet((disjoint_union(directed_cycle(3), directed_cycle(3)),))
found2, rep2 = reduce_to_connected(doubled_cycles, n_verify=5)
print(f"  doubled directed triangle: replaced by one triangle = "
      f"{found2 is not None} (both versions only exclude nothing: acyclic "
      "orientations always exist)")
