"""The bipartite pipeline, end to end.

Forbidding the three oriented triangles-and-paths {TT3, directed C3,
directed P3} as induced subdigraphs characterizes bipartite graphs: a
graph admits such an orientation exactly when it is 2-colourable.  On
cycles the whole question collapses to word combinatorics: the forbidden
set translates to the factors {>>, <<}, alternation is forced, and only
even cycles survive.

Run:  python3 demos/02_bipartite_pipeline.py
"""

from forbor import (
    ForbiddenSet, SearchMode, admits_orientation, cycle_spectrum,
    directed_cycle, directed_path, enumerate_periods, forbidden_factor_set,
    make_cycle, oracle_k_colourable, transitive_tournament,
)

F = ForbiddenSet((transitive_tournament(3), directed_cycle(3), directed_path(2)))
print("forbidden set: TT3, directed C3, directed P3")

A = forbidden_factor_set(F.members)
print(f"word side: {sorted(A.members)}  (only the directed path is a path)")

print(f"periods up to 20: {sorted(enumerate_periods(A, 20))}")
spectrum = cycle_spectrum(F, 4, 12)
print(f"cycles admitting an avoiding orientation, 4..12: {sorted(spectrum)}")

print()
print("cross-check against 2-colourability, cycle by cycle:")
for k in range(4, 13):
    admits = admits_orientation(make_cycle(k), F, SearchMode("induced")).admits
    two_col = oracle_k_colourable(make_cycle(k), 2)
    tag = "even " if k % 2 == 0 else "odd  "
    print(f"  C{k:<2} {tag} admits={admits!s:5}  2-colourable={two_col}")
    assert admits == two_col

print()
v = admits_orientation(make_cycle(8), F, SearchMode("induced"))
print(f"a witness orientation of C8 (alternating): {sorted(v.witness.arcs)}")
