"""Direction words and oriented paths: the translation dictionary.

A word over '>' and '<' is the same thing as an orientation of a path:
letter i points the i-th edge forward or backward.  Forbidding a finite
set of factors on the word side is forbidding induced oriented subpaths
on the graph side, and the whole factor-avoidance toolkit (automaton,
periods, transitivity) becomes graph information.

Run:  python3 demos/01_words_and_paths.py
"""

from forbor import (
    FactorAutomaton, FactorSet, enumerate_periods, is_A_free, is_periodic,
    is_transitive, path_to_word, period_structure, periodic_word, sync_bound,
    word_to_path,
)

print("== words to paths and back ==")
for w in (">>", "><", "<><>"):
    p = word_to_path(w)
    print(f"word {w!r}: {p.n} vertices, arcs {sorted(p.arcs)}")
    print(f"  reading the path from both ends: {sorted(path_to_word(p))}")

print()
print("== a factor set and its suffix-window automaton ==")
A = FactorSet(frozenset({">>", "<<"}))
aut = FactorAutomaton(A)
print(f"forbidden factors: {sorted(A.members)}  (window {aut.window})")
print(f"automaton states: {aut.states}")
for w in ("><><", ">><"):
    print(f"  {w!r} avoiding? {is_A_free(w, A)}")

print()
print("== periods: which word lengths survive arbitrary repetition ==")
print(f"splice bound: {sync_bound(A)}")
print(f"'><' repeats forever: {is_periodic('><', A)}; '>' does not: {is_periodic('>', A)}")
print(f"periods up to 14: {sorted(enumerate_periods(A, 14))}")
print(f"a nonconstant 6-periodic witness: {periodic_word(A, 6, nonconstant=True)!r}")

print()
print("== the arithmetic shape of the period set ==")
for members in ({">>", "<<"}, {">>>", "<<"}, set()):
    A = FactorSet(frozenset(members))
    t = is_transitive(A)
    ps = period_structure(A)
    print(f"factors {sorted(members) or '{}'}: transitive={t}, gcd={ps.gcd_r}, "
          f"threshold={ps.threshold_t0}, exceptions={list(ps.exceptions)}")
print("for a transitive language the period set is always a cofinite slice")
print("of one arithmetic lattice: gcd, threshold, finitely many exceptions.")
