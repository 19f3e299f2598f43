"""Which hole-defined classes can a finite forbidden-orientation set capture?

Forbid a set C of hole lengths and ask whether the resulting hereditary
class could equal the graphs admitting an orientation that avoids some
finite pattern set.  Necessary conditions: the allowed cycle lengths must
eventually be closed under multiples, must be infinite (for the plain
variant), and must eventually fill an arithmetic lattice.  Only three
shapes of C survive: finite, cofinite (acyclic variant only), or
eventually the odd numbers.

Run:  python3 demos/05_hole_classes.py
"""

from forbor import HoleClassSpec, trichotomy_verdict


def is_prime(k):
    return k >= 2 and all(k % d for d in range(2, int(k ** 0.5) + 1))


def show(name, spec):
    rep = trichotomy_verdict(spec)
    print(f"-- {name}")
    print(f"   allowed cycle lengths up to 20: "
          f"{sorted(k for k in rep.cyc_sample if k <= 20)}")
    print(f"   verdict: {', '.join(rep.overall)}")
    for cname, c in rep.checks.items():
        if not c.passed:
            extra = f" witnesses {list(c.witnesses)}" if c.witnesses else ""
            print(f"   failed {cname} [{c.rule}]{extra}")
    if rep.plain_not_expressible and not rep.acyclic_not_expressible:
        print("   (still a candidate for the acyclic variant)")
    print()


show("no holes of prime length", HoleClassSpec.custom(is_prime, tail="other"))
show("even-hole-free", HoleClassSpec.custom(lambda k: k % 2 == 0, tail="other"))
show("no holes of length divisible by 3",
     HoleClassSpec.custom(lambda k: k % 3 == 0, tail="other"))
show("no holes at all (chordal)", HoleClassSpec.cofinite_complement([]))
show("no odd holes from 5 up", HoleClassSpec.odd_tail(5))
show("only the 6-hole forbidden", HoleClassSpec.finite([6]))

print("passing classes are candidates only: the conditions are necessary,")
print("and whether they are sufficient is open.")
