import warnings

import pytest

from forbor import (
    HoleClassSpec, check_coupling_cofiniteness, check_infinite_cycles,
    check_multiples_closure, cycles_in_class, trichotomy_verdict,
)


def is_prime(k):
    return k >= 2 and all(k % d for d in range(2, int(k ** 0.5) + 1))


def primes_spec(bound=200):
    return HoleClassSpec.custom(is_prime, tail="other", bound=bound)


def even_hole_spec(bound=200):
    return HoleClassSpec.custom(lambda k: k % 2 == 0, tail="other", bound=bound)


def test_cycles_in_class():
    assert cycles_in_class(primes_spec(), 10) == {3, 4, 6, 8, 9, 10}
    only5 = HoleClassSpec.finite([5])
    assert cycles_in_class(only5, 9) == {3, 4, 6, 7, 8, 9}
    odd = HoleClassSpec.odd_tail(5)
    assert cycles_in_class(odd, 12) == {3, 4} | set(range(6, 13, 2))
    with pytest.raises(ValueError):
        cycles_in_class(only5, 3)


def test_spec_validation_and_clamping():
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        spec = HoleClassSpec.finite([3, 5, 7])
        assert spec.members == (5, 7)
        assert caught and "dropped" in str(caught[0].message)
    with pytest.raises(ValueError):
        HoleClassSpec.custom(is_prime, tail="sometimes")
    with pytest.raises(ValueError):
        HoleClassSpec.custom(is_prime, tail="other", bound=10)
    with pytest.raises(ValueError):
        HoleClassSpec.odd_tail(9, exceptions=[11])
    with pytest.raises(ValueError):
        primes_spec(bound=60).forbids(61)


def test_multiples_closure_check():
    even = check_multiples_closure(even_hole_spec())
    assert not even.passed and even.rule == "nec:multiples"
    assert even.witnesses[0] == (5, 10)
    no_odd = check_multiples_closure(HoleClassSpec.odd_tail(4))
    assert no_odd.passed
    assert check_multiples_closure(HoleClassSpec.cofinite_complement([4, 6])).passed
    # multiples of composites stay composite, so prime holes never violate
    assert check_multiples_closure(primes_spec()).passed


def test_infinite_cycles_check():
    chordal_like = HoleClassSpec.cofinite_complement([])
    r = check_infinite_cycles(chordal_like)
    assert not r.passed and r.rule == "nofiniteC"
    assert check_infinite_cycles(primes_spec()).passed
    assert check_infinite_cycles(HoleClassSpec.finite([6])).passed


def test_coupling_cofiniteness_check():
    no_odd = check_coupling_cofiniteness(HoleClassSpec.odd_tail(4))
    assert no_odd.passed and no_odd.gcd_r == 2 and no_odd.threshold >= 4
    pr = check_coupling_cofiniteness(primes_spec())
    assert not pr.passed and pr.rule == "sncondition" and pr.gcd_r == 1
    # the witnesses alone already force the obstruction
    import math
    from functools import reduce
    assert reduce(math.gcd, pr.witnesses) == 1
    routed = check_coupling_cofiniteness(HoleClassSpec.cofinite_complement([]))
    assert routed.passed and "not applicable" in routed.note


def test_trichotomy_primes():
    rep = trichotomy_verdict(primes_spec())
    assert rep.overall == ("NotExpressibleAny", "NotExpressibleAcyclic")
    assert rep.plain_not_expressible and rep.acyclic_not_expressible
    assert "sncondition" in rep.plain_rules
    assert "thm:main" in rep.plain_rules and "thm:main*" in rep.acyclic_rules


def test_trichotomy_even_hole_free():
    rep = trichotomy_verdict(even_hole_spec())
    assert rep.plain_not_expressible and rep.acyclic_not_expressible
    assert "nec:multiples" in rep.plain_rules
    mc = rep.checks["multiples_closure"]
    assert mc.witnesses[0] == (5, 10)


def test_trichotomy_multiple_holes():
    for k in (2, 3, 4):
        spec = HoleClassSpec.custom(lambda n, k=k: n % k == 0, tail="other")
        rep = trichotomy_verdict(spec)
        assert rep.plain_not_expressible and rep.acyclic_not_expressible


def test_trichotomy_cofinite():
    rep = trichotomy_verdict(HoleClassSpec.cofinite_complement([]))
    assert rep.overall == ("NotExpressibleAny",)
    assert rep.plain_not_expressible and not rep.acyclic_not_expressible
    assert "nofiniteC" in rep.plain_rules and rep.acyclic_rules == ()


def test_trichotomy_candidates():
    for spec in (HoleClassSpec.odd_tail(7, exceptions=[4]),
                 HoleClassSpec.finite([5, 9])):
        rep = trichotomy_verdict(spec)
        assert rep.overall == ("NecessaryConditionsPass",)
        assert not rep.plain_not_expressible and not rep.acyclic_not_expressible
        # candidates only: no verdict vocabulary ever claims expressibility
        assert "Expressible" not in " ".join(rep.overall).replace("NotExpressible", "")


def test_every_failure_is_reproducible_from_witnesses():
    for spec in (primes_spec(), even_hole_spec()):
        rep = trichotomy_verdict(spec)
        cyc = set(rep.cyc_sample)
        for check in rep.checks.values():
            if check.passed:
                continue
            if check.rule == "nec:multiples":
                for k, lk in check.witnesses:
                    assert k in cyc and lk not in cyc
            if check.rule == "sncondition":
                assert all(k in cyc for k in check.witnesses)


def test_consistency_between_overall_and_checks():
    specs = [primes_spec(), even_hole_spec(), HoleClassSpec.finite([4]),
             HoleClassSpec.odd_tail(6), HoleClassSpec.cofinite_complement([5])]
    for spec in specs:
        rep = trichotomy_verdict(spec)
        some_fail = any(not c.passed for c in rep.checks.values())
        assert some_fail == ("NecessaryConditionsPass" not in rep.overall)


def test_sample_matches_closed_form():
    fin = HoleClassSpec.finite([6, 11])
    cyc = cycles_in_class(fin, 200)
    assert cyc == {3} | {k for k in range(4, 201) if k not in (6, 11)}
    odd = HoleClassSpec.odd_tail(9, exceptions=[4, 6])
    cyc2 = cycles_in_class(odd, 200)
    expect = {3} | {k for k in range(4, 9) if k not in (4, 6)} \
        | {k for k in range(9, 201) if k % 2 == 0}
    assert cyc2 == expect


def test_custom_spec_needs_declared_tail():
    with pytest.raises(ValueError):
        HoleClassSpec("custom", membership=is_prime, bound=200, tail="").tail_kind()
