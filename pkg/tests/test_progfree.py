"""Progression-free combinatorics: integer set, greedy set, witnesses, extremal."""

import pytest

from _oracles import greedy_apfree_integers
from gpfq import (
    BudgetExceeded,
    SpecMismatch,
    ZeroPolynomial,
    a3_contains,
    a3_list,
    enumerate_upto,
    format_poly,
    greedy_construct_bruteforce,
    greedy_member,
    has_progression,
    is_ap_free,
    make_field,
    max_progression_free_subset,
    nk,
    parse_poly,
    reflected_degrees,
    t3q_degrees,
    zero,
)

F2 = make_field(2)
F3 = make_field(3)


def P(spec, text):
    return parse_poly(spec, text)


def test_a3_contains():
    for n in (0, 1, 3, 4, 9, 10, 12, 13):
        assert a3_contains(n)
    assert not a3_contains(2)
    assert not a3_contains(7)  # 21 in ternary


def test_a3_list():
    assert a3_list(13) == [0, 1, 3, 4, 9, 10, 12, 13]
    assert a3_list(2) == [0, 1]
    # frozen from the greedy oracle: 11 members up to 30
    assert a3_list(30) == greedy_apfree_integers(30)
    assert len(a3_list(30)) == 11


def test_a3_equals_greedy_oracle():
    assert a3_list(10_000) == greedy_apfree_integers(10_000)


def test_greedy_member_examples():
    assert not greedy_member(P(F2, "x^2"))
    assert greedy_member(P(F2, "x^4+x^3"))  # x^3 (x+1): exponents 3, 1
    for spec in (F2, F3):
        for c in range(1, spec.q):
            assert greedy_member(P(spec, str(c)))
    with pytest.raises(ZeroPolynomial):
        greedy_member(zero(F2))


def test_greedy_construct_examples():
    got = greedy_construct_bruteforce(F2, 2)
    assert {format_poly(f) for f in got} == {"1", "x", "x+1", "x^2+x", "x^2+x+1"}
    assert greedy_construct_bruteforce(F2, 0) == {P(F2, "1")}
    assert len(greedy_construct_bruteforce(F3, 1)) == 8  # no progression fits below degree 2


def test_greedy_budget():
    with pytest.raises(BudgetExceeded):
        greedy_construct_bruteforce(F2, 5, budget=10)


def test_equivalence_small():
    for spec, dmax in ((F2, 6), (F3, 4)):
        constructed = greedy_construct_bruteforce(spec, dmax)
        characterized = {f for f in enumerate_upto(spec, dmax) if greedy_member(f)}
        assert constructed == characterized


def test_has_progression_examples():
    w = has_progression({P(F2, "1"), P(F2, "x"), P(F2, "x^2")})
    assert (format_poly(w.base), format_poly(w.ratio)) == ("1", "x")
    assert [format_poly(g) for g in w.members] == ["1", "x", "x^2"]

    assert has_progression({P(F2, "1"), P(F2, "x"), P(F2, "x^2+x")}) is None

    s = {P(F3, "1"), P(F3, "x"), P(F3, "2*x^2")}
    assert has_progression(s) is None
    w = has_progression(s, unit_tolerant=True)
    assert (format_poly(w.base), format_poly(w.ratio)) == ("1", "x")


def test_has_progression_witness_order():
    # two progressions; the canonical (base, ratio) order picks base 1 first
    s = {P(F2, "1"), P(F2, "x"), P(F2, "x^2"), P(F2, "x+1"),
         P(F2, "x^2+1"), P(F2, "x^4+x^2+1")}
    w = has_progression(s)
    assert (format_poly(w.base), format_poly(w.ratio)) == ("1", "x")


def test_has_progression_nonmonic_ratio():
    # 1, 2x, x^2: ratio 2x (non-monic) since (2x)^2 = 4x^2 = x^2 over F_3
    s = {P(F3, "1"), P(F3, "2*x"), P(F3, "x^2")}
    w = has_progression(s)
    assert w is not None
    assert (format_poly(w.base), format_poly(w.ratio)) == ("1", "2*x")


def test_has_progression_errors():
    with pytest.raises(SpecMismatch):
        has_progression([P(F2, "x"), P(F3, "x")])
    with pytest.raises(ZeroPolynomial):
        has_progression([P(F2, "x"), zero(F2)])
    assert has_progression([]) is None


def test_nk():
    assert [nk(k) for k in (1, 2, 3, 4)] == [1, 4, 13, 40]
    n3 = nk(3)
    digits = []
    while n3:
        digits.append(n3 % 3)
        n3 //= 3
    assert digits == [1, 1, 1]  # all-ones ternary


def test_degree_sets():
    assert t3q_degrees(4) == (0, 1, 3, 4)
    assert reflected_degrees(4) == (0, 1, 3, 4)
    assert reflected_degrees(5) == (1, 2, 4, 5)


def test_reflection_symmetry():
    for k in range(1, 7):
        m = nk(k)
        assert reflected_degrees(m) == t3q_degrees(m)


def test_is_ap_free():
    assert is_ap_free((0, 1, 3, 4))
    assert not is_ap_free((0, 1, 2))
    assert is_ap_free(())
    assert is_ap_free((5,))
    assert not is_ap_free((1, 5, 9))


def test_degree_set_progression_equivalence():
    # S(X) has a strict progression iff the degree set has a 3-term AP;
    # exhaustive over every X within degrees <= 5 at q = 2
    from itertools import combinations

    degrees = range(6)
    by_degree = {d: [f for f in enumerate_upto(F2, 5) if f.degree == d] for d in degrees}
    for r in range(len(degrees) + 1):
        for xset in combinations(degrees, r):
            polys = [f for d in xset for f in by_degree[d]]
            witness = has_progression(polys)
            assert (witness is None) == is_ap_free(xset), xset


def test_extremal_small():
    size, witness = max_progression_free_subset(F2, 1)
    assert size == 3
    assert {format_poly(f) for f in witness} == {"1", "x", "x+1"}

    size, witness = max_progression_free_subset(F2, 2)
    assert size >= 5  # the greedy set gives 5; the solver finds the exact value
    assert size == 6
    assert has_progression(witness) is None


def test_extremal_budget():
    with pytest.raises(BudgetExceeded):
        max_progression_free_subset(F2, 5, budget=40)


def test_extremal_deterministic():
    a = max_progression_free_subset(F2, 3)
    b = max_progression_free_subset(F2, 3)
    assert a == b
    # the witness is the canonically least optimum, so it is sorted
    from gpfq import canonical_key

    keys = [canonical_key(f) for f in a[1]]
    assert keys == sorted(keys)
