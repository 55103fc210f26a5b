"""Density quantities: exact identities, certified table values, searches."""

from fractions import Fraction

import pytest

from _oracles import rn_brute
from gpfq import (
    BudgetExceeded,
    Divergent,
    Interval,
    checkpoint_density,
    cross_check_density_forms,
    empirical_greedy_density,
    figure1_data,
    greedy_density,
    greedy_density_interval,
    local_density,
    lower_bound_mq,
    make_field,
    mq_interval,
    nk,
    rn_sequence,
    upper_bound_no,
    upper_bound_no_interval,
    upper_bound_simple,
    zeta_identity_check,
    zeta_q,
)

F2 = make_field(2)


def test_zeta_examples():
    assert zeta_q(2, 2) == 2
    assert zeta_q(3, 2) == Fraction(3, 2)
    assert zeta_q(2, 3) == Fraction(4, 3)
    with pytest.raises(Divergent):
        zeta_q(2, 1)


def test_zeta_reciprocal_is_unit_density():
    # the empty product in the zeta quotient form leaves exactly 1/zeta(2)
    for q in (2, 3, 5, 9):
        assert 1 / zeta_q(q, 2) == 1 - Fraction(1, q)


def test_zeta_identity():
    for q in (2, 3):
        check = zeta_identity_check(q, 10)
        assert check.ok and bool(check)
        assert check.mismatch_degree is None
    # the degree-1 coefficient is q = m(1, q) on both sides
    from gpfq import count_irreducibles

    for q in (2, 3, 5, 7, 9):
        assert count_irreducibles(q, 1) == q


def test_local_density_partial_sum_identity():
    # subset sums of {1, 3, 9} are exactly the admissible exponents below 27,
    # so the K-fold partial product equals the truncated series, exactly
    t, big_k = 2, 3
    members = [n for n in range(3**big_k) if all(d != 2 for d in _ternary(n))]
    lhs = (1 - Fraction(1, t)) * sum(Fraction(1, t**n) for n in members)
    rhs = 1 - Fraction(1, t)
    for i in range(big_k):
        rhs *= 1 + Fraction(1, t ** (3**i))
    assert lhs == rhs


def _ternary(n):
    if n == 0:
        return [0]
    out = []
    while n:
        out.append(n % 3)
        n //= 3
    return out


def test_local_density_limits():
    for t in (4, 5, 8, 100):
        for depth in (1, 2, 3):
            iv = local_density(t, depth)
            assert iv.lo >= 1 - Fraction(2, t)
            assert iv.hi <= 1
    assert local_density(2, 3).width < Fraction(1, 10**12)


def test_greedy_density_table_spots():
    assert greedy_density(2, 6).rendered == "0.648361"
    assert greedy_density(3, 6).rendered == "0.747027"
    assert greedy_density(343, 6).rendered == "0.997093"


def test_greedy_density_report_fields():
    r = greedy_density(5, 8)
    assert (r.q, r.kind, r.digits) == (5, "greedy", 8)
    assert r.depth >= 3
    assert r.interval().width < Fraction(1, 10**8)
    assert r.to_json()["value"] == r.rendered


def test_cross_check_forms():
    assert cross_check_density_forms(2, 4, 12).ok
    assert cross_check_density_forms(3, 4, 12).ok


def test_lower_bound_spots():
    assert lower_bound_mq(2, 6).rendered == "0.845398"
    assert lower_bound_mq(27, 6).rendered == "0.998679"
    assert lower_bound_mq(2, 9).rendered == "0.845397956"


def test_checkpoint_exact():
    assert checkpoint_density(2, 1) == Fraction(3, 4)
    assert checkpoint_density(2, 2) == Fraction(27, 32)


def test_checkpoint_sandwich():
    # increases toward m_q from below; gap under 2 q^(-N_k) and shrinking
    for q in (2, 3, 5, 9):
        m = mq_interval(q, 4)
        prev = None
        prev_gap = None
        for k in range(1, 6):
            cp = checkpoint_density(q, k)
            assert cp < m.hi
            gap_hi = m.hi - cp
            assert gap_hi < 2 * Fraction(1, q ** nk(k))
            if prev is not None:
                assert cp > prev
                assert gap_hi < prev_gap
            prev, prev_gap = cp, m.lo - cp


def test_checkpoint_partial_product_identity():
    # the finite series and the finite product agree exactly at every stage
    for q in (2, 3, 5):
        for big_k in range(1, 7):
            prod = 1 - Fraction(1, q)
            for i in range(big_k):
                prod *= 1 + Fraction(1, q ** (3**i))
            assert checkpoint_density(q, big_k) == prod


def test_upper_simple():
    assert upper_bound_simple(2) == Fraction(6, 7)
    assert upper_bound_simple(2, 1) == Fraction(7, 8)
    from gpfq import render_decimal

    assert render_decimal(upper_bound_simple(5), 9) == "0.967741935"


def test_upper_simple_decreasing_in_terms():
    for q in (2, 3, 5):
        closed = upper_bound_simple(q)
        values = [upper_bound_simple(q, t) for t in range(7)]
        assert all(a > b for a, b in zip(values, values[1:]))
        assert all(v > closed for v in values)
        assert values[-1] - closed < Fraction(1, q**17)


def test_rn_first_values():
    assert list(rn_sequence(9)) == [1, 2, 4, 5, 9, 11, 13, 14, 20]
    assert list(rn_sequence(2)) == [1, 2]


def test_rn_against_bruteforce():
    got = list(rn_sequence(6))
    assert got == [rn_brute(n) for n in range(1, 7)]


def test_rn_strictly_increasing_and_r10():
    vals = list(rn_sequence(12))
    assert all(b > a for a, b in zip(vals, vals[1:]))
    assert vals[9] > 20  # r_10 from the exhaustive search; strictly beyond r_9


def test_rn_budget():
    with pytest.raises(BudgetExceeded):
        rn_sequence(4, budget=3)


def test_upper_no_spots():
    assert upper_bound_no(2, 9).rendered == "0.846375541"
    assert upper_bound_no(3, 9).rendered == "0.921925273"
    assert upper_bound_no(25, 9).rendered == "0.998463898"


def test_upper_no_interval_tail():
    iv = upper_bound_no_interval(2, 9)
    assert iv.width == Fraction(1, 2**20)
    deeper = upper_bound_no_interval(2, 12)
    assert iv.lo <= deeper.lo and deeper.hi <= iv.hi


def test_empirical_small():
    assert empirical_greedy_density(F2, 2) == Fraction(5, 8)
    assert empirical_greedy_density(F2, 0) == Fraction(1, 2)
    with pytest.raises(BudgetExceeded):
        empirical_greedy_density(F2, 10, budget=100)


def test_figure1():
    rows = figure1_data(30)
    qs = [q for q, _ in rows]
    assert qs == [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29]
    data = dict(rows)
    assert data[2] == "0.648361"
    assert data[9] == "0.899985"
    for bad in (6, 10, 12):
        assert bad not in data


def test_figure1_full_range():
    data = dict(figure1_data(130))
    assert len(data) == 44
    for q in (121, 125, 127, 128):
        assert q in data
    assert Fraction(data[128]) > Fraction(99, 100)


def test_greedy_interval_fixed_depth():
    iv = greedy_density_interval(2, 3)
    assert Fraction("0.648361") in Interval(iv.lo - Fraction(1, 10**6), iv.hi + Fraction(1, 10**6))
    assert iv.width < Fraction(1, 10**20)
