"""Progression-free combinatorics over F_q[x].

Covers the greedily-built integer set with no 3-term arithmetic progression
(ternary digits 0/1 only), the greedy polynomial set and its exponent
characterization, detection of 3-term non-unit geometric progressions,
degree-set (norm-class) machinery, and an exact extremal search.

A geometric progression here is the strict triple (b, r*b, r^2*b) with
deg r >= 1; the unit-tolerant variant relaxes membership of the second and
third terms to unit multiples.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Tuple

from .errors import BudgetExceeded, SpecMismatch, ZeroPolynomial
from .factor import factorization_exponents
from .polyring import (
    Poly,
    canonical_key,
    enumerate_polys,
    enumerate_upto,
    make_monic,
)

#: Degrees (equivalently norm exponents) as a sorted duplicate-free tuple.
DegreeSet = Tuple[int, ...]

DEFAULT_ENUM_BUDGET = 1 << 21
DEFAULT_VERTEX_BUDGET = 40


# ---------------------------------------------------------------------------
# the integer set A (no 3-term arithmetic progression, built greedily)
# ---------------------------------------------------------------------------

def a3_contains(n: int) -> bool:
    """True iff n >= 0 has no digit 2 in its ternary expansion."""
    if n < 0:
        raise ValueError("n must be >= 0")
    while n:
        if n % 3 == 2:
            return False
        n //= 3
    return True


def a3_list(limit: int) -> list:
    """All members of the greedy AP-free integer set up to `limit`, sorted."""
    if limit < 0:
        raise ValueError("limit must be >= 0")
    return [n for n in range(limit + 1) if a3_contains(n)]


def nk(k: int) -> int:
    """(3^k - 1) / 2: the reflection points 1, 4, 13, 40, ... (all-ones in ternary)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return (3**k - 1) // 2


def t3q_degrees(limit: int) -> DegreeSet:
    """Degrees of the norm set {q^n : n in the greedy AP-free set}, up to limit."""
    return tuple(a3_list(limit))


def reflected_degrees(m: int) -> DegreeSet:
    """{m - a} over members a <= m of the greedy AP-free set, sorted."""
    if m < 0:
        raise ValueError("m must be >= 0")
    return tuple(sorted(m - a for a in a3_list(m)))


def is_ap_free(degrees: Iterable[int]) -> bool:
    """True iff no a, a+d, a+2d with d >= 1 all lie in the set."""
    s = set(degrees)
    for a in s:
        for b in s:
            if b > a and 2 * b - a in s:
                return False
    return True


# ---------------------------------------------------------------------------
# greedy polynomial set
# ---------------------------------------------------------------------------

def greedy_member(f: Poly) -> bool:
    """True iff every exponent in the factorization of f is in the AP-free set.

    Units have an empty factorization and are always members.
    """
    if f.is_zero():
        raise ZeroPolynomial("membership of the zero polynomial")
    return all(a3_contains(e) for e in factorization_exponents(f))


def greedy_construct_bruteforce(spec, max_degree: int, budget: int = DEFAULT_ENUM_BUDGET):
    """Literal greedy construction: the set of Poly admitted by increasing degree.

    Starts from the nonzero constants; a polynomial f of degree d is rejected
    exactly when some ratio r with deg r >= 1 and admitted a = f / r^2 exist
    such that a and r*a are both already admitted (f is forced to be the
    largest term of any progression it completes, since degrees strictly
    increase along a progression).
    """
    if max_degree < 0:
        raise ValueError("max_degree must be >= 0")
    if spec.q ** (max_degree + 1) > budget:
        raise BudgetExceeded(
            f"q^(max_degree+1) = {spec.q ** (max_degree + 1)} exceeds budget {budget}"
        )
    admitted = set(enumerate_polys(spec, 0))
    ratios = []  # all non-unit candidate ratios of degree <= max_degree // 2
    for d in range(1, max_degree // 2 + 1):
        ratios.extend(enumerate_polys(spec, d))
    for d in range(1, max_degree + 1):
        for f in enumerate_polys(spec, d):
            ok = True
            for r in ratios:
                if 2 * r.degree > d:
                    break  # ratios are in canonical (degree-major) order
                a, rem = divmod(f, r * r)
                if rem.is_zero() and a in admitted and r * a in admitted:
                    ok = False
                    break
            if ok:
                admitted.add(f)
    return admitted


@dataclass(frozen=True)
class ProgressionWitness:
    """A found triple (base, ratio*base, ratio^2*base) with non-unit ratio."""

    base: Poly
    ratio: Poly

    @property
    def members(self) -> Tuple[Poly, Poly, Poly]:
        mid = self.base * self.ratio
        return (self.base, mid, mid * self.ratio)


def has_progression(polys, unit_tolerant: bool = False) -> Optional[ProgressionWitness]:
    """First (base, ratio) witness in canonical order, or None.

    Strict mode demands all three terms be literal members; unit-tolerant
    mode accepts the second and third terms up to unit multiples.
    """
    members = list(polys)
    if not members:
        return None
    spec = members[0].spec
    for f in members:
        if f.spec != spec:
            raise SpecMismatch(f"{f.spec!r} vs {spec!r}")
        if f.is_zero():
            raise ZeroPolynomial("progression search over a set containing 0")
    member_set = set(members)
    if unit_tolerant:
        member_set = {make_monic(f)[1] for f in members}

    def present(g: Poly) -> bool:
        if unit_tolerant:
            return make_monic(g)[1] in member_set
        return g in member_set

    max_deg = max(len(f.coeffs) - 1 for f in members)
    ratio_budget = (max_deg - 0) // 2
    ratios = []
    for d in range(1, ratio_budget + 1):
        ratios.extend(enumerate_polys(spec, d))
    for a in sorted(members, key=canonical_key):
        da = len(a.coeffs) - 1
        for r in ratios:
            if da + 2 * r.degree > max_deg:
                continue
            mid = r * a
            if present(mid) and present(mid * r):
                return ProgressionWitness(a, r)
    return None


# ---------------------------------------------------------------------------
# exact extremal search (maximum progression-free subset)
# ---------------------------------------------------------------------------

def max_progression_free_subset(spec, max_degree: int, budget: int = DEFAULT_VERTEX_BUDGET):
    """Exact maximum size of a strict-progression-free subset of the nonzero
    polynomials of degree <= max_degree, with the canonically least witness.

    The progressions form a 3-uniform hypergraph; a maximum progression-free
    subset is the complement of a minimum hitting set, found by branching on
    an uncovered triple (at most three ways). Deterministic.
    """
    universe = list(enumerate_upto(spec, max_degree))
    n = len(universe)
    if n > budget:
        raise BudgetExceeded(f"{n} vertices exceed budget {budget}")
    index = {f: i for i, f in enumerate(universe)}
    edges = set()
    for a in universe:
        da = len(a.coeffs) - 1
        for d in range(1, (max_degree - da) // 2 + 1):
            for r in enumerate_polys(spec, d):
                mid = r * a
                top = mid * r
                edges.add((index[a], index[mid], index[top]))
    edges = sorted(edges)

    best_cover = _min_hitting_set(n, edges, banned=0)
    size = n - len(best_cover)

    # lexicographically least witness: force vertices in canonical order
    chosen = []
    banned_mask = 0  # vertices the cover may not use = vertices forced into the set
    for v in range(n):
        trial = banned_mask | (1 << v)
        cover = _min_hitting_set(n, edges, banned=trial)
        if cover is not None and n - len(cover) == size:
            banned_mask = trial
            chosen.append(universe[v])
            if len(chosen) == size:
                break
    return size, tuple(chosen)


def _min_hitting_set(n, edges, banned):
    """Smallest set of non-banned vertices meeting every edge, or None."""
    best = [None]

    def lower_bound(remaining):
        used = 0
        count = 0
        for e in remaining:
            m = (1 << e[0]) | (1 << e[1]) | (1 << e[2])
            if not m & used:
                used |= m
                count += 1
        return count

    def rec(cover_mask, cover_size, start_edges):
        remaining = [
            e
            for e in start_edges
            if not cover_mask & ((1 << e[0]) | (1 << e[1]) | (1 << e[2]))
        ]
        if not remaining:
            if best[0] is None or cover_size < len(best[0]):
                best[0] = [i for i in range(n) if cover_mask >> i & 1]
            return
        if best[0] is not None and cover_size + lower_bound(remaining) >= len(best[0]):
            return
        e = remaining[0]
        for v in e:
            if not banned >> v & 1:
                rec(cover_mask | (1 << v), cover_size + 1, remaining)

    rec(0, 0, edges)
    return best[0]
