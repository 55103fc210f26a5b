"""Closed-form and truncated-product density quantities.

Four families of numbers, all exact or certified:

  * the greedy-set density  (1 - 1/q) * prod_{i>=1} (1 - q^(1-2*3^i)) / (1 - q^(1-3^i)),
    also computable through the zeta quotient and the irreducible-count
    double product (all three forms cross-checked on intervals);
  * the norm-set lower bound  m_q = (1 - q^-2) * prod_{i>=1} (1 + q^(-3^i))
    and its exact finite checkpoints at degrees N_k = (3^k - 1)/2;
  * the simple upper bound  1 - (q-1)/(q^3-1)  and its finite-family variants;
  * the sharper upper bound  (q-1) * sum_n q^(-r_n), where r_n is the least m
    such that [1, m] holds an n-element subset free of 3-term arithmetic
    progressions (r_n found by certified exhaustive search).

Infinite products are truncated at product index I with a certified tail
enclosure: every omitted factor of the m_q/local kind lies in
[1, 1 + q^(-3^i)] and the omitted greedy factors in [1, 1/(1 - q^(1-3^i))],
so with u = first omitted term the tail is within [1, exp(2u)] resp.
[1, exp(4u)], bounded rationally by numeric.exp_upper. Depths start at 3 and
double until the requested digits render unambiguously; the 3^i exponents
make convergence triply exponential, so depth stays tiny even at 9 digits.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Optional, Tuple, Union

from .errors import BudgetExceeded, Divergent, NeedsMorePrecision
from .factor import count_irreducibles
from .intarith import prime_powers_upto
from .numeric import Interval, exp_upper, render_decimal
from .polyring import enumerate_upto
from .progfree import DEFAULT_ENUM_BUDGET, a3_list, greedy_member, nk

DEFAULT_START_DEPTH = 3
MAX_DEPTH = 12
DEFAULT_RN_BUDGET = 200
MAX_RN_TERMS = 48


@dataclass(frozen=True)
class DensityReport:
    """A computed quantity plus the truncation parameters that certify it."""

    q: int
    kind: str  # greedy | lower_mq | upper_simple | upper_no | checkpoint | empirical
    value: Union[Interval, Fraction]
    rendered: Optional[str] = None
    digits: Optional[int] = None
    depth: Optional[int] = None  # product index I
    terms: Optional[int] = None  # series terms (r_n count, progression families)
    degree_bound: Optional[int] = None

    def interval(self) -> Interval:
        v = self.value
        return v if isinstance(v, Interval) else Interval.point(v)

    def to_json(self) -> dict:
        iv = self.interval()
        out = {
            "q": self.q,
            "kind": self.kind,
            "value": self.rendered,
            "interval": {"lo": str(iv.lo), "hi": str(iv.hi)},
        }
        if isinstance(self.value, Fraction):
            out["exact"] = str(self.value)
        for key in ("digits", "depth", "terms", "degree_bound"):
            v = getattr(self, key)
            if v is not None:
                out[key] = v
        return out


# ---------------------------------------------------------------------------
# zeta of F_q[x]
# ---------------------------------------------------------------------------

def zeta_q(q: int, s: int) -> Fraction:
    """1 / (1 - q^(1-s)), exactly; defined for s >= 2."""
    if s <= 1:
        raise Divergent(f"zeta_q diverges for s <= 1, got s={s}")
    return 1 / (1 - Fraction(1, q ** (s - 1)))


@dataclass(frozen=True)
class ZetaIdentityCheck:
    """Result of the exact power-series comparison, with first mismatch if any."""

    ok: bool
    mismatch_degree: Optional[int] = None
    got: Optional[int] = None
    expected: Optional[int] = None

    def __bool__(self):
        return self.ok


def zeta_identity_check(q: int, series_degree: int) -> ZetaIdentityCheck:
    """Verify prod_{n<=D} (1 - t^n)^(-m(n,q)) = sum_{d<=D} q^d t^d (mod t^(D+1)).

    Pure integer power-series arithmetic; the right side counts monic
    polynomials by degree, the left collects them by factorization shape.
    """
    if series_degree < 1:
        raise ValueError("series degree must be >= 1")
    trunc = series_degree + 1
    series = [1] + [0] * series_degree
    for n in range(1, trunc):
        m = count_irreducibles(q, n)
        # multiply by (1 - t^n)^(-m) = sum_j C(m-1+j, j) t^(nj)
        factor = [0] * trunc
        j = 0
        while n * j < trunc:
            factor[n * j] = comb(m - 1 + j, j)
            j += 1
        out = [0] * trunc
        for i, a in enumerate(series):
            if a:
                for k in range(0, trunc - i, n):
                    b = factor[k]
                    if b:
                        out[i + k] += a * b
        series = out
    for d in range(trunc):
        if series[d] != q**d:
            return ZetaIdentityCheck(False, d, series[d], q**d)
    return ZetaIdentityCheck(True)


# ---------------------------------------------------------------------------
# certified infinite products
# ---------------------------------------------------------------------------

def _one_plus_tail(u: Fraction) -> Interval:
    """Enclosure of prod (1 + u_i) over omitted indices, u = first omitted term.

    Successive omitted terms shrink by a factor of at least 2, so
    sum u_i <= 2u, and log(1+x) <= x puts the product in [1, exp(2u)].
    """
    return Interval(1, exp_upper(2 * u))


def _greedy_tail(q: int, depth: int) -> Interval:
    """Enclosure of the omitted greedy factors past product index `depth`.

    Each factor (1 - q^(1-2*3^i)) / (1 - q^(1-3^i)) lies in
    (1, 1 + 2*q^(1-3^i)] for i > depth, and the exponents shrink the terms
    super-geometrically, so the product is within [1, exp(4*q^(1-3^(I+1)))].
    """
    u = Fraction(1, q ** (3 ** (depth + 1) - 1))
    return Interval(1, exp_upper(4 * u))


def local_density(t: int, depth: int = DEFAULT_START_DEPTH) -> Interval:
    """The per-prime factor (1 - 1/t) * prod_{i>=0} (1 + t^(-3^i)), certified."""
    if t < 2:
        raise ValueError("t must be >= 2")
    if depth < 1:
        raise ValueError("depth must be >= 1")
    partial = 1 - Fraction(1, t)
    for i in range(depth + 1):
        partial *= 1 + Fraction(1, t ** (3**i))
    return Interval.point(partial) * _one_plus_tail(Fraction(1, t ** (3 ** (depth + 1))))


def _greedy_partial(q: int, depth: int) -> Fraction:
    val = 1 - Fraction(1, q)
    for i in range(1, depth + 1):
        a = 3**i
        val *= (1 - Fraction(1, q ** (2 * a - 1))) / (1 - Fraction(1, q ** (a - 1)))
    return val


def greedy_density_interval(q: int, depth: int) -> Interval:
    """Greedy-set density through product index `depth`, certified."""
    return Interval.point(_greedy_partial(q, depth)) * _greedy_tail(q, depth)


def mq_interval(q: int, depth: int) -> Interval:
    """m_q = (1 - q^-2) * prod_{i>=1} (1 + q^(-3^i)) through `depth`, certified."""
    partial = 1 - Fraction(1, q * q)
    for i in range(1, depth + 1):
        partial *= 1 + Fraction(1, q ** (3**i))
    return Interval.point(partial) * _one_plus_tail(Fraction(1, q ** (3 ** (depth + 1))))


def _adaptive(q: int, kind: str, digits: int, build) -> DensityReport:
    depth = DEFAULT_START_DEPTH
    while depth <= MAX_DEPTH:
        iv = build(depth)
        try:
            return DensityReport(
                q=q, kind=kind, value=iv, rendered=render_decimal(iv, digits),
                digits=digits, depth=depth,
            )
        except NeedsMorePrecision:
            depth *= 2
    raise NeedsMorePrecision(f"{kind} for q={q} did not stabilize at {digits} digits")


def greedy_density(q: int, digits: int = 6) -> DensityReport:
    """Certified greedy-set density, rendered to `digits` decimals."""
    if digits < 1:
        raise ValueError("digits must be >= 1")
    return _adaptive(q, "greedy", digits, lambda d: greedy_density_interval(q, d))


def lower_bound_mq(q: int, digits: int = 6) -> DensityReport:
    """Certified m_q, rendered to `digits` decimals."""
    if digits < 1:
        raise ValueError("digits must be >= 1")
    return _adaptive(q, "lower_mq", digits, lambda d: mq_interval(q, d))


@dataclass(frozen=True)
class CrossCheckResult:
    ok: bool
    zeta_form: Interval       # through zeta_q quotients
    count_form: Interval      # through the m(n,q) double product
    closed_form: Interval     # direct factor arithmetic

    def __bool__(self):
        return self.ok


def _binomial_power_enclosure(u: Fraction, m: int, eps: Fraction) -> Interval:
    """Enclosure of (1 + u)^m for integer m >= 1 and small rational u > 0.

    Truncates the binomial sum once the term ratio u*(m-j)/(j+1) has dropped
    below 1/2, at which point the omitted tail is under twice the next term.
    m(n, q) is far too large for exact expansion, but m*u <= q^(-2) here, so
    a couple of dozen terms always reach `eps`.
    """
    total = Fraction(1)
    term = Fraction(1)
    j = 0
    while j < m:
        nxt = term * u * (m - j) / (j + 1)
        if 2 * nxt <= eps and u * (m - j) <= Fraction(j + 1, 2):
            return Interval(total, total + 2 * nxt)
        j += 1
        term = nxt
        total += term
    return Interval.point(total)


def cross_check_density_forms(q: int, depth: int, series_degree: int) -> CrossCheckResult:
    """Evaluate the three computable density forms and intersect the intervals.

    The zeta form and the closed form share the same tail enclosure (their
    omitted factors are identical); the double-product form additionally
    truncates the inner product at `series_degree` and carries a tail using
    m(n, q) <= q^n.
    """
    tail = _greedy_tail(q, depth)

    p_zeta = 1 / zeta_q(q, 2)
    for i in range(1, depth + 1):
        p_zeta *= zeta_q(q, 3**i) / zeta_q(q, 2 * 3**i)
    zeta_form = Interval.point(p_zeta) * tail

    closed_form = greedy_density_interval(q, depth)

    eps = Fraction(1, 10**15)
    count_form = Interval.point(1 - Fraction(1, q))
    for i in range(1, depth + 1):
        a = 3**i
        for n in range(1, series_degree + 1):
            u = Fraction(1, q ** (a * n))
            count_form = count_form * _binomial_power_enclosure(u, count_irreducibles(q, n), eps)
    inner_tail_arg = 4 * Fraction(1, q ** (3 ** (depth + 1) - 1))
    for i in range(1, depth + 1):
        # sum_{n > N} m(n,q) q^(-3^i n) <= sum_{n > N} q^((1-3^i) n) <= 2 q^((1-3^i)(N+1))
        inner_tail_arg += 2 * Fraction(1, q ** ((3**i - 1) * (series_degree + 1)))
    count_form = count_form * Interval(1, exp_upper(inner_tail_arg))

    ok = (
        zeta_form.intersects(count_form)
        and zeta_form.intersects(closed_form)
        and count_form.intersects(closed_form)
    )
    return CrossCheckResult(ok, zeta_form, count_form, closed_form)


# ---------------------------------------------------------------------------
# exact checkpoints and the simple upper bound
# ---------------------------------------------------------------------------

def checkpoint_density(q: int, k: int) -> Fraction:
    """|S(T) ∩ S(q^(N_k))| / q^(N_k + 1), exactly, from degree counts alone.

    Increases with k toward m_q from below (the gap is under 2*q^(-N_k)).
    """
    limit = nk(k)
    return sum(
        (Fraction(1, q**n) - Fraction(1, q ** (n + 1)) for n in a3_list(limit)),
        Fraction(0),
    )


def upper_bound_simple(q: int, terms: Optional[int] = None) -> Fraction:
    """1 - (q-1)/(q^3-1) exactly, or the finite variant with `terms` families.

    With T families: 1 - ((q-1)/q) * sum_{i<T} q^(-2-3i); decreases in T
    toward the closed form.
    """
    if q < 2:
        raise ValueError("q must be >= 2")
    if terms is None:
        return 1 - Fraction(q - 1, q**3 - 1)
    if terms < 0:
        raise ValueError("terms must be >= 0")
    acc = sum((Fraction(1, q ** (2 + 3 * i)) for i in range(terms)), Fraction(0))
    return 1 - Fraction(q - 1, q) * acc


# ---------------------------------------------------------------------------
# the r_n sequence (exhaustive AP-free search) and the sharper upper bound
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RnTable:
    """r_1..r_N: least right endpoints admitting AP-free subsets of each size."""

    values: Tuple[int, ...]

    def __post_init__(self):
        if any(b <= a for a, b in zip(self.values, self.values[1:])):
            raise ValueError("r_n must be strictly increasing")

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __iter__(self):
        return iter(self.values)


def _apfree_exists(m: int, n: int) -> bool:
    """Is there an AP-free subset of [1, m] of size n, given none fits in [1, m-1]?

    Under that premise any witness must contain m, and translating down shows
    one must contain 1 as well, so both are forced. The DFS keeps a bitmask of
    positions still usable: when x joins, every position that would complete a
    3-term AP with x and an earlier member (2x - y, and the midpoint with m)
    is cleared, so every drawn candidate is valid by construction.
    """
    if n <= 1:
        return m >= n
    if n == 2:
        return m >= 2
    if m < n:
        return False
    avail = 0
    for i in range(2, m):
        avail |= 1 << i
    if (1 + m) % 2 == 0:
        avail &= ~(1 << ((1 + m) // 2))
    chosen = [1, m]

    def rec(avail: int, need: int) -> bool:
        if need == 0:
            return True
        a = avail
        while a:
            low = a & -a
            x = low.bit_length() - 1
            if (avail >> x).bit_count() < need:
                return False
            a ^= low
            nxt = avail & ~((low << 1) - 1)  # only positions above x remain
            for y in chosen:
                if y < x:
                    t = 2 * x - y
                    if t < m:
                        nxt &= ~(1 << t)
            if (x + m) % 2 == 0:
                nxt &= ~(1 << ((x + m) // 2))
            chosen.append(x)
            if rec(nxt, need - 1):
                chosen.pop()
                return True
            chosen.pop()
        return False

    return rec(avail, n - 2)


_rn_cache: list = [1, 2]


def rn_sequence(n_max: int, budget: int = DEFAULT_RN_BUDGET) -> RnTable:
    """The first n_max values of r_n, each minimal by exhaustive search.

    Results are cached in-process; the search is deterministic, so concurrent
    recomputation is harmless.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    while len(_rn_cache) < n_max:
        n = len(_rn_cache) + 1
        m = _rn_cache[-1] + 1
        while m <= budget and not _apfree_exists(m, n):
            m += 1
        if m > budget:
            raise BudgetExceeded(f"r_{n} exceeds search budget {budget}")
        _rn_cache.append(m)
    if _rn_cache[n_max - 1] > budget:
        # cached values may come from a larger earlier budget; the cap still applies
        raise BudgetExceeded(f"r_{n_max} = {_rn_cache[n_max - 1]} exceeds search budget {budget}")
    return RnTable(tuple(_rn_cache[:n_max]))


def upper_bound_no_interval(q: int, n_terms: int, budget: int = DEFAULT_RN_BUDGET) -> Interval:
    """(q-1) * sum_{n<=N} q^(-r_n) plus the tail [0, q^(-r_N)].

    The tail bound holds because r_(N+j) >= r_N + j (strict monotonicity), so
    the omitted sum is at most (q-1) * q^(-r_N) * sum_{j>=1} q^(-j) = q^(-r_N).
    """
    rns = rn_sequence(n_terms, budget)
    partial = (q - 1) * sum((Fraction(1, q**r) for r in rns), Fraction(0))
    return Interval(partial, partial + Fraction(1, q ** rns[-1]))


def upper_bound_no(q: int, digits: int = 9, budget: int = DEFAULT_RN_BUDGET) -> DensityReport:
    """Certified sharper upper bound, extending the r_n table as needed."""
    if q < 2:
        raise ValueError("q must be >= 2")
    if digits < 1:
        raise ValueError("digits must be >= 1")
    n_terms = 8
    while n_terms <= MAX_RN_TERMS:
        iv = upper_bound_no_interval(q, n_terms, budget)
        try:
            return DensityReport(
                q=q, kind="upper_no", value=iv, rendered=render_decimal(iv, digits),
                digits=digits, terms=n_terms,
            )
        except NeedsMorePrecision:
            n_terms += 1
    raise NeedsMorePrecision(f"upper_no for q={q} did not stabilize at {digits} digits")


# ---------------------------------------------------------------------------
# finite-stage empirical density and the density-vs-q table
# ---------------------------------------------------------------------------

def empirical_greedy_density(spec, max_degree: int, budget: int = DEFAULT_ENUM_BUDGET) -> Fraction:
    """|{f != 0 : deg f <= D, member}| / q^(D+1) by full enumeration."""
    if max_degree < 0:
        raise ValueError("max_degree must be >= 0")
    total = spec.q ** (max_degree + 1)
    if total > budget:
        raise BudgetExceeded(f"q^(max_degree+1) = {total} exceeds budget {budget}")
    count = sum(1 for f in enumerate_upto(spec, max_degree) if greedy_member(f))
    return Fraction(count, total)


def figure1_data(q_max: int, digits: int = 6) -> list:
    """(q, rendered greedy density) for every prime power q <= q_max."""
    if q_max < 2:
        raise ValueError("q_max must be >= 2")
    return [(q, greedy_density(q, digits).rendered) for q in prime_powers_upto(q_max)]
