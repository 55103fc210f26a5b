"""Exact rational enclosures and certified decimal rendering.

Every truncated infinite product or series in this package is reported as an
Interval: an exact-rational [lo, hi] guaranteed to contain the true real
value. Decimal output is only ever emitted when both endpoints round to the
same string, so a printed table cell is a theorem, not floating-point luck.

Tail bounds never need transcendental arithmetic: log(1+x) <= x and
1/(1-x) <= 1 + 2x (for x <= 1/2) reduce everything to exp of a tiny rational,
bounded above by its truncated series plus a geometric remainder.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Union

from .errors import NeedsMorePrecision, NegativeOperand

#: Exact rational carrier for every formula in the package.
Rat = Fraction

_RatLike = Union[Fraction, int, str]


def _rat(v: _RatLike) -> Fraction:
    return v if isinstance(v, Fraction) else Fraction(v)


@dataclass(frozen=True)
class Interval:
    """Exact enclosure [lo, hi] of a real value."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", _rat(self.lo))
        object.__setattr__(self, "hi", _rat(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval: {self.lo} > {self.hi}")

    @classmethod
    def point(cls, v: _RatLike) -> "Interval":
        v = _rat(v)
        return cls(v, v)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __contains__(self, v) -> bool:
        v = _rat(v)
        return self.lo <= v <= self.hi

    def __add__(self, other: "Interval") -> "Interval":
        return Interval(self.lo + other.lo, self.hi + other.hi)

    def __mul__(self, other: "Interval") -> "Interval":
        # endpoint shortcut: everything we multiply lives in [0, inf)
        if self.lo < 0 or other.lo < 0:
            raise NegativeOperand("interval multiplication requires non-negative operands")
        return Interval(self.lo * other.lo, self.hi * other.hi)

    def scale(self, r: _RatLike) -> "Interval":
        r = _rat(r)
        if r >= 0:
            return Interval(self.lo * r, self.hi * r)
        return Interval(self.hi * r, self.lo * r)

    def intersects(self, other: "Interval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi


def round_half_away(x: Fraction, digits: int) -> Fraction:
    """x rounded to `digits` fractional digits, ties away from zero."""
    s = 10**digits
    num = x.numerator * s
    den = x.denominator
    q, r = divmod(abs(num), den)
    if 2 * r >= den:
        q += 1
    return Fraction(q if num >= 0 else -q, s)


def render_decimal(v, digits: int) -> str:
    """Render an Interval (or exact Rat) with `digits` fractional digits.

    Valid only when both endpoints round identically; otherwise raises
    NeedsMorePrecision so the caller can deepen its truncation.
    """
    if digits < 1:
        raise ValueError("digits must be >= 1")
    if isinstance(v, Interval):
        lo, hi = v.lo, v.hi
    else:
        lo = hi = _rat(v)
    s = 10**digits
    a = round_half_away(lo, digits) * s
    b = round_half_away(hi, digits) * s
    if a != b:
        raise NeedsMorePrecision(f"[{lo}, {hi}] straddles a {digits}-digit rounding boundary")
    n = int(a)
    sign = "-" if n < 0 else ""
    ip, fp = divmod(abs(n), s)
    return f"{sign}{ip}.{fp:0{digits}d}"


def exp_upper(x: Fraction, terms: int = 8) -> Fraction:
    """Rational upper bound on e^x for 0 <= x <= 1/2.

    Truncated series plus geometric remainder: the tail after `terms` is at
    most x^(terms+1)/(terms+1)! * 1/(1-x), and 1/(1-x) <= 2 on the domain.
    """
    x = _rat(x)
    if x < 0 or x > Fraction(1, 2):
        raise ValueError(f"exp_upper domain is [0, 1/2], got {x}")
    total = Fraction(0)
    power = Fraction(1)
    for j in range(terms + 1):
        total += power / factorial(j)
        power *= x
    return total + 2 * power / factorial(terms + 1)
