"""The ring F_q[x]: canonical values, arithmetic, norms, enumeration, text format.

A polynomial is stored as a tuple of coefficient codes, constant term first,
with no trailing zero (the empty tuple is the zero polynomial). The canonical
order used everywhere for enumeration and reporting is (degree, then
constant-first lexicographic on the code tuple).

The private tuple-level helpers (_mul, _divmod, _gcd, ...) are what the
factorization machinery runs on; the Poly class wraps them for the public
API and operator syntax.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Optional

from .errors import (
    CoefficientOutOfRange,
    DivisionByZero,
    PolySyntaxError,
    SpecMismatch,
    ZeroPolynomial,
)
from .ff import FieldElem, FieldSpec

NEG_INFINITY = float("-inf")  # degree of the zero polynomial


# ---------------------------------------------------------------------------
# tuple-level arithmetic (coefficient codes, constant first, trimmed)
# ---------------------------------------------------------------------------

def _trim(cs) -> tuple:
    n = len(cs)
    while n and cs[n - 1] == 0:
        n -= 1
    return tuple(cs[:n])


def _add(spec, a, b):
    if len(a) < len(b):
        a, b = b, a
    add = spec.add_c
    out = list(a)
    for i, c in enumerate(b):
        out[i] = add(out[i], c)
    return _trim(out)


def _neg(spec, a):
    neg = spec.neg_c
    return tuple(neg(c) for c in a)


def _sub(spec, a, b):
    return _add(spec, a, _neg(spec, b))


def _scale(spec, a, c):
    if c == 0:
        return ()
    if c == 1:
        return a
    mul = spec.mul_c
    return tuple(mul(x, c) for x in a)


def _mul(spec, a, b):
    if not a or not b:
        return ()
    add = spec.add_c
    mul = spec.mul_c
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = add(out[i + j], mul(ai, bj))
    return _trim(out)


def _divmod(spec, a, b):
    if not b:
        raise DivisionByZero("polynomial division by zero")
    db = len(b) - 1
    if len(a) - 1 < db:
        return (), a
    add = spec.add_c
    mul = spec.mul_c
    neg = spec.neg_c
    inv_lead = spec.inv_c(b[-1])
    rem = list(a)
    quot = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = rem[i]
        if c:
            t = mul(c, inv_lead)
            quot[i - db] = t
            nt = neg(t)
            for j in range(db + 1):
                if b[j]:
                    rem[i - db + j] = add(rem[i - db + j], mul(nt, b[j]))
    return _trim(quot), _trim(rem[:db])


def _mod(spec, a, b):
    return _divmod(spec, a, b)[1]


def _monic(spec, a):
    """(unit code, monic tuple) with unit * monic = a; a must be nonzero."""
    lead = a[-1]
    if lead == 1:
        return 1, a
    return lead, _scale(spec, a, spec.inv_c(lead))


def _gcd(spec, a, b):
    """Monic gcd; (0, 0) is the caller's error to raise."""
    while b:
        a, b = b, _mod(spec, a, b)
    return _monic(spec, a)[1] if a else ()


def _deriv(spec, a):
    if len(a) <= 1:
        return ()
    p = spec.p
    mul = spec.mul_c
    out = []
    for i in range(1, len(a)):
        s = i % p
        out.append(mul(a[i], s) if s != 1 else a[i])
    return _trim(out)


def _powmod(spec, base, e, mod):
    """base^e reduced mod `mod`, e >= 0."""
    result = (1,)
    base = _mod(spec, base, mod)
    while e:
        if e & 1:
            result = _mod(spec, _mul(spec, result, base), mod)
        e >>= 1
        if e:
            base = _mod(spec, _mul(spec, base, base), mod)
    return result


# ---------------------------------------------------------------------------
# public value types
# ---------------------------------------------------------------------------

class Poly:
    """Element of F_q[x] as a normalized, immutable coefficient sequence."""

    __slots__ = ("spec", "coeffs")

    def __init__(self, spec: FieldSpec, coeffs=()):
        cs = _trim(tuple(int(c) for c in coeffs))
        for c in cs:
            if not 0 <= c < spec.q:
                raise CoefficientOutOfRange(f"code {c} outside [0, {spec.q})")
        self.spec = spec
        self.coeffs = cs

    @classmethod
    def _raw(cls, spec, trimmed: tuple) -> "Poly":
        """Internal fast path: `trimmed` must already be normalized."""
        p = object.__new__(cls)
        p.spec = spec
        p.coeffs = trimmed
        return p

    # -- structure ---------------------------------------------------------

    @property
    def degree(self):
        """Degree, with NEG_INFINITY for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INFINITY

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_unit(self) -> bool:
        return len(self.coeffs) == 1

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    @property
    def leading_code(self) -> int:
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coefficient(self, i: int) -> FieldElem:
        code = self.coeffs[i] if i < len(self.coeffs) else 0
        return self.spec.element(code)

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, Poly):
            raise TypeError(f"expected Poly, got {type(other).__name__}")
        if self.spec != other.spec:
            raise SpecMismatch(f"{self.spec!r} vs {other.spec!r}")

    def __add__(self, other):
        self._check(other)
        return Poly._raw(self.spec, _add(self.spec, self.coeffs, other.coeffs))

    def __sub__(self, other):
        self._check(other)
        return Poly._raw(self.spec, _sub(self.spec, self.coeffs, other.coeffs))

    def __neg__(self):
        return Poly._raw(self.spec, _neg(self.spec, self.coeffs))

    def __mul__(self, other):
        self._check(other)
        return Poly._raw(self.spec, _mul(self.spec, self.coeffs, other.coeffs))

    def __divmod__(self, other):
        self._check(other)
        q, r = _divmod(self.spec, self.coeffs, other.coeffs)
        return Poly._raw(self.spec, q), Poly._raw(self.spec, r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative polynomial power")
        result = Poly._raw(self.spec, (1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def scale(self, code: int) -> "Poly":
        return Poly._raw(self.spec, _scale(self.spec, self.coeffs, code))

    # -- identity and order ---------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.spec == other.spec and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.spec, self.coeffs))

    def __lt__(self, other):
        self._check(other)
        return canonical_key(self) < canonical_key(other)

    def __repr__(self):
        return f"Poly({self.spec!r}, {format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


def canonical_key(f: Poly):
    """Sort key realizing the canonical order: degree, then constant-first lex."""
    return (len(f.coeffs), f.coeffs)


@dataclass(frozen=True)
class NormValue:
    """q^degree, with a flag for the zero polynomial (whose norm is 0)."""

    q: int
    exponent: Optional[int]  # None for the zero polynomial

    @property
    def is_zero(self) -> bool:
        return self.exponent is None

    @property
    def value(self) -> int:
        return 0 if self.exponent is None else self.q**self.exponent

    def __int__(self):
        return self.value


# ---------------------------------------------------------------------------
# constructors and basic operations
# ---------------------------------------------------------------------------

def zero(spec) -> Poly:
    return Poly._raw(spec, ())


def one(spec) -> Poly:
    return Poly._raw(spec, (1,))


def x(spec) -> Poly:
    return Poly._raw(spec, (0, 1))


def constant(spec, code: int) -> Poly:
    return Poly(spec, (code,))


def monomial(spec, degree: int, code: int = 1) -> Poly:
    if degree < 0:
        raise ValueError("monomial degree must be >= 0")
    return Poly(spec, (0,) * degree + (code,))


def norm(f: Poly) -> NormValue:
    """N(f) = q^deg(f); the zero polynomial gets the flagged zero norm."""
    if f.is_zero():
        return NormValue(f.spec.q, None)
    return NormValue(f.spec.q, len(f.coeffs) - 1)


def make_monic(f: Poly):
    """Split f != 0 as (unit, monic) with unit * monic = f."""
    if f.is_zero():
        raise ZeroPolynomial("cannot make the zero polynomial monic")
    u, m = _monic(f.spec, f.coeffs)
    return f.spec.element(u), Poly._raw(f.spec, m)


def gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd; gcd(0, 0) is an error."""
    f._check(g)
    if f.is_zero() and g.is_zero():
        raise DivisionByZero("gcd(0, 0) is undefined")
    return Poly._raw(f.spec, _gcd(f.spec, f.coeffs, g.coeffs))


def derivative(f: Poly) -> Poly:
    """Formal derivative in characteristic p."""
    return Poly._raw(f.spec, _deriv(f.spec, f.coeffs))


# ---------------------------------------------------------------------------
# enumeration and counting
# ---------------------------------------------------------------------------

def enumerate_polys(spec, degree: int):
    """All (q-1)*q^degree polynomials of exact degree, in canonical order."""
    if degree < 0:
        raise ValueError("degree must be >= 0")
    q = spec.q
    if degree == 0:
        for c in range(1, q):
            yield Poly._raw(spec, (c,))
        return
    for low in itertools.product(range(q), repeat=degree):
        for lead in range(1, q):
            yield Poly._raw(spec, low + (lead,))


def enumerate_monic(spec, degree: int):
    """All q^degree monic polynomials of exact degree, in canonical order."""
    if degree < 0:
        raise ValueError("degree must be >= 0")
    if degree == 0:
        yield Poly._raw(spec, (1,))
        return
    for low in itertools.product(range(spec.q), repeat=degree):
        yield Poly._raw(spec, low + (1,))


def enumerate_upto(spec, max_degree: int):
    """All nonzero polynomials of degree <= max_degree, in canonical order."""
    for d in range(max_degree + 1):
        yield from enumerate_polys(spec, d)


def count_norm_le(q: int, n: int) -> int:
    """Polynomials of degree <= n, zero included: q^(n+1)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return q ** (n + 1)


def count_norm_exact(q: int, n: int) -> int:
    """Polynomials of exact degree n: q^(n+1) - q^n, and q - 1 at n = 0."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return q - 1
    return q ** (n + 1) - q**n


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------

_TERM_RE = re.compile(r"^(?:(\d+|\[\d+\])\*)?x(?:\^(\d+))?$|^(\d+|\[\d+\])$")


def _parse_code(token: str, q: int) -> int:
    code = int(token[1:-1]) if token.startswith("[") else int(token)
    if not 0 <= code < q:
        raise CoefficientOutOfRange(f"coefficient {token} outside [0, {q})")
    return code


def parse_poly(spec, text: str) -> Poly:
    """Parse `c`, `x`, `c*x`, `x^e`, `c*x^e` terms joined by `+`.

    Coefficients are decimal codes; for extension fields the bracketed form
    `[code]` used by format_poly is accepted as well. Repeating an exponent
    is an error rather than an implicit sum.
    """
    stripped = re.sub(r"\s+", "", text)
    if not stripped:
        raise PolySyntaxError("empty polynomial text")
    coeffs = {}
    for term in stripped.split("+"):
        m = _TERM_RE.match(term)
        if not m:
            raise PolySyntaxError(f"bad term {term!r}")
        coeff_tok, exp_tok, const_tok = m.groups()
        if const_tok is not None:
            e, code = 0, _parse_code(const_tok, spec.q)
        else:
            e = int(exp_tok) if exp_tok is not None else 1
            code = _parse_code(coeff_tok, spec.q) if coeff_tok is not None else 1
        if e in coeffs:
            raise PolySyntaxError(f"exponent {e} appears twice")
        coeffs[e] = code
    out = [0] * (max(coeffs) + 1)
    for e, code in coeffs.items():
        out[e] = code
    return Poly(spec, out)


def format_poly(f: Poly) -> str:
    """Canonical text, highest degree first; parse_poly(format_poly(f)) == f."""
    if f.is_zero():
        return "0"
    k = f.spec.k
    parts = []
    for e in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[e]
        if c == 0:
            continue
        cs = str(c) if k == 1 else f"[{c}]"
        if e == 0:
            parts.append(cs)
        else:
            xs = "x" if e == 1 else f"x^{e}"
            parts.append(xs if c == 1 else f"{cs}*{xs}")
    return "+".join(parts)
