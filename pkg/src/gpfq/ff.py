"""Arithmetic in GF(p^k) with an explicit irreducible modulus.

Elements are handled as integer codes in [0, q): the base-p digit expansion
of a code lists the coefficients (constant term first) of the residue
representative modulo the field's modulus polynomial. The code-level
operations on a FieldSpec (`add_c`, `mul_c`, ...) are the hot path used by
polynomial arithmetic; `FieldElem` wraps a single code for the public API.

The base-p positional encoding gives a total order on elements, which is
what makes every enumeration downstream canonical and reproducible.
"""

from __future__ import annotations

import itertools

from .errors import (
    CodeOutOfRange,
    CoefficientOutOfRange,
    DivisionByZero,
    NotPrime,
    ReducibleModulus,
    SpecMismatch,
    WrongDegreeModulus,
)
from .intarith import is_prime

# Full add/mul/inv tables are built for extension fields up to this order;
# larger fields fall back to per-call digit arithmetic.
_TABLE_MAX = 256


class FieldSpec:
    """Immutable description of GF(p^k) plus its arithmetic.

    Two specs compare equal iff they have the same (p, k, modulus); mixing
    elements of unequal specs raises SpecMismatch rather than coercing.
    """

    def __init__(self, p: int, k: int, modulus: tuple):
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = tuple(modulus)
        self._init_ops()

    # -- construction of the code-level operations --------------------------

    def _init_ops(self):
        p, k, q = self.p, self.k, self.q
        if k == 1:
            if p == 2:
                self.add_c = lambda a, b: a ^ b
                self.sub_c = lambda a, b: a ^ b
                self.neg_c = lambda a: a
                self.mul_c = lambda a, b: a & b
            else:
                self.add_c = lambda a, b: (a + b) % p
                self.sub_c = lambda a, b: (a - b) % p
                self.neg_c = lambda a: (-a) % p
                self.mul_c = lambda a, b: (a * b) % p
            self.inv_c = self._inv_prime
            return

        # reduction vectors: _red[j] = digits of t^(k+j) mod modulus
        top = tuple((-c) % p for c in self.modulus[:k])
        red = [top]
        for _ in range(k - 2):
            prev = red[-1]
            shifted = (0,) + prev[: k - 1]
            carry = prev[k - 1]
            if carry:
                shifted = tuple((shifted[i] + carry * top[i]) % p for i in range(k))
            red.append(shifted)
        self._red = red

        if q <= _TABLE_MAX:
            digits = [self._digits_raw(c) for c in range(q)]
            self._digit_cache = digits
            add_t = [
                [self._code_of(tuple((x + y) % p for x, y in zip(da, db))) for db in digits]
                for da in digits
            ]
            mul_t = [[self._code_of(self._mul_digits(da, db)) for db in digits] for da in digits]
            self.add_c = lambda a, b: add_t[a][b]
            self.mul_c = lambda a, b: mul_t[a][b]
            neg_t = [self._code_of(tuple((-x) % p for x in d)) for d in digits]
            self.neg_c = lambda a: neg_t[a]
            self.sub_c = lambda a, b: add_t[a][neg_t[b]]
            inv_t = [0] * q
            for a in range(1, q):
                if inv_t[a]:
                    continue
                b = self.pow_c(a, q - 2)
                inv_t[a], inv_t[b] = b, a
            self._inv_table = inv_t
            self.inv_c = self._inv_tabled
        else:
            self.add_c = self._add_digitwise
            self.sub_c = self._sub_digitwise
            self.neg_c = self._neg_digitwise
            self.mul_c = self._mul_codes
            self.inv_c = self._inv_pow

    def _digits_raw(self, code):
        p = self.p
        out = []
        for _ in range(self.k):
            code, r = divmod(code, p)
            out.append(r)
        return tuple(out)

    def _code_of(self, digits):
        code = 0
        for d in reversed(digits):
            code = code * self.p + d
        return code

    def _mul_digits(self, da, db):
        p, k = self.p, self.k
        prod = [0] * (2 * k - 1)
        for i, ai in enumerate(da):
            if ai:
                for j, bj in enumerate(db):
                    if bj:
                        prod[i + j] = (prod[i + j] + ai * bj) % p
        for idx in range(2 * k - 2, k - 1, -1):
            c = prod[idx]
            if c:
                red = self._red[idx - k]
                for j, rj in enumerate(red):
                    if rj:
                        prod[j] = (prod[j] + c * rj) % p
        return tuple(prod[:k])

    def _add_digitwise(self, a, b):
        p = self.p
        return self._code_of(
            tuple((x + y) % p for x, y in zip(self._digits_raw(a), self._digits_raw(b)))
        )

    def _sub_digitwise(self, a, b):
        p = self.p
        return self._code_of(
            tuple((x - y) % p for x, y in zip(self._digits_raw(a), self._digits_raw(b)))
        )

    def _neg_digitwise(self, a):
        p = self.p
        return self._code_of(tuple((-x) % p for x in self._digits_raw(a)))

    def _mul_codes(self, a, b):
        return self._code_of(self._mul_digits(self._digits_raw(a), self._digits_raw(b)))

    def _inv_prime(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def _inv_tabled(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return self._inv_table[a]

    def _inv_pow(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return self.pow_c(a, self.q - 2)

    # -- generic code-level helpers ------------------------------------------

    def pow_c(self, a: int, e: int) -> int:
        """a^e by square-and-multiply, e >= 0."""
        if e == 0:
            return 1
        result = 1
        mul = self.mul_c
        while e:
            if e & 1:
                result = mul(result, a)
            a = mul(a, a)
            e >>= 1
        return result

    def pth_root_c(self, a: int) -> int:
        """The unique b with b^p = a (inverse Frobenius, b = a^(q/p))."""
        return self.pow_c(a, self.q // self.p)

    def digits_of(self, code: int) -> tuple:
        if self.k == 1:
            return (code,)
        if self.q <= _TABLE_MAX:
            return self._digit_cache[code]
        return self._digits_raw(code)

    # -- element access -------------------------------------------------------

    def element(self, code: int) -> "FieldElem":
        if not 0 <= code < self.q:
            raise CodeOutOfRange(f"code {code} outside [0, {self.q})")
        return FieldElem(self, code)

    @property
    def zero(self) -> "FieldElem":
        return FieldElem(self, 0)

    @property
    def one(self) -> "FieldElem":
        return FieldElem(self, 1)

    def elements(self):
        """All q elements in code order."""
        for c in range(self.q):
            yield FieldElem(self, c)

    def units(self):
        """The q-1 nonzero elements in code order."""
        for c in range(1, self.q):
            yield FieldElem(self, c)

    # -- identity ---------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def __repr__(self):
        if self.k == 1:
            return f"GF({self.p})"
        return f"GF({self.q}; modulus={list(self.modulus)})"


class FieldElem:
    """An element of a FieldSpec, stored as its integer code."""

    __slots__ = ("spec", "code")

    def __init__(self, spec: FieldSpec, code: int):
        self.spec = spec
        self.code = code

    @property
    def digits(self) -> tuple:
        """Base-p digits of the code: residue coefficients, constant first."""
        return self.spec.digits_of(self.code)

    def is_zero(self) -> bool:
        return self.code == 0

    def _check(self, other):
        if not isinstance(other, FieldElem):
            raise TypeError(f"expected FieldElem, got {type(other).__name__}")
        if self.spec != other.spec:
            raise SpecMismatch(f"{self.spec!r} vs {other.spec!r}")

    def __add__(self, other):
        self._check(other)
        return FieldElem(self.spec, self.spec.add_c(self.code, other.code))

    def __sub__(self, other):
        self._check(other)
        return FieldElem(self.spec, self.spec.sub_c(self.code, other.code))

    def __neg__(self):
        return FieldElem(self.spec, self.spec.neg_c(self.code))

    def __mul__(self, other):
        self._check(other)
        return FieldElem(self.spec, self.spec.mul_c(self.code, other.code))

    def __truediv__(self, other):
        self._check(other)
        return FieldElem(self.spec, self.spec.mul_c(self.code, self.spec.inv_c(other.code)))

    def __pow__(self, e):
        return FieldElem(self.spec, self.spec.pow_c(self.code, e))

    def inverse(self) -> "FieldElem":
        return FieldElem(self.spec, self.spec.inv_c(self.code))

    def __eq__(self, other):
        if not isinstance(other, FieldElem):
            return NotImplemented
        return self.spec == other.spec and self.code == other.code

    def __hash__(self):
        return hash((self.spec, self.code))

    def __repr__(self):
        return f"FieldElem({self.spec!r}, {self.code})"

    def __str__(self):
        if self.spec.k == 1:
            return str(self.code)
        return f"[{self.code}]"


def make_field(p: int, k: int = 1, modulus=None) -> FieldSpec:
    """Build GF(p^k); without an explicit modulus, pick the deterministic default.

    The default modulus is the first monic irreducible of degree k over F_p in
    constant-first lexicographic order of coefficient sequences, so identical
    (p, k) always yield identical fields, with no dependence on external
    polynomial tables.
    """
    if p < 2 or not is_prime(p):
        raise NotPrime(p)
    if k < 1:
        raise ValueError(f"extension degree must be >= 1, got {k}")
    if modulus is None:
        modulus = (0, 1) if k == 1 else _default_modulus(p, k)
    else:
        modulus = tuple(int(c) for c in modulus)
        _validate_modulus(p, k, modulus)
    return FieldSpec(p, k, modulus)


def _validate_modulus(p, k, modulus):
    if len(modulus) != k + 1 or modulus[-1] != 1:
        raise WrongDegreeModulus(f"modulus must be monic of degree {k}, got {list(modulus)}")
    if any(not 0 <= c < p for c in modulus):
        raise CoefficientOutOfRange(f"modulus coefficients must lie in [0, {p})")
    if k == 1:
        if modulus != (0, 1):
            raise WrongDegreeModulus("for k = 1 the modulus is the canonical monic x")
        return
    from . import factor, polyring

    base = make_field(p)
    if not factor.is_irreducible(polyring.Poly(base, modulus)):
        raise ReducibleModulus(f"{list(modulus)} is reducible over GF({p})")


def _default_modulus(p, k):
    from . import factor, polyring

    base = make_field(p)
    for low in itertools.product(range(p), repeat=k):
        cand = low + (1,)
        if factor.is_irreducible(polyring.Poly(base, cand)):
            return cand
    raise AssertionError("unreachable: an irreducible of every degree exists")


def ff_add(a: FieldElem, b: FieldElem) -> FieldElem:
    return a + b


def ff_mul(a: FieldElem, b: FieldElem) -> FieldElem:
    return a * b


def ff_inv(a: FieldElem) -> FieldElem:
    return a.inverse()


def element_from_code(spec: FieldSpec, n: int) -> FieldElem:
    """Decode an integer in [0, q) to the element with those base-p digits."""
    return spec.element(n)
