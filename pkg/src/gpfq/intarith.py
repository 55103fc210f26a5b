"""Small-integer helpers: primality, prime powers, divisors.

Everything here runs on integers up to roughly 2^20, so plain trial
division is the right tool.
"""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factorint(n: int) -> dict:
    """Prime factorization of n >= 1 as {prime: exponent}."""
    if n < 1:
        raise ValueError(f"factorint requires n >= 1, got {n}")
    out = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 5
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_power(n: int):
    """Return (p, k) with n = p^k and p prime, or None if n is not a prime power."""
    if n < 2:
        return None
    fac = factorint(n)
    if len(fac) != 1:
        return None
    ((p, k),) = fac.items()
    return p, k


def divisors(n: int) -> list:
    """Sorted list of positive divisors of n >= 1."""
    out = [1]
    for p, e in factorint(n).items():
        out = [d * p**i for d in out for i in range(e + 1)]
    return sorted(out)


def prime_divisors(n: int) -> list:
    return sorted(factorint(n))


def prime_powers_upto(n: int) -> list:
    """All prime powers p^k <= n, ascending."""
    return [m for m in range(2, n + 1) if prime_power(m) is not None]
