"""Integer helper sanity checks."""

from gpfq.intarith import divisors, factorint, is_prime, prime_power, prime_powers_upto


def test_is_prime():
    primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29}
    assert {n for n in range(31) if is_prime(n)} == primes
    assert is_prime(7919)
    assert not is_prime(7921)  # 89^2


def test_factorint():
    assert factorint(1) == {}
    assert factorint(12) == {2: 2, 3: 1}
    assert factorint(343) == {7: 3}
    assert factorint(2 * 3 * 5 * 7 * 11) == {2: 1, 3: 1, 5: 1, 7: 1, 11: 1}


def test_prime_power():
    assert prime_power(2) == (2, 1)
    assert prime_power(343) == (7, 3)
    assert prime_power(1024) == (2, 10)
    assert prime_power(6) is None
    assert prime_power(1) is None


def test_divisors():
    assert divisors(1) == [1]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(49) == [1, 7, 49]


def test_prime_powers_upto():
    got = prime_powers_upto(30)
    assert got == [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29]
