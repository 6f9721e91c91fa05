"""Base-10 digit views, exact rationals, primality and divisor sums.

Naturals are plain Python ints (arbitrary precision, non-negative);
rationals are :class:`fractions.Fraction`, which is always kept in lowest
terms with a positive denominator.
"""
from fractions import Fraction
from functools import lru_cache
from math import isqrt, lcm

from .errors import BoundExhausted, OutOfRange

DEFAULT_SIEVE_BOUND = 10**6

# Miller-Rabin with the first 13 prime bases is deterministic below this
# bound (Sorenson & Webster, 2015).
PRIME_TEST_LIMIT = 3_317_044_064_679_887_385_961_981
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)

DEFAULT_CLASS_CEILING = 10**10


def _check_natural(n):
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ValueError(f"expected a non-negative integer, got {n!r}")


def to_digits(n):
    """Decimal digits of ``n``, most significant first; ``0 -> [0]``."""
    _check_natural(n)
    return [ord(c) - 48 for c in str(n)]


def from_digits(digits):
    value = 0
    for d in digits:
        if not 0 <= d <= 9:
            raise ValueError(f"not a decimal digit: {d!r}")
        value = value * 10 + d
    return value


def reverse_digits(n):
    """Digit reversal; leading zeros of the reversed word are dropped."""
    _check_natural(n)
    return int(str(n)[::-1])


def reverse_and_add(n):
    return n + reverse_digits(n)


def is_palindrome(n):
    _check_natural(n)
    s = str(n)
    return s == s[::-1]


def digit_product(n):
    _check_natural(n)
    p = 1
    for c in str(n):
        if c == "0":
            return 0
        p *= ord(c) - 48
    return p


@lru_cache(maxsize=8)
def prime_sieve(limit=DEFAULT_SIEVE_BOUND):
    """Sieve of Eratosthenes: ``sieve[k] == 1`` iff ``k`` is prime, ``k <= limit``."""
    sieve = bytearray([1]) * (max(limit, 1) + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytes(len(range(p * p, limit + 1, p)))
    return bytes(sieve)


@lru_cache(maxsize=8)
def primes_up_to(limit=DEFAULT_SIEVE_BOUND):
    sieve = prime_sieve(limit)
    return tuple(i for i in range(limit + 1) if sieve[i])


def _miller_rabin(n):
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_prime(n):
    """Deterministic primality test, exact for ``n < PRIME_TEST_LIMIT``.

    Raises :class:`OutOfRange` above that bound instead of answering
    probabilistically.
    """
    _check_natural(n)
    if n <= DEFAULT_SIEVE_BOUND:
        return bool(prime_sieve()[n])
    if n >= PRIME_TEST_LIMIT:
        raise OutOfRange(f"primality of {n} is outside the certified range")
    for p in _MR_BASES:
        if n % p == 0:
            return False
    return _miller_rabin(n)


def next_prime_in_class(start, r, m, ceiling=DEFAULT_CLASS_CEILING):
    """Least prime ``p >= start`` with ``p % m == r``.

    Scans the progression upward; raises :class:`BoundExhausted` once the
    candidate passes ``ceiling``.
    """
    if m < 1 or not 0 <= r < m:
        raise ValueError(f"need 0 <= r < m, got r={r}, m={m}")
    c = start + (r - start) % m
    while c <= ceiling:
        if c >= 2 and is_prime(c):
            return c
        c += m
    raise BoundExhausted(f"no prime = {r} (mod {m}) in [{start}, {ceiling}]")


def factorize(n, sieve_bound=DEFAULT_SIEVE_BOUND):
    """Prime factorization ``{p: e}`` by trial division over sieved primes."""
    if n < 1:
        raise ValueError("factorize needs n >= 1")
    factors = {}
    for p in primes_up_to(sieve_bound):
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors[p] = e
    else:
        # ran out of sieved primes; continue with odd trial divisors
        p = primes_up_to(sieve_bound)[-1] + 2
        while p * p <= n:
            while n % p == 0:
                factors[p] = factors.get(p, 0) + 1
                n //= p
            p += 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def sigma(n):
    """Sum of the positive divisors of ``n`` (multiplicative formula)."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"sigma needs n >= 1, got {n!r}")
    total = 1
    for p, e in factorize(n).items():
        total *= (p ** (e + 1) - 1) // (p - 1)
    return total


def harmonic(n):
    """Exact ``1 + 1/2 + ... + 1/n`` as a :class:`Fraction`."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"harmonic needs n >= 1, got {n!r}")
    # sum over a common denominator, reduce once
    den = lcm(*range(1, n + 1))
    num = sum(den // k for k in range(1, n + 1))
    return Fraction(num, den)

