import random
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, strategies as st

from seqlab.errors import BoundExhausted, OutOfRange
from seqlab.numerics import (PRIME_TEST_LIMIT, digit_product, from_digits, harmonic,
                             is_palindrome, is_prime, next_prime_in_class, reverse_and_add,
                             reverse_digits, sigma, to_digits)


def divisor_sum_brute(n):
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d if d * d == n else d + n // d
        d += 1
    return total


def is_prime_trial(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@pytest.mark.parametrize("n, digits", [(679, [6, 7, 9]), (0, [0]),
                                       (10755470, [1, 0, 7, 5, 5, 4, 7, 0])])
def test_to_digits(n, digits):
    assert to_digits(n) == digits


@given(st.integers(min_value=0, max_value=10**40))
def test_digits_round_trip(n):
    digits = to_digits(n)
    assert from_digits(digits) == n
    assert digits == [0] or digits[0] != 0


def test_to_digits_rejects_negative():
    with pytest.raises(ValueError):
        to_digits(-1)


@pytest.mark.parametrize("n, out", [(19, 110), (110, 121), (0, 0)])
def test_reverse_and_add(n, out):
    assert reverse_and_add(n) == out


def test_reversal_bounds():
    for n in range(10**4 + 1):
        assert reverse_digits(n) <= 10 * n or n == 0
        assert reverse_and_add(n) >= n


@pytest.mark.parametrize("n, pal", [(121, True), (19, False), (7, True)])
def test_is_palindrome(n, pal):
    assert is_palindrome(n) is pal


@pytest.mark.parametrize("n, p", [(679, 378), (48, 32), (5, 5)])
def test_digit_product(n, p):
    assert digit_product(n) == p


def test_digit_product_shrinks():
    for n in range(10, 10**5):
        assert digit_product(n) < n


@pytest.mark.parametrize("n", [1, 6, 12])
def test_sigma_examples(n):
    assert sigma(n) == {1: 1, 6: 12, 12: 28}[n] == divisor_sum_brute(n)


def test_sigma_rejects_zero():
    with pytest.raises(ValueError):
        sigma(0)


def test_sigma_against_brute_force():
    for n in range(1, 2000):
        assert sigma(n) == divisor_sum_brute(n)


def test_sigma_multiplicative():
    rng = random.Random(7)
    pairs = 0
    while pairs < 1000:
        m, n = rng.randrange(1, 10**6), rng.randrange(1, 10**6)
        if gcd(m, n) != 1:
            continue
        assert sigma(m * n) == sigma(m) * sigma(n) == divisor_sum_brute(m) * divisor_sum_brute(n)
        pairs += 1


def test_sigma_beyond_sieve():
    # 1000003 is prime, past the default sieve bound
    assert sigma(1000003 * 1000033) == (1000003 + 1) * (1000033 + 1)


@pytest.mark.parametrize("n", [1, 2, 6])
def test_harmonic_examples(n):
    expected = sum((Fraction(1, k) for k in range(1, n + 1)), Fraction(0))
    assert harmonic(n) == expected
    assert harmonic(n) == {1: Fraction(1), 2: Fraction(3, 2), 6: Fraction(49, 20)}[n]


def test_harmonic_differences():
    prev = harmonic(1)
    for n in range(2, 501):
        cur = harmonic(n)
        assert cur - prev == Fraction(1, n)
        prev = cur


def test_harmonic_rejects_zero():
    with pytest.raises(ValueError):
        harmonic(0)


def test_is_prime_examples():
    assert is_prime(2) and is_prime(233)
    assert not is_prime(0) and not is_prime(1)


def test_is_prime_agrees_with_trial_division():
    from seqlab.numerics import primes_up_to
    primes = set(primes_up_to(10**6))
    # independent check of the sieve on a prefix, then the sieve itself
    for n in range(20000):
        assert (n in primes) == is_prime_trial(n) == is_prime(n)
    assert all(is_prime(n) == (n in primes) for n in range(10**6))


def test_is_prime_miller_rabin_range():
    rng = random.Random(3)
    for _ in range(300):
        n = rng.randrange(10**6, 10**9)
        assert is_prime(n) == is_prime_trial(n)
    # strong pseudoprime to the bases 2..23
    assert not is_prime(3825123056546413051)
    assert is_prime(2**61 - 1)
    with pytest.raises(OutOfRange):
        is_prime(PRIME_TEST_LIMIT + 1)


def test_next_prime_in_class():
    # oracle: scan upward with trial division
    def oracle(start, r, m):
        p = start
        while not (p % m == r and is_prime_trial(p)):
            p += 1
        return p

    assert next_prime_in_class(2, 1, 4) == 5 == oracle(2, 1, 4)
    rng = random.Random(11)
    for _ in range(200):
        m = rng.randrange(1, 60)
        r = rng.randrange(m)
        if gcd(r, m) != 1:
            continue
        start = rng.randrange(0, 5000)
        assert next_prime_in_class(start, r, m) == oracle(start, r, m)


def test_next_prime_in_class_bound():
    with pytest.raises(BoundExhausted):
        next_prime_in_class(0, 0, 10, ceiling=10**4)
    with pytest.raises(ValueError):
        next_prime_in_class(0, 5, 4)
