"""a(0) = 2; a(n) = least unused prime p with n | a(n-1) + p."""
from dataclasses import dataclass, field
from math import gcd, isqrt

from .errors import BoundExhausted
from .numerics import DEFAULT_CLASS_CEILING, is_prime

_INITIAL_SIEVE = 1 << 20


def _sieve(limit):
    s = bytearray([1]) * (limit + 1)
    s[0] = s[1] = 0
    for p in range(2, isqrt(limit) + 1):
        if s[p]:
            s[p * p :: p] = bytes(len(range(p * p, limit + 1, p)))
    return s


@dataclass
class QuetState:
    terms: list = field(default_factory=lambda: [2])
    used: set = field(default_factory=lambda: {2})
    ceiling: int = DEFAULT_CLASS_CEILING
    _sieve: bytearray = field(default_factory=lambda: _sieve(_INITIAL_SIEVE), repr=False)

    @property
    def n(self):
        return len(self.terms)

    def _is_prime(self, c):
        if c < len(self._sieve):
            return self._sieve[c]
        if c < 1 << 28 and c < 4 * len(self._sieve):
            self._sieve = _sieve(4 * len(self._sieve))
            return self._sieve[c]
        return is_prime(c)


def next_term(state):
    """Append and return the next term."""
    n = state.n
    r = -state.terms[-1] % n
    g = gcd(r, n)
    if g > 1:
        # every p = r (mod n) is a multiple of g, so only p = g can be prime
        if g % n == r and g not in state.used and is_prime(g):
            p = g
        else:
            raise BoundExhausted(f"no admissible prime exists for n={n}")
    else:
        c = r if r >= 2 else r + n
        if n == 1:
            c = 2
        while True:
            if c > state.ceiling:
                raise BoundExhausted(f"no admissible prime below {state.ceiling} for n={n}")
            if state._is_prime(c) and c not in state.used:
                p = c
                break
            c += n
    state.terms.append(p)
    state.used.add(p)
    return p


def iterate(ceiling=DEFAULT_CLASS_CEILING):
    """Yield a(0), a(1), ... indefinitely."""
    state = QuetState(ceiling=ceiling)
    yield 2
    while True:
        yield next_term(state)


def quet_prefix(k, ceiling=DEFAULT_CLASS_CEILING):
    if k < 1:
        raise ValueError("k must be at least 1")
    state = QuetState(ceiling=ceiling)
    while state.n < k:
        next_term(state)
    return state.terms


def small_indices(limit, ceiling=DEFAULT_CLASS_CEILING):
    """Indices ``n <= limit`` with ``a(n) < n``."""
    if limit < 1:
        raise ValueError("limit must be at least 1")
    terms = quet_prefix(limit + 1, ceiling)
    return [n for n, a in enumerate(terms) if a < n]


def small_indices_count(count, max_index=10**7, ceiling=DEFAULT_CLASS_CEILING):
    """The first ``count`` indices with ``a(n) < n``, generating as needed."""
    out = []
    for n, a in enumerate(iterate(ceiling)):
        if len(out) >= count:
            break
        if n > max_index:
            raise BoundExhausted(f"fewer than {count} small indices up to {max_index}")
        if a < n:
            out.append(n)
    return out
