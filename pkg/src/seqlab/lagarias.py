"""a(n) = floor(H(n) + exp(H(n)) log H(n)) - sigma(n), with certified floors.

H(n) is summed exactly; the real part is enclosed with MPFR evaluated
twice, once rounding every operation down and once up. Because
``x + exp(x) log x`` is increasing for ``x >= 1`` and every intermediate
is non-negative, the two results bracket the true value.
"""
from dataclasses import dataclass
from typing import Callable, Optional

import gmpy2
from gmpy2 import mpq

from .errors import PrecisionCeiling
from .numerics import harmonic, sigma
from .parallel import map_partitions, split_range

DEFAULT_PRECISION = 128
PRECISION_CEILING = 8192


@dataclass(frozen=True)
class CertifiedReal:
    """Closed interval ``[lower, upper]`` known to contain a real number.

    ``refine(bits)``, when present, recomputes the enclosure at a higher
    working precision.
    """

    lower: object
    upper: object
    precision: int
    refine: Optional[Callable[[int], "CertifiedReal"]] = None

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError("empty enclosure")

    @property
    def width(self):
        return self.upper - self.lower


@dataclass(frozen=True)
class PrecisionPolicy:
    start: int = DEFAULT_PRECISION
    ceiling: int = PRECISION_CEILING


def _bound(h, precision, rounding):
    with gmpy2.context(precision=precision, round=rounding):
        x = gmpy2.mpfr(h)
        return x + gmpy2.exp(x) * gmpy2.log(x)


def _enclose(h, precision):
    return CertifiedReal(
        _bound(h, precision, gmpy2.RoundDown),
        _bound(h, precision, gmpy2.RoundUp),
        precision,
        refine=lambda bits: _enclose(h, bits),
    )


def lhs_enclosure(n, precision=DEFAULT_PRECISION):
    """Enclosure of ``H(n) + exp(H(n)) * log(H(n))``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    h = harmonic(n)
    return _enclose(mpq(h.numerator, h.denominator), precision)


def _floor(v):
    # rationals floor exactly; gmpy2.floor would round them through a float context
    if isinstance(v, type(mpq())):
        return int(v.numerator // v.denominator)
    return int(gmpy2.floor(v))


def floor_with_precision(x, policy=PrecisionPolicy()):
    """``(floor, bits)``: the certified floor and the precision that settled it."""
    while True:
        lo, hi = _floor(x.lower), _floor(x.upper)
        if lo == hi:
            return lo, x.precision
        bits = max(x.precision * 2, policy.start)
        if x.refine is None or bits > policy.ceiling:
            raise PrecisionCeiling(
                f"enclosure [{x.lower}, {x.upper}] still straddles an integer "
                f"at {x.precision} bits")
        x = x.refine(bits)


def certified_floor(x, policy=PrecisionPolicy()):
    return floor_with_precision(x, policy)[0]


def terms_with_precision(lo, hi, policy=PrecisionPolicy()):
    """``[(n, a(n), bits)]`` for ``lo <= n < hi``; H is carried incrementally."""
    if lo < 1:
        raise ValueError("indices start at 1")
    out = []
    if lo >= hi:
        return out
    h = harmonic(lo)
    h = mpq(h.numerator, h.denominator)
    for n in range(lo, hi):
        if n > lo:
            h += mpq(1, n)
        m, bits = floor_with_precision(_enclose(h, policy.start), policy)
        out.append((n, m - sigma(n), bits))
    return out


def a057641_prefix(k, policy=PrecisionPolicy()):
    if k < 1:
        raise ValueError("k must be at least 1")
    return [a for _, a, _ in terms_with_precision(1, k + 1, policy)]


def check_nonnegative(limit, workers=1, policy=PrecisionPolicy(), progress=None):
    """First ``n <= limit`` with ``a(n) < 0``, or None."""
    if limit < 1:
        raise ValueError("limit must be at least 1")
    parts = split_range(1, limit + 1, max(1, limit // 2000))
    results = map_partitions(
        lambda r: next((n for n, a, _ in terms_with_precision(*r, policy) if a < 0), None),
        parts, workers=workers, progress=progress)
    hits = [n for n in results if n is not None]
    return min(hits) if hits else None
