"""Base-10 digit games: beastly numbers, reverse-and-add trajectories,
multiplicative persistence and the powertrain map."""
from dataclasses import dataclass
from itertools import combinations_with_replacement

from . import kernels
from .errors import BoundExhausted, PowertrainOverflow
from .parallel import map_partitions, split_range
from .numerics import digit_product, is_palindrome, reverse_and_add, to_digits

DEFAULT_LYCHREL_CAP = 300
DEFAULT_MAX_PERSISTENCE = 11
# plain ascending scan is used up to this persistence
PLAIN_SCAN_MAX = 8
DEFAULT_PERSISTENCE_CEILING = 10**10
DEFAULT_POWERTRAIN_DIGITS = 10**5


@dataclass(frozen=True)
class Trajectory:
    """Iterates of a map from ``start``.

    ``resolved`` is the value satisfying the stopping predicate, or None
    when the iteration cap was reached first.
    """

    start: int
    iterates: tuple
    resolved: int | None

    @property
    def cap_reached(self):
        return self.resolved is None

    @property
    def status(self):
        return "CapReached" if self.resolved is None else "Resolved"


# --- beastly numbers ------------------------------------------------------


def is_beastly(n):
    return "666" in str(n)


def beastly_prefix(k, start=0):
    out = []
    n = start
    while len(out) < k:
        if "666" in str(n):
            out.append(n)
        n += 1
    return out


def beastly_in_range(lo, hi):
    """Beastly numbers in ``[lo, hi)``; one partition of a parallel scan."""
    return [n for n in range(lo, hi) if "666" in str(n)]


# --- reverse and add ------------------------------------------------------


def palindrome_trajectory(n, cap=DEFAULT_LYCHREL_CAP):
    if cap < 1:
        raise ValueError("cap must be at least 1")
    iterates = [n]
    if is_palindrome(n):
        return Trajectory(n, (n,), n)
    for _ in range(cap):
        n = reverse_and_add(n)
        iterates.append(n)
        if is_palindrome(n):
            return Trajectory(iterates[0], tuple(iterates), n)
    return Trajectory(iterates[0], tuple(iterates), None)


def a033865_prefix(k, cap=DEFAULT_LYCHREL_CAP):
    """Resolved palindrome for each start ``0..k-1``; None where unresolved."""
    return [palindrome_trajectory(n, cap).resolved for n in range(k)]


def trajectory_196(steps):
    """The first ``steps + 1`` iterates of reverse-and-add from 196."""
    return list(palindrome_trajectory(196, steps).iterates)


# --- persistence ----------------------------------------------------------


def persistence(n):
    steps = 0
    while n >= 10:
        n = digit_product(n)
        steps += 1
    return steps


def _smallest_sorted_digits(p, max_digits):
    # For p >= 2 the least witness has no 0 (persistence would be 1) and no
    # 1 (deleting it keeps the product and shrinks the number), and its
    # digits are sorted (same product, smaller value). So scanning
    # nondecreasing words over 2..9, shortest first, is exhaustive.
    for length in range(2, max_digits + 1):
        for word in combinations_with_replacement("23456789", length):
            n = int("".join(word))
            if persistence(n) == p:
                return n
    return None


def smallest_with_persistence(p, max_persistence=DEFAULT_MAX_PERSISTENCE,
                              ceiling=DEFAULT_PERSISTENCE_CEILING):
    """Least ``n`` whose persistence is exactly ``p``.

    Plain ascending scan for ``p <= 8``; sorted-digit enumeration above,
    limited to candidates below ``ceiling``.
    """
    if not 0 <= p <= max_persistence:
        raise ValueError(f"persistence target must be in 0..{max_persistence}")
    if p == 0:
        return 0
    if p <= PLAIN_SCAN_MAX:
        block = 1 << 20
        lo = 0
        while lo <= ceiling:
            hi = min(lo + block, ceiling + 1)
            found = kernels.persistence_scan(lo, hi, p)
            if found >= 0:
                return found
            lo = hi
        raise BoundExhausted(f"no number with persistence {p} up to {ceiling}")
    found = _smallest_sorted_digits(p, len(str(ceiling)))
    if found is None or found > ceiling:
        raise BoundExhausted(f"no number with persistence {p} up to {ceiling}")
    return found


def persistence_scan_plain(p, limit):
    """Brute-force ascending scan in pure Python; independent check."""
    for n in range(limit + 1):
        if persistence(n) == p:
            return n
    return None


# --- powertrain -----------------------------------------------------------


def powertrain(n, max_digits=DEFAULT_POWERTRAIN_DIGITS):
    """Conway's powertrain ``a^b * c^d * ...`` of the decimal digits of ``n``.

    An odd trailing digit is a bare factor; ``0^0 = 1`` and
    ``powertrain(0) = 0``.
    """
    if n == 0:
        return 0
    digits = to_digits(n)
    bit_cap = int(max_digits * 3.3219280948873626) + 1
    prod = 1
    for i in range(0, len(digits) - 1, 2):
        prod *= digits[i] ** digits[i + 1]
        if prod.bit_length() > bit_cap:
            raise PowertrainOverflow(f"powertrain of {n} exceeds {max_digits} digits")
    if len(digits) % 2:
        prod *= digits[-1]
    return prod


def powertrain_fixed_points(limit, lo=0, workers=1, progress=None):
    """All ``n`` in ``[lo, limit]`` with ``powertrain(n) == n``, ascending."""
    parts = split_range(lo, limit + 1, max(1, (limit + 1 - lo) // (1 << 22)))
    found = map_partitions(lambda r: kernels.powertrain_fixed_scan(*r), parts,
                           workers=workers, progress=progress)
    return [n for chunk in found for n in chunk]
