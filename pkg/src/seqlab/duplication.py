"""Closure of a seed string under in-place substring duplication.

Strings are handled as ``bytes`` (symbols are small digits), which makes
the global dedup set cheap.  A string of length ``N`` can only come from
duplicating a length-``m`` block of a string of length ``N - m``, so the
closure is built one length at a time from all shorter levels.
"""
from pathlib import Path

from .errors import MemoryBudgetExceeded

DEFAULT_BUDGET = 2 * 10**7


def _as_bytes(s):
    if isinstance(s, bytes):
        return s
    if isinstance(s, str):
        return s.encode("ascii")
    return bytes(ord(str(d)) for d in s)


def duplications(s):
    """All distinct strings from duplicating one substring of ``s`` in place."""
    b = _as_bytes(s)
    n = len(b)
    out = set()
    for i in range(n):
        for j in range(i + 1, n + 1):
            out.add(b[:j] + b[i:j] + b[j:])
    return {x.decode("ascii") for x in out}


def _level(levels, length, seed_len, budget, stored):
    new = set()
    add = new.add
    for m in range(1, (length - seed_len) + 1):
        src = levels.get(length - m)
        if not src:
            continue
        for s in src:
            L = length - m
            for i in range(L - m + 1):
                j = i + m
                add(s[:j] + s[i:j] + s[j:])
        if stored + len(new) > budget:
            raise MemoryBudgetExceeded(
                f"closure exceeds {budget} strings while building length {length}")
    return new


def closure_levels(seed, max_len, budget=DEFAULT_BUDGET, progress=None):
    """Yield ``(length, set_of_bytes)`` for lengths ``|seed|..max_len``.

    Levels already yielded stay exact even if a later one hits the budget.
    """
    seed_b = _as_bytes(seed)
    if not seed_b:
        raise ValueError("seed must be nonempty")
    if max_len < len(seed_b):
        raise ValueError("max_len shorter than the seed")
    levels = {len(seed_b): {seed_b}}
    stored = 1
    yield len(seed_b), levels[len(seed_b)]
    for length in range(len(seed_b) + 1, max_len + 1):
        lvl = _level(levels, length, len(seed_b), budget, stored)
        levels[length] = lvl
        stored += len(lvl)
        if progress:
            progress(length, len(lvl))
        yield length, lvl


def reachable_counts(seed, max_len, budget=DEFAULT_BUDGET, progress=None):
    """Number of distinct reachable strings of each length ``|seed|..max_len``."""
    return [len(lvl) for _, lvl in closure_levels(seed, max_len, budget, progress)]


def reachable_level(seed, length, budget=DEFAULT_BUDGET):
    """Sorted list of all reachable strings of exactly ``length``."""
    if length < len(_as_bytes(seed)):
        return []
    for L, lvl in closure_levels(seed, length, budget):
        if L == length:
            return sorted(x.decode("ascii") for x in lvl)
    return []


def is_reachable(s, seed, budget=DEFAULT_BUDGET):
    target = _as_bytes(s)
    seed_b = _as_bytes(seed)
    if len(target) < len(seed_b):
        return False
    if len(target) == len(seed_b):
        return target == seed_b
    if target[:1] != seed_b[:1] or target[-1:] != seed_b[-1:]:
        return False
    for L, lvl in closure_levels(seed_b, len(target), budget):
        if L == len(target):
            return target in lvl
    return False


def dump_level(seed, length, path, budget=DEFAULT_BUDGET):
    """Write one closure level to ``path``: sorted, one string per line."""
    lines = reachable_level(seed, length, budget)
    Path(path).write_text("".join(f"{s}\n" for s in lines), encoding="ascii")
    return len(lines)
