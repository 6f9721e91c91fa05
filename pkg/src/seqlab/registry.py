"""Map each bundled A-number to a generator ``(first_index, count) -> terms``.

Unresolved reverse-and-add starts render as -1, following the OEIS
convention for A033865.
"""
from . import angelini, curling, digitgames, duplication, lagarias, quet

# fixed-point scan bound used when regenerating A135385
POWERTRAIN_SCAN_LIMIT = 10**6


def _a051003(first, count):
    return digitgames.beastly_prefix(first - 1 + count)[first - 1 :]


def _a033865(first, count):
    out = []
    for n in range(first, first + count):
        r = digitgames.palindrome_trajectory(n).resolved
        out.append(-1 if r is None else r)
    return out


def _a006960(first, count):
    return digitgames.trajectory_196(first + count - 1)[first:]


def _a131744(first, count):
    return angelini.generate(1, first - 1 + count)[first - 1 :]


def _a003001(first, count):
    return [digitgames.smallest_with_persistence(p) for p in range(first, first + count)]


def _a135385(first, count):
    pts = digitgames.powertrain_fixed_points(POWERTRAIN_SCAN_LIMIT)
    return pts[first - 1 : first - 1 + count]


def _a135473(first, count):
    counts = duplication.reachable_counts("123", first + count - 1)
    return counts[first - 3 :]


def _a090822(first, count):
    return curling.gijswijt_prefix(first - 1 + count)[first - 1 :]


def _a094004(first, count, workers=1):
    return [curling.best_tail(n, workers=workers)[0] for n in range(first, first + count)]


def _a134204(first, count):
    return quet.quet_prefix(first + count)[first:]


def _a133242(first, count):
    return quet.small_indices_count(first - 1 + count)[first - 1 :]


def _a057641(first, count):
    return lagarias.a057641_prefix(first - 1 + count)[first - 1 :]


GENERATORS = {
    "A051003": _a051003,
    "A033865": _a033865,
    "A006960": _a006960,
    "A131744": _a131744,
    "A003001": _a003001,
    "A135385": _a135385,
    "A135473": _a135473,
    "A090822": _a090822,
    "A094004": _a094004,
    "A134204": _a134204,
    "A133242": _a133242,
    "A057641": _a057641,
}

# smallest index each generator can produce
MIN_INDEX = {"A051003": 1, "A131744": 1, "A003001": 0, "A135385": 1, "A135473": 3,
             "A090822": 1, "A094004": 1, "A133242": 1, "A057641": 1}


def generate(a_number, first, count, workers=1):
    try:
        gen = GENERATORS[a_number]
    except KeyError:
        raise KeyError(f"no generator for {a_number}") from None
    lo = MIN_INDEX.get(a_number, 0)
    if first < lo:
        raise ValueError(f"{a_number} terms start at index {lo}, not {first}")
    if a_number == "A094004":
        return gen(first, count, workers=workers)
    return gen(first, count)
