"""Curling numbers, Gijswijt's sequence and the best-tail search over {2,3}^n."""
import threading
from dataclasses import dataclass
from itertools import product
from pathlib import Path

from . import kernels
from .errors import OutOfRange, StepCapExceeded
from .parallel import map_partitions

DEFAULT_STEP_CAP = 10**4
DEFAULT_EXHAUSTIVE_BOUND = 24


@dataclass(frozen=True)
class TailResult:
    initial: tuple
    extended: tuple  # initial + appended curling numbers, ending in the 1
    tail_length: int


def curling_number(s):
    """Largest ``k`` with ``s = X Y^k``, ``Y`` nonempty."""
    return kernels.curling_number(list(s))


def curling_number_brute(s):
    """Reference: try every block length and every repeat count."""
    s = list(s)
    L = len(s)
    if L == 0:
        raise ValueError("curling number of an empty string")
    best = 1
    for l in range(1, L + 1):
        y = s[L - l :]
        for k in range(2, L // l + 1):
            if s[L - k * l :] == y * k:
                best = max(best, k)
    return best


def gijswijt_prefix(k):
    if k < 1:
        raise ValueError("k must be at least 1")
    return kernels.gijswijt(k)


def extend_until_one(initial, cap=DEFAULT_STEP_CAP):
    initial = tuple(initial)
    if not initial:
        raise ValueError("initial string must be nonempty")
    tail, extended = kernels.extend_until_one(list(initial), cap)
    if tail < 0:
        raise StepCapExceeded(
            f"no 1 appended within {cap} steps from {''.join(map(str, initial))}")
    return TailResult(initial, tuple(extended), tail)


def _shards(n, prefix_len):
    return [list(p) for p in product((2, 3), repeat=prefix_len)] if prefix_len else [[]]


def _key(prefix):
    return "".join(map(str, prefix)) or "-"


def read_checkpoint(path):
    """``{shard_prefix: (best, witness)}`` from a checkpoint file."""
    done = {}
    p = Path(path)
    if not p.exists():
        return done
    for line in p.read_text().splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        shard, best, witness = line.split()
        done[shard] = (int(best), [int(c) for c in witness])
    return done


def best_tail(n, cap=DEFAULT_STEP_CAP, bound=DEFAULT_EXHAUSTIVE_BOUND, workers=1,
              checkpoint=None, progress=None):
    """Longest string reachable before a 1, over all ``2**n`` starts in {2,3}^n.

    Returns ``(tail_length, witness)``; ties go to the lexicographically
    smallest witness. With ``checkpoint``, finished shards are appended as
    ``prefix best witness`` lines and skipped on the next run.
    """
    if not 1 <= n <= bound:
        raise OutOfRange(f"best_tail needs 1 <= n <= {bound}")
    prefix_len = max(0, min(n, n - 12))
    shards = _shards(n, prefix_len)
    done = {}
    if checkpoint:
        header = f"# best_tail n={n}"
        path = Path(checkpoint)
        if path.exists():
            first = path.read_text().split("\n", 1)[0]
            if first != header:
                raise ValueError(f"checkpoint {path} belongs to another run ({first!r})")
            done = read_checkpoint(path)
        else:
            path.write_text(header + "\n")

    lock = threading.Lock()

    def run(prefix):
        key = _key(prefix)
        if key in done:
            return done[key]
        best, witness = kernels.best_tail_block(n, prefix, cap)
        if best < 0:
            raise StepCapExceeded(
                f"no 1 appended within {cap} steps from {''.join(map(str, witness))}")
        if checkpoint:
            with lock, open(checkpoint, "a") as fh:
                fh.write(f"{key} {best} {''.join(map(str, witness))}\n")
        return best, witness

    results = map_partitions(run, shards, workers=workers, progress=progress)
    return merge_shards(results)


def merge_shards(results):
    """Higher tail wins; ties go to the lexicographically smaller witness."""
    best, witness = -1, None
    for b, w in results:
        if b > best or (b == best and list(w) < list(witness)):
            best, witness = b, list(w)
    return best, witness
