"""Deterministic fan-out of independent partitions over a thread pool.

The compiled kernels release the GIL, so threads give real speedup there.
Results always come back in partition order, whatever the worker count.
"""
from concurrent.futures import ThreadPoolExecutor


def split_range(lo, hi, parts):
    """Split ``[lo, hi)`` into ``parts`` contiguous ``(a, b)`` pieces."""
    parts = max(1, min(parts, hi - lo)) if hi > lo else 1
    step, extra = divmod(hi - lo, parts)
    out = []
    a = lo
    for i in range(parts):
        b = a + step + (1 if i < extra else 0)
        out.append((a, b))
        a = b
    return out


def map_partitions(fn, parts, workers=1, progress=None):
    """``[fn(p) for p in parts]``, optionally on ``workers`` threads.

    ``progress(done, total)`` is called after each finished partition.
    """
    parts = list(parts)
    total = len(parts)
    if workers <= 1 or total <= 1:
        out = []
        for i, p in enumerate(parts):
            out.append(fn(p))
            if progress:
                progress(i + 1, total)
        return out
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(fn, p) for p in parts]
        out = []
        for i, f in enumerate(futures):
            out.append(f.result())
            if progress:
                progress(i + 1, total)
        return out
