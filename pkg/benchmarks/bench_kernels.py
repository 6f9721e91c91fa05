"""Compiled vs pure-Python kernels on representative workloads.

    python benchmarks/bench_kernels.py [--repeat 3] [--quick]

Both backends are imported directly, so the ``SEQLAB_PURE_PYTHON`` switch
has no effect here. Results are checked for equality before timing is
reported.
"""
import argparse
import time

import numpy as np

from seqlab import _pykernels

try:
    from seqlab import _ckernels
except ImportError:
    _ckernels = None


def workloads(quick):
    pts = np.random.default_rng(0).random((200 if quick else 1000, 8, 2))
    return [
        ("gijswijt 3000", lambda k: list(k.gijswijt(3000))),
        ("best_tail_block n=12", lambda k: k.best_tail_block(12, [], 10**4)),
        ("extend 2223222 x200", lambda k: [k.extend_until_one([2, 2, 2, 3, 2, 2, 2], 10**4)
                                             for _ in range(200)]),
        (f"tour_lengths {len(pts)}x8", lambda k: k.tour_lengths(pts).tolist()),
        ("persistence_scan p=7", lambda k: k.persistence_scan(0, 10**7, 7)),
        ("powertrain_fixed_scan 1e5" if quick else "powertrain_fixed_scan 1e6",
         lambda k: list(k.powertrain_fixed_scan(0, 10**5 if quick else 10**6))),
    ]


def best_of(fn, backend, repeat):
    times, result = [], None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(backend)
        times.append(time.perf_counter() - t0)
    return min(times), result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="smaller inputs")
    args = ap.parse_args()
    if _ckernels is None:
        raise SystemExit("compiled extension not built; run pip install -e . first")
    print(f"{'workload':28} {'compiled s':>11} {'python s':>11} {'speedup':>9}")
    for name, fn in workloads(args.quick):
        tc, rc = best_of(fn, _ckernels, args.repeat)
        tp, rp = best_of(fn, _pykernels, args.repeat)
        if rc != rp:
            raise SystemExit(f"backends disagree on {name}")
        print(f"{name:28} {tc:11.4f} {tp:11.4f} {tp / tc:8.1f}x")


if __name__ == "__main__":
    main()
