"""Optimal tours through random points on the unit flat torus, in eels.

Random coordinates come from numpy's counter-based Philox generator: trial
``t`` uses key ``seed`` and counter ``(0, 0, 0, t)``, and its ``2 * n``
uniforms are read in order (point ``i``, coordinate ``c`` at position
``2 * i + c``). Each trial is therefore a pure function of
``(seed, t)``, independent of how trials are split across workers.
"""
import math
from dataclasses import dataclass
from itertools import permutations

import mpmath
import numpy as np

from . import kernels
from .errors import OutOfRange
from .parallel import map_partitions

DEFAULT_EXACT_BOUND = 13
CHUNK = 4096  # trials per work unit; fixed so results ignore the worker count


def _eel_reference():
    with mpmath.workdps(40):
        return float((mpmath.sqrt(2) + mpmath.log(1 + mpmath.sqrt(2))) / 6)


EEL = _eel_reference()


def eel_constant():
    """Mean distance from a uniform point of the unit square to its centre."""
    return EEL


@dataclass(frozen=True)
class TorusPoint:
    x: float
    y: float

    def __post_init__(self):
        if not (0.0 <= self.x < 1.0 and 0.0 <= self.y < 1.0):
            raise ValueError(f"torus coordinates must lie in [0, 1): {self.x}, {self.y}")


@dataclass(frozen=True)
class Estimate:
    n: int
    mean_eels: float
    std_error_eels: float
    trials: int
    seed: int

    @property
    def mean_absolute(self):
        return self.mean_eels * EEL

    def as_dict(self):
        return {
            "n": self.n,
            "trials": self.trials,
            "seed": self.seed,
            "mean_eels": self.mean_eels,
            "std_error_eels": self.std_error_eels,
            "mean_absolute": self.mean_absolute,
        }


def _coords(p):
    return (p.x, p.y) if isinstance(p, TorusPoint) else (float(p[0]), float(p[1]))


def torus_distance(p, q):
    (px, py), (qx, qy) = _coords(p), _coords(q)
    dx = abs(px - qx)
    if 1.0 - dx < dx:
        dx = 1.0 - dx
    dy = abs(py - qy)
    if 1.0 - dy < dy:
        dy = 1.0 - dy
    return math.sqrt(dx * dx + dy * dy)


def distance_matrix(points):
    n = len(points)
    d = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            d[i, j] = d[j, i] = torus_distance(points[i], points[j])
    return d


def optimal_tour_length(points, bound=DEFAULT_EXACT_BOUND):
    """Shortest closed tour through ``points`` under the torus metric."""
    n = len(points)
    if not 1 <= n <= bound:
        raise OutOfRange(f"exact solver handles 1..{bound} points, got {n}")
    return float(kernels.held_karp(distance_matrix(points)))


def brute_force_tour_length(points):
    """Reference solver: every cyclic order with point 0 fixed."""
    n = len(points)
    if n <= 1:
        return 0.0
    d = distance_matrix(points)
    rest = np.array(list(permutations(range(1, n))), dtype=np.intp).reshape(-1, n - 1)
    tours = np.hstack([np.zeros((len(rest), 1), dtype=np.intp), rest])
    lengths = d[tours, np.roll(tours, -1, axis=1)].sum(axis=1)
    return float(lengths.min())


def trial_points(n, seed, trial):
    bitgen = np.random.Philox(key=seed, counter=[0, 0, 0, trial])
    return np.random.Generator(bitgen).random(2 * n).reshape(n, 2)


def _chunk_lengths(n, seed, lo, hi):
    pts = np.empty((hi - lo, n, 2))
    for t in range(lo, hi):
        pts[t - lo] = trial_points(n, seed, t)
    return kernels.tour_lengths(pts)


def tour_samples(n, trials, seed, workers=1, progress=None):
    """Optimal tour length for each of ``trials`` instances, by trial index."""
    parts = [(a, min(a + CHUNK, trials)) for a in range(0, trials, CHUNK)]
    chunks = map_partitions(lambda r: _chunk_lengths(n, seed, *r), parts,
                            workers=workers, progress=progress)
    return np.concatenate(chunks) if chunks else np.zeros(0)


def estimate_L(n, trials, seed, workers=1, bound=DEFAULT_EXACT_BOUND, progress=None):
    """Monte Carlo estimate of the expected optimal tour length, in eels."""
    if not 1 <= n <= bound:
        raise OutOfRange(f"exact solver handles 1..{bound} points, got {n}")
    if trials < 2:
        raise ValueError("need at least 2 trials")
    if seed < 0:
        raise ValueError("seed must be non-negative")
    samples = tour_samples(n, trials, seed, workers, progress)
    # fsum is exactly rounded, so the reduction order cannot matter
    mean = math.fsum(samples) / trials
    var = math.fsum((samples - mean) ** 2) / (trials - 1)
    return Estimate(n, mean / EEL, math.sqrt(var / trials) / EEL, trials, seed)
