import os
import random
import subprocess
import sys

import numpy as np
import pytest

from seqlab import _pykernels as py
from seqlab import kernels

c = pytest.importorskip("seqlab._ckernels")


def test_backend_is_compiled_by_default():
    assert kernels.BACKEND == "compiled"


def test_env_forces_python_backend():
    code = "from seqlab import kernels; print(kernels.BACKEND)"
    env = dict(os.environ, SEQLAB_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True,
                         text=True, check=True).stdout
    assert out.strip() == "python"


def test_curling_parity():
    rng = random.Random(0)
    for _ in range(3000):
        s = [rng.choice((1, 2, 3)) for _ in range(rng.randrange(1, 40))]
        assert c.curling_number(s) == py.curling_number(s)


def test_extend_parity():
    rng = random.Random(1)
    for _ in range(300):
        s = [rng.choice((2, 3)) for _ in range(rng.randrange(1, 12))]
        assert c.extend_until_one(s, 1000) == py.extend_until_one(s, 1000)
    assert c.extend_until_one([2, 2, 2, 3, 2, 2], 3) == py.extend_until_one([2, 2, 2, 3, 2, 2], 3)


def test_best_tail_block_parity():
    for n in (6, 9, 12):
        for prefix in ([], [2], [3, 2], [2, 3, 3]):
            assert c.best_tail_block(n, prefix, 10**4) == py.best_tail_block(n, prefix, 10**4)


def test_gijswijt_parity():
    assert list(c.gijswijt(1500)) == list(py.gijswijt(1500))


def test_tour_parity_bitwise():
    pts = np.random.default_rng(3).random((40, 7, 2))
    assert np.array_equal(c.tour_lengths(pts), py.tour_lengths(pts))
    d = np.random.default_rng(4).random((8, 8))
    d = d + d.T
    assert c.held_karp(d) == py.held_karp(d)


def test_persistence_parity():
    for p in range(0, 6):
        assert c.persistence_scan(0, 10**4, p) == py.persistence_scan(0, 10**4, p)
    assert c.persistence_scan(10, 20, 9) == py.persistence_scan(10, 20, 9) == -1


def test_powertrain_parity():
    assert list(c.powertrain_fixed_scan(0, 200000)) == list(py.powertrain_fixed_scan(0, 200000))
    assert list(c.powertrain_fixed_scan(2500, 2600)) == [2592]
