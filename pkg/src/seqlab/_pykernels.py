"""Pure-Python versions of the compiled kernels in ``_ckernels.pyx``.

Same signatures, same visiting order and same floating-point operation
order, so both backends return identical results.
"""
import math

import numpy as np


def _curl(s, L):
    best = 1
    l = 1
    while l * (best + 1) <= L:
        y = s[L - l : L]
        k = 1
        while (k + 1) * l <= L and s[L - (k + 1) * l : L - k * l] == y:
            k += 1
        if k > best:
            best = k
        l += 1
    return best


def _extend(buf, n, cap):
    L = n
    while True:
        c = _curl(buf, L)
        if c == 1:
            return L
        if L - n >= cap:
            return -1
        buf.append(c)
        L += 1


def curling_number(seq):
    seq = list(seq)
    if not seq:
        raise ValueError("curling number of an empty string")
    return _curl(seq, len(seq))


def extend_until_one(initial, cap):
    buf = list(initial)
    tail = _extend(buf, len(buf), cap)
    if tail < 0:
        return -1, buf
    return tail, buf + [1]


def best_tail_block(n, prefix, cap):
    prefix = list(prefix)
    free_len = n - len(prefix)
    best = -1
    best_mask = 0
    for mask in range(1 << free_len):
        init = prefix + [3 if (mask >> (free_len - 1 - i)) & 1 else 2 for i in range(free_len)]
        tail = _extend(init, n, cap)
        if tail < 0:
            return -1, init[:n]
        if tail > best:
            best, best_mask = tail, mask
    witness = prefix + [3 if (best_mask >> (free_len - 1 - i)) & 1 else 2 for i in range(free_len)]
    return best, witness


def gijswijt(k):
    if k < 1:
        return []
    buf = [1]
    for L in range(1, k):
        buf.append(_curl(buf, L))
    return buf


def held_karp(dist):
    d = [list(map(float, row)) for row in dist]
    n = len(d)
    if n <= 1:
        return 0.0
    if n == 2:
        return d[0][1] + d[1][0]
    m = n - 1
    full = (1 << m) - 1
    dp = [[0.0] * m for _ in range(full + 1)]
    for mask in range(1, full + 1):
        row = dp[mask]
        for j in range(m):
            if not (mask >> j) & 1:
                continue
            prev = mask ^ (1 << j)
            if prev == 0:
                row[j] = d[0][j + 1]
                continue
            best = math.inf
            prow = dp[prev]
            for k in range(m):
                if (prev >> k) & 1:
                    cand = prow[k] + d[k + 1][j + 1]
                    if cand < best:
                        best = cand
            row[j] = best
    best = math.inf
    for j in range(m):
        cand = dp[full][j] + d[j + 1][0]
        if cand < best:
            best = cand
    return best


def _torus_matrix(pts):
    n = len(pts)
    d = [[0.0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            dx = abs(pts[i][0] - pts[j][0])
            if 1.0 - dx < dx:
                dx = 1.0 - dx
            dy = abs(pts[i][1] - pts[j][1])
            if 1.0 - dy < dy:
                dy = 1.0 - dy
            d[i][j] = d[j][i] = math.sqrt(dx * dx + dy * dy)
    return d


def tour_lengths(points):
    pts = np.asarray(points, dtype=np.float64)
    out = np.zeros(pts.shape[0], dtype=np.float64)
    if pts.ndim != 3 or pts.shape[1] <= 1:
        return out
    for t, inst in enumerate(pts.tolist()):
        out[t] = held_karp(_torus_matrix(inst))
    return out


def _persistence(n):
    steps = 0
    while n >= 10:
        p = 1
        while n:
            p *= n % 10
            n //= 10
        n = p
        steps += 1
    return steps


def persistence_scan(lo, hi, p):
    for n in range(lo, hi):
        if _persistence(n) == p:
            return n
    return -1


_POW = np.array([[a**b for b in range(10)] for a in range(10)], dtype=np.int64)
# products stay below (hi + 1) * 9**9, which must fit in int64
_VECTOR_LIMIT = 2 * 10**10
_CHUNK = 1 << 18


def _powertrain_fixed_slow(n):
    if n < 10:
        return True
    s = str(n)
    prod = 1
    for i in range(0, len(s) - 1, 2):
        prod *= int(s[i]) ** int(s[i + 1])
    if len(s) % 2:
        prod *= int(s[-1])
    return prod == n


def powertrain_fixed_scan(lo, hi):
    """Vectorised over blocks of equal digit count with saturating products."""
    if hi > _VECTOR_LIMIT:
        return [n for n in range(lo, hi) if _powertrain_fixed_slow(n)]
    out = []
    a = lo
    while a < hi:
        nd = len(str(a))
        b = min(hi, 10**nd, a + _CHUNK)
        ns = np.arange(a, b, dtype=np.int64)
        if nd == 1:
            out.extend(ns.tolist())
            a = b
            continue
        digits = [(ns // 10 ** (nd - 1 - i)) % 10 for i in range(nd)]
        cap = ns + 1
        prod = np.ones_like(ns)
        for i in range(0, nd - 1, 2):
            prod = np.minimum(prod * _POW[digits[i], digits[i + 1]], cap)
        if nd % 2:
            prod = np.minimum(prod * digits[-1], cap)
        out.extend(ns[prod == ns].tolist())
        a = b
    return out
