# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops. Signatures mirror :mod:`seqlab._pykernels` exactly."""
from libc.stdlib cimport malloc, free
from libc.math cimport sqrt, fabs, HUGE_VAL
from libc.stdint cimport int64_t, uint64_t

import numpy as np


# --- curling -------------------------------------------------------------

cdef int _curl(const int* s, int L) noexcept nogil:
    cdef int best = 1
    cdef int l = 1
    cdef int k, i, off
    cdef bint same
    while l * (best + 1) <= L:
        k = 1
        while (k + 1) * l <= L:
            off = L - (k + 1) * l
            same = True
            for i in range(l):
                if s[off + i] != s[L - l + i]:
                    same = False
                    break
            if not same:
                break
            k += 1
        if k > best:
            best = k
        l += 1
    return best


cdef int _extend(int* buf, int n, int cap) noexcept nogil:
    """Extend buf[:n] in place; return the tail length, or -1 past the cap."""
    cdef int L = n
    cdef int c
    while True:
        c = _curl(buf, L)
        if c == 1:
            return L
        if L - n >= cap:
            return -1
        buf[L] = c
        L += 1


def curling_number(seq):
    cdef int L = len(seq)
    if L == 0:
        raise ValueError("curling number of an empty string")
    cdef int* buf = <int*>malloc(L * sizeof(int))
    cdef int i
    try:
        for i in range(L):
            buf[i] = seq[i]
        return _curl(buf, L)
    finally:
        free(buf)


def extend_until_one(initial, int cap):
    """Return ``(tail_length, extended)``; ``tail_length == -1`` past the cap."""
    cdef int n = len(initial)
    cdef int* buf = <int*>malloc((n + cap + 1) * sizeof(int))
    cdef int i, tail
    try:
        for i in range(n):
            buf[i] = initial[i]
        with nogil:
            tail = _extend(buf, n, cap)
        if tail < 0:
            return -1, [buf[i] for i in range(n + cap)]
        return tail, [buf[i] for i in range(tail)] + [1]
    finally:
        free(buf)


def best_tail_block(int n, prefix, int cap):
    """Best tail over all {2,3} strings of length n starting with ``prefix``.

    Strings are visited in lexicographic order and only a strictly larger
    tail replaces the incumbent, so the witness is the smallest one.
    Returns ``(best, witness)``, or ``(-1, offending_string)`` past the cap.
    """
    cdef int p = len(prefix)
    cdef int free_len = n - p
    cdef int* buf = <int*>malloc((n + cap + 1) * sizeof(int))
    cdef int* init = <int*>malloc((n + 1) * sizeof(int))
    cdef int best = -1
    cdef uint64_t mask, best_mask = 0, total = (<uint64_t>1) << free_len
    cdef int i, tail
    cdef bint overflow = False
    try:
        for i in range(p):
            init[i] = prefix[i]
        with nogil:
            mask = 0
            while mask < total:
                for i in range(free_len):
                    init[p + i] = 3 if (mask >> (free_len - 1 - i)) & 1 else 2
                for i in range(n):
                    buf[i] = init[i]
                tail = _extend(buf, n, cap)
                if tail < 0:
                    overflow = True
                    best_mask = mask
                    break
                if tail > best:
                    best = tail
                    best_mask = mask
                mask += 1
        witness = [prefix[i] for i in range(p)]
        for i in range(free_len):
            witness.append(3 if (best_mask >> (free_len - 1 - i)) & 1 else 2)
        if overflow:
            return -1, witness
        return best, witness
    finally:
        free(buf)
        free(init)


def gijswijt(int k):
    if k < 1:
        return []
    cdef int* buf = <int*>malloc(k * sizeof(int))
    cdef int L
    try:
        buf[0] = 1
        with nogil:
            for L in range(1, k):
                buf[L] = _curl(buf, L)
        return [buf[L] for L in range(k)]
    finally:
        free(buf)


# --- torus TSP -----------------------------------------------------------

cdef double _held_karp(const double* d, int n, double* dp) noexcept nogil:
    """Shortest closed tour; point 0 fixed as the start. ``dp`` holds
    ``2**(n-1) * (n-1)`` doubles."""
    cdef int m = n - 1
    cdef int full, mask, j, k, prev
    cdef double best, cand
    if n <= 1:
        return 0.0
    if n == 2:
        return d[1] + d[n]
    full = (1 << m) - 1
    for mask in range(1, full + 1):
        for j in range(m):
            if not (mask >> j) & 1:
                continue
            prev = mask ^ (1 << j)
            if prev == 0:
                dp[mask * m + j] = d[j + 1]
                continue
            best = HUGE_VAL
            for k in range(m):
                if (prev >> k) & 1:
                    cand = dp[prev * m + k] + d[(k + 1) * n + j + 1]
                    if cand < best:
                        best = cand
            dp[mask * m + j] = best
    best = HUGE_VAL
    for j in range(m):
        cand = dp[full * m + j] + d[(j + 1) * n]
        if cand < best:
            best = cand
    return best


cdef void _torus_matrix(const double* pts, int n, double* d) noexcept nogil:
    cdef int i, j
    cdef double dx, dy
    for i in range(n):
        d[i * n + i] = 0.0
        for j in range(i + 1, n):
            dx = fabs(pts[2 * i] - pts[2 * j])
            if 1.0 - dx < dx:
                dx = 1.0 - dx
            dy = fabs(pts[2 * i + 1] - pts[2 * j + 1])
            if 1.0 - dy < dy:
                dy = 1.0 - dy
            d[i * n + j] = sqrt(dx * dx + dy * dy)
            d[j * n + i] = d[i * n + j]


def held_karp(dist):
    """Optimal closed tour length for a dense symmetric distance matrix."""
    cdef double[:, ::1] d = np.ascontiguousarray(dist, dtype=np.float64)
    cdef int n = d.shape[0]
    if n <= 1:
        return 0.0
    cdef double* dp = <double*>malloc((<size_t>1 << (n - 1)) * (n - 1) * sizeof(double))
    cdef double out
    try:
        with nogil:
            out = _held_karp(&d[0, 0], n, dp)
        return out
    finally:
        free(dp)


def tour_lengths(points):
    """Optimal torus tour length for each instance of a ``(T, n, 2)`` array."""
    cdef double[:, :, ::1] pts = np.ascontiguousarray(points, dtype=np.float64)
    cdef Py_ssize_t T = pts.shape[0]
    cdef int n = pts.shape[1]
    out = np.zeros(T, dtype=np.float64)
    cdef double[::1] res = out
    if n <= 1 or T == 0:
        return out
    cdef double* d = <double*>malloc(n * n * sizeof(double))
    cdef double* dp = <double*>malloc((<size_t>1 << (n - 1)) * (n - 1) * sizeof(double))
    cdef Py_ssize_t t
    try:
        with nogil:
            for t in range(T):
                _torus_matrix(&pts[t, 0, 0], n, d)
                res[t] = _held_karp(d, n, dp)
        return out
    finally:
        free(d)
        free(dp)


# --- digit games ---------------------------------------------------------

cdef int _persistence(uint64_t n) noexcept nogil:
    cdef int steps = 0
    cdef uint64_t p
    while n >= 10:
        p = 1
        while n:
            p *= n % 10
            n //= 10
        n = p
        steps += 1
    return steps


def persistence_scan(int64_t lo, int64_t hi, int p):
    """First ``n`` in ``[lo, hi)`` with persistence ``p``, else -1."""
    cdef int64_t n
    cdef int64_t found = -1
    with nogil:
        for n in range(lo, hi):
            if _persistence(<uint64_t>n) == p:
                found = n
                break
    return found


cdef int64_t _POW[10][10]
for _a in range(10):
    for _b in range(10):
        _POW[_a][_b] = _a ** _b  # Python ints; 0 ** 0 == 1


cdef bint _powertrain_fixed(int64_t n) noexcept nogil:
    cdef int digits[20]
    cdef int nd = 0, i
    cdef int64_t m = n, prod = 1, f
    if n < 10:
        return True
    while m:
        digits[nd] = m % 10
        m //= 10
        nd += 1
    # digits are least significant first; walk from the top
    i = nd - 1
    while i >= 0:
        if i >= 1:
            f = _POW[digits[i]][digits[i - 1]]
            i -= 2
        else:
            f = digits[i]
            i -= 1
        if f == 0:
            return False
        if prod > n // f:
            return False
        prod *= f
    return prod == n


def powertrain_fixed_scan(int64_t lo, int64_t hi):
    """All ``n`` in ``[lo, hi)`` fixed by the powertrain map."""
    cdef int64_t n = lo
    cdef int64_t found[64]
    cdef int nfound, i
    out = []
    while n < hi:
        nfound = 0
        with nogil:
            while n < hi and nfound < 64:
                if _powertrain_fixed(n):
                    found[nfound] = n
                    nfound += 1
                n += 1
        for i in range(nfound):
            out.append(found[i])
    return out
