# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; same signatures and results as ``_kernels_py``.

Exact kernels use 128-bit intermediates for the sign test.  Callers must keep
``(2S + L + 1) * max|value| < 2**62``; ``kernels.fits_int64`` checks this.
"""
import numpy as np

BACKEND = "cython"

ctypedef long long i64

cdef extern from *:
    ctypedef long long i128 "__int128"


cdef inline int qsign(i64 a, i64 b, i64 L, i64 S, i64 disc) noexcept nogil:
    if b == 0:
        return (a > 0) - (a < 0)
    cdef i128 u = <i128>2 * S * a - <i128>L * b
    if u >= 0 and b > 0:
        return 1
    if u <= 0 and b < 0:
        return -1
    cdef i128 lhs = u * u
    cdef i128 rhs = <i128>b * b * disc
    if u > 0:
        return (lhs > rhs) - (lhs < rhs)
    return (rhs > lhs) - (rhs < lhs)


def extreme_float(const double[::1] xs):
    cdef Py_ssize_t n = xs.shape[0], i
    cdef double d, hi = -1e300, lo = 1e300
    with nogil:
        for i in range(n):
            d = <double>(i + 1) / n - xs[i]
            if d > hi:
                hi = d
            if d < lo:
                lo = d
    return 1.0 / n + hi - lo


def star_float(const double[::1] xs):
    cdef Py_ssize_t n = xs.shape[0], i
    cdef double d, best = 0.0
    with nogil:
        for i in range(n):
            d = xs[i] - <double>(2 * i + 1) / (2 * n)
            if d < 0:
                d = -d
            if d > best:
                best = d
    return 1.0 / (2 * n) + best


def oracle_float(const double[::1] ends, const i64[::1] mult, i64 n):
    cdef Py_ssize_t m = ends.shape[0], a, b, k
    cdef i64[::1] cum = np.zeros(m + 1, dtype=np.int64)
    cdef i64 cnt
    cdef i64 c[4]
    cdef double lam, v, best = 0.0
    for a in range(m):
        cum[a + 1] = cum[a] + mult[a]
    with nogil:
        for a in range(m):
            for b in range(a, m):
                lam = ends[b] - ends[a]
                c[0] = cum[b + 1] - cum[a]
                c[1] = cum[b] - cum[a]
                c[2] = cum[b + 1] - cum[a + 1]
                c[3] = cum[b] - cum[a + 1]
                for k in range(4):
                    cnt = c[k]
                    if cnt < 0:
                        continue
                    v = <double>cnt / n - lam
                    if v < 0:
                        v = -v
                    if v > best:
                        best = v
    return best


def radical_inverse_float(i64 start, i64 count, i64 base):
    out = np.empty(count, dtype=np.float64)
    cdef double[::1] o = out
    cdef Py_ssize_t k
    cdef i64 v
    cdef double acc, scale
    with nogil:
        for k in range(count):
            v = start + k
            acc = 0.0
            scale = 1.0 / base
            while v:
                acc += (v % base) * scale
                v //= base
                scale /= base
            o[k] = acc
    return out


def extreme_exact(const i64[::1] X, const i64[::1] Y, i64 D, i64 L, i64 S):
    cdef Py_ssize_t n = X.shape[0], i
    cdef i64 disc = L * L + 4 * S
    cdef i64 a, b, ha, hb, la, lb
    with nogil:
        ha = la = D - n * X[0]
        hb = lb = -n * Y[0]
        for i in range(1, n):
            a = (i + 1) * D - n * X[i]
            b = -n * Y[i]
            if qsign(a - ha, b - hb, L, S, disc) > 0:
                ha = a
                hb = b
            if qsign(a - la, b - lb, L, S, disc) < 0:
                la = a
                lb = b
    return int(ha - la + D), int(hb - lb)


def star_exact(const i64[::1] X, const i64[::1] Y, i64 D, i64 L, i64 S):
    cdef Py_ssize_t n = X.shape[0], i
    cdef i64 disc = L * L + 4 * S
    cdef i64 a, b, ba = 0, bb = 0
    with nogil:
        for i in range(n):
            a = 2 * n * X[i] - (2 * i + 1) * D
            b = 2 * n * Y[i]
            if qsign(a, b, L, S, disc) < 0:
                a = -a
                b = -b
            if qsign(a - ba, b - bb, L, S, disc) > 0:
                ba = a
                bb = b
    return int(ba + D), int(bb)


def oracle_exact(const i64[::1] EX, const i64[::1] EY, const i64[::1] mult,
                 i64 n, i64 D, i64 L, i64 S):
    cdef Py_ssize_t m = EX.shape[0], a, b, k
    cdef i64 disc = L * L + 4 * S
    cdef i64[::1] cum = np.zeros(m + 1, dtype=np.int64)
    cdef i64 c[4]
    cdef i64 dx, dy, p, q, bp = 0, bq = 0
    for a in range(m):
        cum[a + 1] = cum[a] + mult[a]
    with nogil:
        for a in range(m):
            for b in range(a, m):
                dx = n * (EX[b] - EX[a])
                dy = n * (EY[b] - EY[a])
                c[0] = cum[b + 1] - cum[a]
                c[1] = cum[b] - cum[a]
                c[2] = cum[b + 1] - cum[a + 1]
                c[3] = cum[b] - cum[a + 1]
                for k in range(4):
                    if c[k] < 0:
                        continue
                    p = c[k] * D - dx
                    q = -dy
                    if qsign(p, q, L, S, disc) < 0:
                        p = -p
                        q = -q
                    if qsign(p - bp, q - bq, L, S, disc) > 0:
                        bp = p
                        bq = q
    return int(bp), int(bq)
