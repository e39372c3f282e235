"""Reference kernels in Python and numpy.

Exact kernels take points ``(X[i] + Y[i]*beta) / D`` as integer arrays, already
sorted ascending, and return integer pairs ``(P, Q)`` standing for
``P + Q*beta`` over a documented scale.  The compiled module implements the
same functions with the same signatures.
"""
from __future__ import annotations

import numpy as np

BACKEND = "python"


def _sign(a: int, b: int, L: int, S: int, disc: int) -> int:
    if b == 0:
        return (a > 0) - (a < 0)
    u = 2 * S * a - L * b
    if u >= 0 and b > 0:
        return 1
    if u <= 0 and b < 0:
        return -1
    lhs, rhs = u * u, b * b * disc
    if u > 0:
        return (lhs > rhs) - (lhs < rhs)
    return (rhs > lhs) - (rhs < lhs)


# ------------------------------------------------------------------ floats

def extreme_float(xs) -> float:
    xs = np.asarray(xs, dtype=np.float64)
    n = len(xs)
    d = np.arange(1, n + 1) / n - xs
    return 1.0 / n + float(d.max() - d.min())


def star_float(xs) -> float:
    xs = np.asarray(xs, dtype=np.float64)
    n = len(xs)
    return 1.0 / (2 * n) + float(np.abs(xs - (2 * np.arange(1, n + 1) - 1) / (2 * n)).max())


def oracle_float(ends, mult, n: int) -> float:
    """Brute force over all intervals with ends in ``ends`` (sorted, unique)."""
    ends = np.asarray(ends, dtype=np.float64)
    cum = np.concatenate(([0], np.cumsum(mult)))
    best = 0.0
    m = len(ends)
    for a in range(m):
        lam = ends[a:] - ends[a]
        hi = cum[a + 1:]
        lo = cum[a:m]
        for cnt in (hi - cum[a], lo - cum[a], hi - cum[a + 1], lo - cum[a + 1]):
            # the open interval (e_a, e_a) is empty, not degenerate
            ok = cnt >= 0
            if ok.any():
                best = max(best, float(np.abs(cnt[ok] / n - lam[ok]).max()))
    return best


def radical_inverse_float(start: int, count: int, base: int) -> np.ndarray:
    n = np.arange(start, start + count, dtype=np.int64)
    out = np.zeros(count)
    scale = 1.0 / base
    while n.any():
        n, d = np.divmod(n, base)
        out += d * scale
        scale /= base
    return out


# ------------------------------------------------------------------- exact

def extreme_exact(X, Y, D: int, L: int, S: int) -> tuple[int, int]:
    """D_N = (P + Q*beta) / (N*D) for the sorted-points identity."""
    n = len(X)
    disc = L * L + 4 * S
    hi = lo = None
    for i in range(n):
        a = (i + 1) * D - n * int(X[i])
        b = -n * int(Y[i])
        if hi is None:
            hi = lo = (a, b)
            continue
        if _sign(a - hi[0], b - hi[1], L, S, disc) > 0:
            hi = (a, b)
        if _sign(a - lo[0], b - lo[1], L, S, disc) < 0:
            lo = (a, b)
    return hi[0] - lo[0] + D, hi[1] - lo[1]


def star_exact(X, Y, D: int, L: int, S: int) -> tuple[int, int]:
    """D*_N = (P + Q*beta) / (2*N*D)."""
    n = len(X)
    disc = L * L + 4 * S
    best = (0, 0)
    for i in range(n):
        a = 2 * n * int(X[i]) - (2 * i + 1) * D
        b = 2 * n * int(Y[i])
        if _sign(a, b, L, S, disc) < 0:
            a, b = -a, -b
        if _sign(a - best[0], b - best[1], L, S, disc) > 0:
            best = (a, b)
    return best[0] + D, best[1]


def oracle_exact(EX, EY, mult, n: int, D: int, L: int, S: int) -> tuple[int, int]:
    """Brute-force D_N = (P + Q*beta) / (n*D) over sorted unique ends."""
    m = len(EX)
    if not any(EY):
        return _oracle_rational(np.asarray(EX), np.asarray(mult), n, D), 0
    disc = L * L + 4 * S
    cum = [0]
    for c in mult:
        cum.append(cum[-1] + int(c))
    EX = [int(v) for v in EX]
    EY = [int(v) for v in EY]
    best = (0, 0)
    for a in range(m):
        for b in range(a, m):
            dx = n * (EX[b] - EX[a])
            dy = n * (EY[b] - EY[a])
            for cnt in (cum[b + 1] - cum[a], cum[b] - cum[a],
                        cum[b + 1] - cum[a + 1], cum[b] - cum[a + 1]):
                if cnt < 0:
                    continue
                p, q = cnt * D - dx, -dy
                if _sign(p, q, L, S, disc) < 0:
                    p, q = -p, -q
                if _sign(p - best[0], q - best[1], L, S, disc) > 0:
                    best = (p, q)
    return best


def _oracle_rational(EX, mult, n: int, D: int) -> int:
    m = len(EX)
    big = int(np.abs(EX).max(initial=0)) * n + n * D
    dtype = np.int64 if big < 2 ** 61 else object
    EX = EX.astype(dtype)
    cum = np.concatenate(([0], np.cumsum(mult))).astype(dtype)
    best = 0
    for a in range(m):
        dx = n * (EX[a:] - EX[a])
        hi = cum[a + 1:]
        lo = cum[a:m]
        for cnt in (hi - cum[a], lo - cum[a], hi - cum[a + 1], lo - cum[a + 1]):
            v = cnt * D - dx
            v = v[cnt >= 0]
            if len(v):
                best = max(best, int(np.abs(v).max()))
    return best
