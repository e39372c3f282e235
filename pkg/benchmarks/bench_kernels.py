"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 3]
"""
import argparse
import time

import numpy as np

from lsseq import kernels
from lsseq.algebra import common_coords, exact_sorted
from lsseq.sequences import ls_points


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def cases():
    pts = exact_sorted(ls_points(1, 1, 100_000))
    X, Y, D = common_coords(pts)
    bound = 2 * len(X) * D * (max(map(abs, X)) + max(map(abs, Y)) + D) + len(X) * D
    yield "extreme_exact  LS(1,1) N=1e5", lambda: kernels.extreme_exact(X, Y, D, 1, 1, bound=bound)

    pts2 = exact_sorted(ls_points(2, 2, 1552))
    X2, Y2, D2 = common_coords(pts2)
    EX, EY, mult = [0] + X2 + [D2], [0] + Y2 + [0], [0] + [1] * len(X2) + [0]
    b2 = 2 * len(X2) * D2 * (max(map(abs, X2)) + max(map(abs, Y2)) + D2) + len(X2) * D2
    yield "oracle_exact   LS(2,2) N=1552", lambda: kernels.oracle_exact(EX, EY, mult, len(X2), D2, 2, 2, bound=b2)

    rng = np.random.default_rng(1)
    fs = np.sort(rng.random(2000))
    ends = np.concatenate(([0.0], fs, [1.0]))
    m = np.array([0] + [1] * len(fs) + [0], dtype=np.int64)
    yield "oracle_float   N=2000", lambda: kernels.oracle_float(ends, m, len(fs))

    big = np.sort(rng.random(1_000_000))
    yield "extreme_float  N=1e6", lambda: kernels.extreme_float(big)
    yield "radical_inverse_float base 3 N=1e6", lambda: kernels.radical_inverse_float(0, 1_000_000, 3)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = [b for b in ("cython", "python") if b in kernels.available()]
    print(f"{'kernel':40s}" + "".join(f"{b:>12s}" for b in backends) + "     speedup")
    for name, fn in cases():
        row = {}
        for b in backends:
            kernels.use(b)
            row[b] = best_of(fn, args.repeat)
        line = f"{name:40s}" + "".join(f"{row[b]:11.4f}s" for b in backends)
        if len(backends) == 2:
            line += f"  {row['python'] / row['cython']:9.1f}x"
        print(line, flush=True)


if __name__ == "__main__":
    main()
