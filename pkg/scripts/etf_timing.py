"""Time the eigen route against the fast path and report their Gram gap."""

import argparse
import time

import numpy as np

from kangle import etf_fast_path, etf_via_eig
from kangle.linalg import frobenius_distance


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--dims", type=int, nargs="+", default=[8, 16, 32, 64, 128])
    ap.add_argument("--reps", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = np.random.default_rng(args.seed)
    etf_via_eig(np.ones(3))  # trigger JIT compilation outside the timings
    print(f"{'d':>5} {'eig (ms)':>10} {'fast (ms)':>10} {'max gap':>10}")
    for d in args.dims:
        t_eig = t_fast = gap = 0.0
        for _ in range(args.reps):
            x = np.exp(2j * np.pi * rng.random(d + 1))
            t0 = time.perf_counter()
            a = etf_via_eig(x)
            t1 = time.perf_counter()
            b = etf_fast_path(x)
            t2 = time.perf_counter()
            t_eig += t1 - t0
            t_fast += t2 - t1
            gap = max(gap, frobenius_distance(a.gram(), b.gram()))
        print(f"{d:>5} {1e3 * t_eig / args.reps:>10.2f} {1e3 * t_fast / args.reps:>10.2f} {gap:>10.1e}")


if __name__ == "__main__":
    main()
