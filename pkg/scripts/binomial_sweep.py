"""Tabulate the binomial construction: observed angle count against k."""

import argparse
import math

from kangle import angle_spectrum, binomial_frame, check_tight, frame_potential


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--dmax", type=int, default=9)
    args = ap.parse_args()
    print(f"{'d':>3} {'k':>3} {'N':>6} {'bound':>9} {'FP-N^2/d':>10} {'k_hat':>6}  moduli")
    for d in range(2, args.dmax + 1):
        for k in range(1, d + 1):
            frame = binomial_frame(d, k)
            n = math.comb(d + 1, k)
            spec = angle_spectrum(frame)
            gap = frame_potential(frame).value - n * n / d
            bound = check_tight(frame).frame_bound
            flag = "" if spec.k_hat == k else "  <- collapsed"
            moduli = ", ".join(f"{v:.4f}" for v in spec.values)
            print(f"{d:>3} {k:>3} {n:>6} {bound:>9.4f} {gap:>10.1e} {spec.k_hat:>6}  {moduli}{flag}")


if __name__ == "__main__":
    main()
