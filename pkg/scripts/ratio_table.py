"""Print predicted and measured z, z' for S_k side by side.

    python scripts/ratio_table.py --k-max 24
"""

import argparse
import time

from pdlz import theory
from pdlz.factor import lz77, lzend
from pdlz.seqgen import pd_doubling


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--k-min", type=int, default=5)
    ap.add_argument("--k-max", type=int, default=24)
    ap.add_argument("--engine", default="indexed", choices=["naive", "indexed"])
    args = ap.parse_args()

    print("k\tn\tf\tz\tz'\tz_meas\tz'_meas\tratio\t2-ratio\tsecs")
    for k in range(args.k_min, args.k_max + 1):
        S = pd_doubling(k).seq
        t0 = time.perf_counter()
        z, zp = lz77(S, args.engine).count, lzend(S, args.engine).count
        dt = time.perf_counter() - t0
        r = theory.ratio(k)
        print(
            f"{k}\t{len(S)}\t{theory.f_of_k(k)}\t{theory.lzph(k)}\t{theory.lzeph(k)}\t{z}\t{zp}\t"
            f"{r}\t{float(2 - r):.4f}\t{dt:.2f}"
        )


if __name__ == "__main__":
    main()
