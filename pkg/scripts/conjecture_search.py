"""Exhaustive z'/z search over binary strings, one row per length bound.

    python scripts/conjecture_search.py --max-len 18 --workers 4
"""

import argparse
import json
import time

from pdlz.lab import max_ratio_search


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-len", type=int, default=16)
    ap.add_argument("--engine", default="naive", choices=["naive", "indexed"])
    ap.add_argument("--workers", type=int, default=None)
    ap.add_argument("--json", help="write the final result here")
    args = ap.parse_args()

    print("max_len\tstrings\tbest\twitnesses\tseconds")
    res = None
    for L in range(1, args.max_len + 1):
        t0 = time.perf_counter()
        res = max_ratio_search(L, args.engine, args.workers)
        dt = time.perf_counter() - t0
        print(f"{L}\t{res.n_strings}\t{res.best_ratio}\t{len(res.witnesses)}\t{dt:.1f}")
        if not res.conjecture_holds:
            print("COUNTEREXAMPLE", res.witnesses[:5], res.dominance_violations[:5])
            raise SystemExit(1)
    if args.json and res is not None:
        with open(args.json, "w") as fh:
            json.dump(res.to_dict(), fh, indent=1)


if __name__ == "__main__":
    main()
