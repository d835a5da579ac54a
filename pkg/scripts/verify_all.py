"""Run every verification harness at desk scale and write JSON reports.

    python scripts/verify_all.py --out results/
"""

import argparse
import json
import time
from pathlib import Path

from pdlz.lab import cross_check_engines, verify_lemmas, verify_primitive_square, verify_structure


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", type=Path, default=Path("results"))
    ap.add_argument("--k-max", type=int, default=24, help="structure checks, indexed engine")
    ap.add_argument("--naive-k-max", type=int, default=14)
    ap.add_argument("--seed", type=int, default=42)
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    jobs = {
        "lemmas": lambda: verify_lemmas(0, 20),
        "primitive_square": lambda: verify_primitive_square(12),
        "structure_indexed": lambda: verify_structure(5, args.k_max, "indexed"),
        "structure_naive": lambda: verify_structure(5, args.naive_k_max, "naive"),
        "engines": lambda: cross_check_engines(14, 1000, 2000, args.seed),
    }
    failed = 0
    for name, job in jobs.items():
        t0 = time.perf_counter()
        rep = job()
        dt = time.perf_counter() - t0
        (args.out / f"{name}.json").write_text(json.dumps(rep.to_dict(), indent=1))
        s = rep.summary
        print(f"{name:<20} {s['pass']:>5}/{s['total']:<5} {'ok' if rep.ok else 'FAILED'}  {dt:7.1f} s")
        failed += not rep.ok
    raise SystemExit(1 if failed else 0)


if __name__ == "__main__":
    main()
