#!/usr/bin/env python3
"""Compare the candidate-check cost of the three search strategies.

Example:
    python3 scripts/bench_compare.py --bounds 100 1000 10000
"""

import argparse
import math

from gmoat.bench import METHODS, run_bench


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--bounds", type=int, nargs="+", default=[100, 1000, 10_000])
    ap.add_argument("--cramer-c", type=float, default=1.0)
    args = ap.parse_args()

    print(f"{'norm_max':>9} {'method':>12} {'checks':>9} {'of quarter-circle':>18} {'wall':>9}")
    for norm_max in args.bounds:
        quarter = math.pi * norm_max / 4  # coarse all-points estimate
        for method in METHODS:
            result = run_bench(method, norm_max, args.cramer_c)
            print(
                f"{norm_max:>9} {method:>12} {result.checks:>9}"
                f" {result.checks / quarter:>17.1%}"
                f" {result.wall_ns / 1e6:>7.1f}ms"
            )


if __name__ == "__main__":
    main()
