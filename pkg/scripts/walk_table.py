#!/usr/bin/env python3
"""Print the walk table and moat separation for a norm bound.

Example:
    python3 scripts/walk_table.py --norm-max 100
"""

import argparse
import math

from gmoat.core import distance_sq
from gmoat.moat import moat_report
from gmoat.sieve import count_per_slice, sieve_octant
from gmoat.walker import verify_coverage, walk_all


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--norm-max", type=int, default=100)
    ap.add_argument("--cramer-c", type=float, default=1.0)
    ap.add_argument("--reflect-octant", action="store_true",
                    help="mirror across x=y before the moat analysis")
    args = ap.parse_args()

    prime_set = sieve_octant(args.norm_max)
    paths = walk_all(prime_set, args.cramer_c)

    print(f"norm_max {args.norm_max}: {len(prime_set)} octant primes, {len(paths)} paths")
    for path in paths:
        line = "none" if path.line is None else f"{path.line.slope_num}/{path.line.slope_den}"
        print(f"\npath {path.index}  (fitted line slope {line})")
        sel = path.selected_members()
        for p, q in zip(sel, sel[1:]):
            print(f"  {p}  ->  step {math.sqrt(distance_sq(p, q)):g}")
        print(f"  {sel[-1]}")
        for orphan in path.orphans_absorbed:
            print(f"  {orphan}  (absorbed orphan)")

    print("\nper-path counts:", count_per_slice(paths))
    report = verify_coverage(paths, prime_set)
    print(f"coverage: partition={report.is_partition} orphans={report.orphan_count}")

    max_step = max(
        (distance_sq(p, q) for path in paths
         for p, q in zip(path.selected_members(), path.selected_members()[1:])),
        default=1,
    )
    moat = moat_report(prime_set, max_step, reflect_octant=args.reflect_octant)
    if moat.left:
        print(
            f"\nmoat at step bound sqrt({moat.threshold_sq}): width sqrt({moat.width_sq})"
            f"\n  separated side: {[str(z) for z in moat.left]}"
        )
    else:
        print(f"\nno separation at step bound sqrt({moat.threshold_sq})")


if __name__ == "__main__":
    main()
