#!/usr/bin/env python3
"""Density experiments: annulus profile, circle-problem error, square model.

Example:
    python3 scripts/density_report.py --norm-max 90000 --bands 6
"""

import argparse

from gmoat.density import (
    HUXLEY_EXPONENT,
    annulus_density_profile,
    considered_area,
    considered_area_probability,
    expected_primes_square,
    gauss_error_bound,
    lattice_count_disk,
    profile_to_csv,
)
from gmoat.sieve import sieve_octant_cached


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--norm-max", type=int, default=90_000)
    ap.add_argument("--bands", type=int, default=6)
    ap.add_argument("--cache-dir", default=None,
                    help="directory for the sieve cache (sped-up reruns)")
    args = ap.parse_args()

    prime_set = sieve_octant_cached(args.norm_max, cache_dir=args.cache_dir)
    print(f"{len(prime_set)} octant primes with norm <= {args.norm_max}\n")
    print(profile_to_csv(annulus_density_profile(prime_set, args.bands)))

    print("circle-problem error vs the elementary bound:")
    print(f"  (sharper exponents are known, down to r^{HUXLEY_EXPONENT:.4f};")
    print("   only the elementary 2*sqrt(2)*pi*r bound is asserted anywhere)")
    for r in (10, 30, 100, 300, 1000):
        count = lattice_count_disk(r)
        print(
            f"  r={r:5d}  N={count.exact:9d}  error={count.error:+10.2f}"
            f"  bound={gauss_error_bound(r):9.2f}"
        )

    print("\nsquare model vs exact counts (corner moving out along the diagonal):")
    r = 21
    for a, b in ((5, 4), (50, 40), (500, 400)):
        est = expected_primes_square(a, b, r)
        prob = considered_area_probability(est.n1, r)
        print(
            f"  corner ({a},{b}) side {r}: predicted {est.predicted:8.2f}"
            f"  exact {est.empirical:4d}"
            f"  point-probability {prob:.4f} over area {considered_area(r):.1f}"
        )


if __name__ == "__main__":
    main()
