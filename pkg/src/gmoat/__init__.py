"""Gaussian prime toolkit: sieving, path walks, moats, density, benchmarks."""

__version__ = "0.1.0"

from .core import (
    NORM_LIMIT,
    GaussInt,
    eightfold_orbit,
    gaussian_mul,
    is_gaussian_prime,
    is_gaussian_prime_bruteforce,
    is_rational_prime,
    norm,
    reflect,
)
from .sieve import PrimeSet, count_in_disk, count_per_slice, sieve_octant
from .walker import (
    BoundaryLine,
    LineFitError,
    Path,
    SearchDisk,
    build_path,
    candidate_region,
    cramer_radius,
    fit_line,
    select_next,
    verify_coverage,
    walk_all,
)
from .moat import (
    MoatReport,
    bottleneck_width_sq,
    components_at_threshold,
    explore_component,
    min_crossing_distance_sq,
    moat_report,
)
from .density import (
    annulus_density_profile,
    considered_area_probability,
    expected_primes_square,
    lattice_count_disk,
    three_square_eligible,
)
from .bench import BenchResult, run_bench

__all__ = [
    "NORM_LIMIT",
    "GaussInt",
    "eightfold_orbit",
    "gaussian_mul",
    "is_gaussian_prime",
    "is_gaussian_prime_bruteforce",
    "is_rational_prime",
    "norm",
    "reflect",
    "PrimeSet",
    "count_in_disk",
    "count_per_slice",
    "sieve_octant",
    "BoundaryLine",
    "LineFitError",
    "Path",
    "SearchDisk",
    "build_path",
    "candidate_region",
    "cramer_radius",
    "fit_line",
    "select_next",
    "verify_coverage",
    "walk_all",
    "MoatReport",
    "bottleneck_width_sq",
    "components_at_threshold",
    "explore_component",
    "min_crossing_distance_sq",
    "moat_report",
    "annulus_density_profile",
    "considered_area_probability",
    "expected_primes_square",
    "lattice_count_disk",
    "three_square_eligible",
    "BenchResult",
    "run_bench",
    "__version__",
]
