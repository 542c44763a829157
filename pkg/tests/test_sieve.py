import pytest
from hypothesis import given
from hypothesis import strategies as st

from gmoat.core import GaussInt
from gmoat.sieve import (
    PrimeSet,
    count_in_disk,
    count_per_slice,
    format_csv,
    load_cache,
    parse_csv,
    save_cache,
    sieve_octant,
    sieve_octant_cached,
)
from gmoat.walker import walk_all

from _oracles import octant_sieve
from knownvalues import PRIMES_100, SIEVE_50_AXES, SIEVE_100_CSV


def test_norm_100_has_exactly_the_twelve_known_primes(set100):
    assert list(set100) == PRIMES_100


def test_smallest_possible_sieve():
    assert list(sieve_octant(2)) == [GaussInt(1, 1)]


def test_axis_primes_appear_only_on_request():
    with_axes = sieve_octant(50, include_axes=True)
    assert list(with_axes) == SIEVE_50_AXES
    assert GaussInt(3, 0) in with_axes
    assert GaussInt(7, 0) in with_axes
    without = sieve_octant(50, include_axes=False)
    assert all(z.b >= 1 for z in without)
    assert [z for z in with_axes if z.b >= 1] == list(without)


def test_bounds_99_and_100_agree():
    # no first-octant prime has norm exactly 100, so the two bounds coincide
    assert list(sieve_octant(99)) == list(sieve_octant(100))


def test_rejects_bounds_below_two():
    with pytest.raises(ValueError):
        sieve_octant(1)


def test_rejects_bounds_beyond_supported_width():
    with pytest.raises(OverflowError):
        sieve_octant(2**62 + 1)


@pytest.mark.parametrize("norm_max", [2, 17, 100, 1000, 10_000])
@pytest.mark.parametrize("include_axes", [False, True])
def test_matches_pointwise_filter(norm_max, include_axes):
    assert list(sieve_octant(norm_max, include_axes)) == octant_sieve(norm_max, include_axes)


def test_set_is_sorted_and_duplicate_free(set10k):
    keys = [(z.a * z.a + z.b * z.b, z.a, z.b) for z in set10k]
    assert keys == sorted(keys)
    assert len(set(set10k)) == len(set10k)


@given(st.integers(min_value=2, max_value=3000), st.integers(min_value=0, max_value=3000))
def test_growing_the_bound_only_adds_primes(n1, delta):
    small = set(sieve_octant(n1))
    large = set(sieve_octant(n1 + delta))
    assert small <= large


# -- count_in_disk -----------------------------------------------------------


def test_disk_counts(set100):
    assert count_in_disk(set100, 100) == 12
    assert count_in_disk(set100, 2) == 1
    assert count_in_disk(set100, 1) == 0


def test_disk_count_monotone(set100):
    counts = [count_in_disk(set100, r) for r in range(1, 101)]
    assert counts == sorted(counts)
    assert counts[-1] == len(set100)


def test_disk_count_beyond_sieve_range_is_an_error(set100):
    with pytest.raises(ValueError, match="exceeds the sieved range"):
        count_in_disk(set100, 101)


# -- count_per_slice ---------------------------------------------------------


def test_slice_counts_for_the_norm_100_walk(set100):
    paths = walk_all(set100)
    assert count_per_slice(paths) == [(1, 8), (2, 4)]
    assert sum(n for _, n in count_per_slice(paths)) == len(set100)


def test_slice_counts_degenerate_cases(set100):
    assert count_per_slice([]) == []
    tiny = sieve_octant(2)
    assert count_per_slice(walk_all(tiny)) == [(1, 1)]


# -- CSV ---------------------------------------------------------------------


def test_csv_bytes_are_exactly_the_declared_format(set100):
    assert format_csv(set100) == SIEVE_100_CSV
    assert "\r" not in format_csv(set100)


def test_csv_round_trip(set10k):
    assert parse_csv(format_csv(set10k)) == list(set10k)


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("x,y,n\n1,1,2\n", "line 1"),
        ("a,b,norm\n1,1\n", "line 2: expected 3 fields"),
        ("a,b,norm\n1,one,2\n", "line 2: non-integer"),
        ("a,b,norm\n1,1,3\n", "line 2: norm field"),
        ("", "line 1"),
    ],
)
def test_csv_parser_names_the_offending_line(text, fragment):
    with pytest.raises(ValueError, match=fragment):
        parse_csv(text)


# -- cache -------------------------------------------------------------------


def test_cache_round_trip(tmp_path, set100):
    save_cache(set100, tmp_path)
    loaded = load_cache(tmp_path, 100, False)
    assert loaded is not None
    assert list(loaded) == list(set100)
    assert loaded.norm_max == 100 and loaded.include_axes is False


def test_cache_miss_returns_none(tmp_path):
    assert load_cache(tmp_path, 123, False) is None


def test_cache_detects_corruption(tmp_path, set100):
    path = save_cache(set100, tmp_path)
    body = path.read_text()
    path.write_text(body.replace("9,4,97", "9,4,98"))
    with pytest.raises(ValueError, match="checksum mismatch"):
        load_cache(tmp_path, 100, False)


def test_cached_sieve_uses_and_fills_the_cache(tmp_path):
    first = sieve_octant_cached(300, cache_dir=tmp_path)
    assert load_cache(tmp_path, 300, False) is not None
    second = sieve_octant_cached(300, cache_dir=tmp_path)
    assert list(first) == list(second)


def test_prime_set_membership_and_len(set100):
    assert GaussInt(8, 5) in set100
    assert GaussInt(4, 4) not in set100
    assert len(set100) == 12
    assert isinstance(set100, PrimeSet)
