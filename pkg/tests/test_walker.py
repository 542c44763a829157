import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gmoat.core import GaussInt, distance_sq
from gmoat.sieve import sieve_octant
from gmoat.walker import (
    LINE_0,
    BoundaryLine,
    LineFitError,
    Path,
    build_path,
    candidate_region,
    cramer_radius,
    fit_line,
    parse_paths_json,
    paths_to_json,
    select_next,
    verify_coverage,
    walk_all,
)

from knownvalues import (
    CANDIDATES_FROM_3_2_R7,
    WALK_100_LINE_1,
    WALK_100_LINE_2,
    WALK_100_ORPHAN,
    WALK_100_PATH_1,
    WALK_100_PATH_2,
    WALK_100_STEPS_SQ_1,
    WALK_100_STEPS_SQ_2,
)


def steps_sq(members):
    return [distance_sq(p, q) for p, q in zip(members, members[1:])]


# -- cramer_radius -----------------------------------------------------------


@pytest.mark.parametrize("p_norm,c,expected", [(2, 1, 1), (89, 1, 21), (89, 2, 41)])
def test_cramer_radius_values(p_norm, c, expected):
    assert cramer_radius(p_norm, c) == expected


def test_cramer_radius_never_below_one():
    assert cramer_radius(2, Fraction(1, 100)) == 1


def test_cramer_radius_rejects_tiny_norms():
    with pytest.raises(ValueError):
        cramer_radius(1)


@given(st.integers(min_value=2, max_value=10**9))
def test_cramer_radius_is_the_ceiling_of_the_log_square(p_norm):
    r = cramer_radius(p_norm)
    assert r - 1 < math.log(p_norm) ** 2 <= r or r == 1


# -- candidate_region --------------------------------------------------------


def test_forward_region_from_3_2(set100):
    got = candidate_region(GaussInt(3, 2), 7, LINE_0, set100, set())
    assert got == CANDIDATES_FROM_3_2_R7


def test_forward_region_is_empty_past_the_last_primes(set100):
    assert candidate_region(GaussInt(8, 5), 21, LINE_0, set100, set()) == []


def test_forward_region_tiny_disk(set100):
    assert candidate_region(GaussInt(1, 1), 1, LINE_0, set100, set()) == [GaussInt(2, 1)]


def test_forward_region_respects_visited(set100):
    visited = {GaussInt(5, 2), GaussInt(5, 4)}
    got = candidate_region(GaussInt(3, 2), 7, LINE_0, set100, visited)
    assert got == [z for z in CANDIDATES_FROM_3_2_R7 if z not in visited]


def test_forward_region_excludes_points_on_the_bound(set100):
    # nothing with b * den == a * num may appear below the diagonal ray
    line = BoundaryLine(1, 2, 5)
    got = candidate_region(GaussInt(4, 1), 9, line, set100, set())
    assert GaussInt(5, 2) not in got  # sits exactly on the ray
    assert all(z.b * 5 < z.a * 2 for z in got)


# -- select_next -------------------------------------------------------------


def test_distance_ties_prefer_the_point_nearer_the_bound():
    candidates = [GaussInt(5, 4), GaussInt(7, 2), GaussInt(6, 5)]
    assert select_next(candidates, GaussInt(5, 2), LINE_0) == GaussInt(5, 4)


def test_single_candidate_and_empty():
    assert select_next([GaussInt(3, 2)], GaussInt(1, 1), LINE_0) == GaussInt(3, 2)
    assert select_next([], GaussInt(1, 1), LINE_0) is None


def test_full_tie_falls_back_to_lexicographic():
    # (7, 6) and (6, 7) are equidistant from (5, 5) and sit symmetrically
    # about the diagonal, so both tie-break keys agree; (6, 7) is smaller
    center = GaussInt(5, 5)
    a, b = GaussInt(7, 6), GaussInt(6, 7)
    assert distance_sq(a, center) == distance_sq(b, center)
    assert LINE_0.perpendicular_key(a) == LINE_0.perpendicular_key(b)
    assert select_next([a, b], center, LINE_0) == GaussInt(6, 7)


# -- build_path --------------------------------------------------------------


def test_first_path_matches_the_known_table(set100):
    path = build_path(GaussInt(1, 1), LINE_0, set100, set(), 1, index=1)
    assert path.members == WALK_100_PATH_1
    assert steps_sq(path.members) == WALK_100_STEPS_SQ_1


def test_second_path_matches_the_known_table(set100):
    line1 = BoundaryLine(1, *WALK_100_LINE_1)
    visited = set(WALK_100_PATH_1)
    path = build_path(GaussInt(4, 1), line1, set100, visited, 1, index=2)
    assert path.members == WALK_100_PATH_2
    assert steps_sq(path.members) == WALK_100_STEPS_SQ_2


def test_singleton_set_gives_a_single_member_path():
    tiny = sieve_octant(2)
    path = build_path(GaussInt(1, 1), LINE_0, tiny, set())
    assert path.members == [GaussInt(1, 1)]
    assert path.disks == []
    assert path.terminal_disk is not None


def test_start_must_be_in_the_set(set100):
    with pytest.raises(ValueError, match="not in the prime set"):
        build_path(GaussInt(4, 4), LINE_0, set100, set())


def test_disk_audit_trail(set100):
    path = build_path(GaussInt(1, 1), LINE_0, set100, set())
    assert len(path.disks) == len(path.members) - 1
    for disk, p, q in zip(path.disks, path.members, path.members[1:]):
        assert disk.center == p
        assert distance_sq(p, q) <= disk.radius * disk.radius
        base = cramer_radius(disk.center.a**2 + disk.center.b**2, 1)
        assert disk.radius == base * (disk.ring_count + 1)


def test_disk_bound_intersection_is_measured_exactly(set100):
    path = build_path(GaussInt(1, 1), LINE_0, set100, set())
    for disk in path.disks + [path.terminal_disk]:
        d_num = abs(disk.center.a * 1 - disk.center.b * 1)
        expected = d_num * d_num <= disk.radius * disk.radius * 2
        assert disk.intersects_bound == expected


# -- fit_line ----------------------------------------------------------------


def test_fitted_ray_passes_through_the_flattest_member(set100):
    p1 = Path(index=1, bound=LINE_0, members=list(WALK_100_PATH_1))
    line = fit_line(p1, LINE_0)
    assert (line.slope_num, line.slope_den) == WALK_100_LINE_1
    p2 = Path(index=2, bound=line, members=list(WALK_100_PATH_2))
    line2 = fit_line(p2, line)
    assert (line2.slope_num, line2.slope_den) == WALK_100_LINE_2


def test_single_member_fit():
    p = Path(index=1, bound=LINE_0, members=[GaussInt(2, 1)])
    line = fit_line(p)
    assert (line.slope_num, line.slope_den) == (1, 2)


def test_members_never_fall_below_their_fitted_ray(set100):
    for path in walk_all(set100):
        assert path.line is not None
        for z in path.selected_members():
            assert z.b * path.line.slope_den >= z.a * path.line.slope_num


def test_degenerate_fit_is_reported():
    p = Path(index=1, bound=LINE_0, members=[GaussInt(1, 1)])
    with pytest.raises(LineFitError):
        fit_line(p, LINE_0)
    # without a predecessor the same fit is fine
    assert fit_line(p).slope == 1


# -- walk_all ----------------------------------------------------------------


def test_walk_100_reproduces_the_table_exactly(set100):
    paths = walk_all(set100, 1)
    assert len(paths) == 2
    assert paths[0].members == WALK_100_PATH_1 + [WALK_100_ORPHAN]
    assert paths[0].orphans_absorbed == [WALK_100_ORPHAN]
    assert paths[0].selected_members() == WALK_100_PATH_1
    assert paths[1].members == WALK_100_PATH_2
    assert paths[1].orphans_absorbed == []
    assert (paths[0].line.slope_num, paths[0].line.slope_den) == WALK_100_LINE_1
    assert (paths[1].line.slope_num, paths[1].line.slope_den) == WALK_100_LINE_2


def test_walk_single_prime_set():
    paths = walk_all(sieve_octant(2))
    assert len(paths) == 1
    assert paths[0].members == [GaussInt(1, 1)]
    assert paths[0].orphans_absorbed == []
    assert paths[0].line is None  # the diagonal cannot be undercut


def test_walk_is_deterministic(set1k):
    a = walk_all(set1k)
    b = walk_all(set1k)
    assert [p.members for p in a] == [p.members for p in b]
    assert [p.orphans_absorbed for p in a] == [p.orphans_absorbed for p in b]


def test_walk_rejects_axis_sets():
    with pytest.raises(ValueError, match="interior octant set"):
        walk_all(sieve_octant(50, include_axes=True))


def test_fitted_slopes_strictly_decrease(set10k):
    paths = walk_all(set10k)
    slopes = [Fraction(1, 1)] + [p.line.slope for p in paths if p.line is not None]
    assert all(s2 < s1 for s1, s2 in zip(slopes, slopes[1:]))


def test_members_stay_strictly_below_their_bound(set10k):
    for path in walk_all(set10k):
        for z in path.selected_members():
            if path.index == 1 and z == GaussInt(1, 1):
                continue  # designated start on the diagonal
            assert path.bound.strictly_below(z)


def test_step_audit_over_a_larger_walk(set1k):
    for path in walk_all(set1k):
        sel = path.selected_members()
        for disk, p, q in zip(path.disks, sel, sel[1:]):
            assert disk.center == p
            assert distance_sq(p, q) <= disk.radius * disk.radius


@pytest.mark.parametrize("norm_max", [2, 5, 29, 100, 1000])
def test_walk_partitions_every_set(norm_max):
    prime_set = sieve_octant(norm_max)
    paths = walk_all(prime_set)
    report = verify_coverage(paths, prime_set)
    assert report.is_partition
    assert report.missing == () and report.duplicated == ()


def test_walk_100_has_exactly_one_orphan(set100):
    report = verify_coverage(walk_all(set100), set100)
    assert report.orphan_count == 1


# -- verify_coverage ---------------------------------------------------------


def test_coverage_notices_missing_and_duplicated(set100):
    paths = walk_all(set100)
    removed = paths[1].members.pop()
    report = verify_coverage(paths, set100)
    assert report.missing == (removed,)
    paths[1].members.append(removed)
    paths[0].members.append(removed)
    report = verify_coverage(paths, set100)
    assert report.duplicated == (removed,)
    assert not report.is_partition


# -- JSON export -------------------------------------------------------------


def test_json_round_trip(set100):
    paths = walk_all(set100)
    records = parse_paths_json(paths_to_json(paths))
    assert [r["members"] for r in records] == [p.members for p in paths]
    assert [r["orphans"] for r in records] == [p.orphans_absorbed for p in paths]
    assert records[0]["line"] == {"num": 2, "den": 5}
    assert records[1]["index"] == 2


def test_json_export_is_stable_bytes(set100):
    assert paths_to_json(walk_all(set100)) == paths_to_json(walk_all(set100))


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("{", "not valid JSON"),
        ('{"a": 1}', "expected an array"),
        ("[1]", "path 0: expected an object"),
        ('[{"index": 1, "members": [[1]], "orphans": []}]', "list of \\[a, b\\] pairs"),
        ('[{"index": 1, "members": []}]', "missing field 'orphans'"),
        ('[{"index": 1, "members": [], "orphans": [], "line": {"num": 1}}]', "'line'"),
    ],
)
def test_json_parser_rejects_malformed_exports(text, fragment):
    with pytest.raises(ValueError, match=fragment):
        parse_paths_json(text)
