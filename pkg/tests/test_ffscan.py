import pytest

from heisencheck.ffscan import (
    canonical_points,
    census_csv,
    ci_curve_points_d9,
    find_stratum_point,
    jacobian_zero_counts,
    jacobian_zero_scan,
    projective_point_count,
    rank_at_point,
    scan_strata,
    special_points_d9_mod,
)


def test_canonical_points_cover_projective_space():
    pts = canonical_points(4, 19)
    assert pts.shape == (projective_point_count(4, 19), 4)
    as_tuples = {tuple(int(c) for c in row) for row in pts}
    assert len(as_tuples) == pts.shape[0]
    # every point is canonical: first nonzero coordinate is 1
    for row in pts[:: 97]:
        nz = [c for c in row if c]
        assert nz[0] == 1


def test_scan_requires_compatible_prime():
    with pytest.raises(ValueError):
        scan_strata(9, 23)
    with pytest.raises(ValueError):
        scan_strata(11, 19)
    with pytest.raises(ValueError):
        scan_strata(7, 29)


def test_census_d9_q19():
    census = scan_strata(9, 19)
    assert census.total() == 7240
    assert census.counts[0] == 0
    assert census.min_rank == 2
    rank2 = set(census.min_rank_points)
    ci = ci_curve_points_d9(19)
    special = special_points_d9_mod(19)
    assert len(special) == 4
    assert not (ci & special)
    assert rank2 == ci | special


def test_census_determinism():
    a = scan_strata(9, 19)
    b = scan_strata(9, 19)
    assert a.counts == b.counts
    assert a.min_rank_points == b.min_rank_points


def test_census_partition_invariance():
    # block boundaries never change counts, point lists, or their order
    whole = scan_strata(9, 19)
    for block_size in (1000, 777, 7240):
        split = scan_strata(9, 19, block_size=block_size)
        assert split.counts == whole.counts
        assert split.min_rank_points == whole.min_rank_points


def test_point_blocks_match_dense_enumeration():
    from heisencheck.ffscan import point_blocks
    import numpy as np

    dense = canonical_points(4, 19)
    streamed = np.concatenate(list(point_blocks(4, 19, block_size=311)), axis=0)
    assert (dense == streamed).all()


def test_census_d9_larger_prime():
    census = scan_strata(9, 37)
    assert census.total() == projective_point_count(4, 37)
    assert census.counts[0] == 0
    rank2 = set(census.min_rank_points)
    assert rank2 == ci_curve_points_d9(37) | special_points_d9_mod(37)


def test_batch_ranks_agree_with_elimination():
    census = scan_strata(11, 23)
    pts = canonical_points(5, 23)
    rng_indices = range(0, pts.shape[0], 9973)
    by_rank = {r: 0 for r in census.counts}
    for k in rng_indices:
        by_rank[rank_at_point(11, 23, [int(c) for c in pts[k]])] += 1
    assert sum(by_rank.values()) == len(list(rng_indices))


def test_d11_counts_are_consistent():
    census = scan_strata(11, 23)
    assert census.total() == projective_point_count(5, 23)
    assert census.counts[0] == 0
    assert census.min_rank == 2
    # the rank-2 stratum is where every kernel-map coordinate dies
    assert census.counts[2] == len(census.min_rank_points)


def test_find_stratum_point():
    hit = find_stratum_point(11, 23, 4)
    assert hit is not None
    assert rank_at_point(11, 23, list(hit.coords)) == 4
    assert find_stratum_point(9, 19, 0) is None
    low = find_stratum_point(9, 19, 2)
    assert low is not None
    assert low.coords in (ci_curve_points_d9(19) | special_points_d9_mod(19))


@pytest.mark.parametrize("q", [3, 7, 13, 23, 31])
def test_jacobian_zero_scan(q):
    assert jacobian_zero_scan(q) == 0


def test_jacobian_counts_detail():
    counts3 = jacobian_zero_counts(3)
    assert counts3 == {"jacobian": 1, "system": 0}  # (1:1:1:1:1) since 1+2=0 mod 3
    counts11 = jacobian_zero_counts(11)
    assert counts11["system"] == counts11["jacobian"] == 1  # the group prime is special
    with pytest.raises(ValueError):
        jacobian_zero_scan(2)


def test_census_csv():
    census = scan_strata(9, 19)
    text = census_csv([census])
    lines = text.strip().splitlines()
    assert lines[0] == "q,d,rank,count"
    assert "19,9,2,40" in lines
    assert len(lines) == 1 + len(census.counts)
