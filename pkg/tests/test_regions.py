from math import comb

import pytest

from almost_rainbow import regions
from almost_rainbow.coloring import build_matrix
from almost_rainbow.regions import RegionGap, RegionOverlap, partition_coverage, region_table


def test_step2_case5_is_a_single_quadruple():
    cov = partition_coverage(build_matrix(8))
    assert cov["Step 2 Case 5"].quadruples == 1


def test_order8_total():
    cov = partition_coverage(build_matrix(8))
    assert sum(s.quadruples for s in cov.values()) == comb(8, 2) ** 2 == 784
    assert all(s.violations == 0 for s in cov.values())


@pytest.mark.parametrize("n", [6, 8, 12, 14, 16, 18, 20, 22, 24, 28, 34, 40])
def test_partition_is_total_and_clean(n):
    cov = partition_coverage(build_matrix(n))
    assert sum(s.quadruples for s in cov.values()) == comb(n, 2) ** 2
    assert all(s.violations == 0 for s in cov.values() if s.quadruples)


def test_order10_violations_localized():
    cov = partition_coverage(build_matrix(10))
    bad = {name for name, s in cov.items() if s.violations}
    assert bad == {"Step 2 Case 1 / G3.4", "Step 3 Case 1 / G3.4", "Step 6 Case 2 / G3.1"}


def test_type3_regions_all_hit_at_28():
    cov = partition_coverage(build_matrix(28))
    empty = [name for name, s in cov.items() if s.quadruples == 0]
    assert empty == []


def test_supplement_regions_are_nonempty():
    cov = partition_coverage(build_matrix(12))
    # Step 2: l in 2..n-2; Step 3: rows 2..n-1 times l in 2..n/2-1
    assert cov["Step 2 supplement m=n"].quadruples == 12 - 3
    assert cov["Step 3 supplement m=n"].quadruples == (12 - 2) * (12 // 2 - 2)


def test_missing_region_raises_gap(monkeypatch):
    trimmed = [r for r in regions.COMMON if r[0] != "Step 2 Case 5"]
    monkeypatch.setattr(regions, "COMMON", trimmed)
    with pytest.raises(RegionGap):
        partition_coverage(build_matrix(8))


def test_duplicate_region_raises_overlap(monkeypatch):
    monkeypatch.setattr(regions, "COMMON", regions.COMMON + [regions.COMMON[0]])
    with pytest.raises(RegionOverlap):
        partition_coverage(build_matrix(8))


def test_region_table_resolves_n22_bounds():
    names = {row[0]: row for row in region_table(22)}
    # n = 22 moves the split of U to l <= 2 and l >= 3
    assert names["Step 4 Case 4 / G3.low"][4] == (2, 2)
    assert names["Step 4 Case 4 / G3.1"][4] == (3, 9)
