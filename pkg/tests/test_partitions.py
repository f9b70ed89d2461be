import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twistedcenter.partitions import (
    OddPartition,
    StrictPartition,
    add_cell,
    canonical_sorted,
    contains,
    count_shifted_tableaux,
    enumerate_odd,
    enumerate_partitions,
    enumerate_strict,
    iter_shifted_tableaux,
    kerov_coordinates,
    length_parity,
    parse_partition,
    path_count,
    remove_cell,
    strict_up_to,
    z_stat,
)


def brute_centralizer(rho):
    """Count permutations commuting with a fixed permutation of cycle type rho."""
    from itertools import permutations

    n = sum(rho)
    perm, start = list(range(n)), 0
    for part in rho:
        for i in range(part):
            perm[start + i] = start + (i + 1) % part
        start += part
    return sum(1 for g in permutations(range(n)) if all(g[perm[i]] == perm[g[i]] for i in range(n)))


def test_strict_enumeration_examples():
    assert enumerate_strict(0) == [()]
    assert enumerate_strict(3) == [(3,), (2, 1)]
    assert len(enumerate_strict(8)) == 6


def test_strict_matches_filtered_partitions():
    for n in range(13):
        brute = [p for p in enumerate_partitions(n) if len(set(p)) == len(p)]
        assert sorted(enumerate_strict(n)) == sorted(brute)


def test_euler_strict_equals_odd():
    for n in range(16):
        assert len(enumerate_strict(n)) == len(enumerate_odd(n))


def test_partition_validation():
    with pytest.raises(ValueError):
        StrictPartition((2, 2))
    with pytest.raises(ValueError):
        OddPartition((2, 1))
    with pytest.raises(ValueError):
        StrictPartition((1, 2))


def test_length_parity():
    assert length_parity(StrictPartition(())) == 0
    assert length_parity(StrictPartition((2, 1))) == 0
    assert length_parity(StrictPartition((6, 5, 2, 1))) == 0
    assert length_parity(StrictPartition((3,))) == 1


def test_z_stat_examples_and_brute_force():
    assert z_stat((1, 1)) == 2
    assert z_stat((3,)) == 3
    assert z_stat((3, 1, 1)) == 6
    for n in range(1, 6):
        for rho in enumerate_partitions(n):
            assert z_stat(rho) == brute_centralizer(rho)


def test_shifted_tableaux_count():
    assert count_shifted_tableaux(StrictPartition((2, 1))) == 1
    assert count_shifted_tableaux(StrictPartition((3, 1))) == 2
    assert count_shifted_tableaux(StrictPartition((3,))) == 1
    for lam in strict_up_to(9):
        assert count_shifted_tableaux(lam) == sum(1 for _ in iter_shifted_tableaux(lam))


def test_path_count_examples():
    assert path_count(StrictPartition((1,))) == 1
    assert path_count(StrictPartition((2, 1))) == 2
    assert path_count(StrictPartition((3, 1))) == 8


def test_kerov_coordinates():
    assert kerov_coordinates(StrictPartition((6, 5, 2, 1))) == ({2, 6}, {0, 4})
    assert kerov_coordinates(StrictPartition((1,))) == ({1}, {0})
    assert kerov_coordinates(StrictPartition(())) == ({0}, set())


def test_add_remove_round_trip():
    for lam in strict_up_to(10):
        up, down = kerov_coordinates(lam)
        for x in up:
            bigger = add_cell(lam, x)
            assert sum(bigger) == sum(lam) + 1
            assert remove_cell(bigger, x) == lam
        for y in down:
            assert add_cell(remove_cell(lam, y), y) == lam


def test_parse_partition():
    assert parse_partition("3,1") == (3, 1)
    assert parse_partition("[1,3]", StrictPartition) == (3, 1)
    assert parse_partition("") == ()


def test_canonical_order():
    assert canonical_sorted([(1,), (2, 1), (3,), ()]) == [(3,), (2, 1), (1,), ()]


@settings(max_examples=60, deadline=None)
@given(st.sets(st.integers(1, 9), max_size=4))
def test_cells_change_size_by_one(parts):
    lam = StrictPartition(sorted(parts, reverse=True))
    up, down = kerov_coordinates(lam)
    assert not up & down
    for x in up:
        bigger = add_cell(lam, x)
        assert contains(bigger, lam) and sum(bigger) == sum(lam) + 1
    for y in down:
        smaller = remove_cell(lam, y)
        assert contains(lam, smaller) and sum(smaller) == sum(lam) - 1
