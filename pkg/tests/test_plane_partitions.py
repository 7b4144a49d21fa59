import pytest

from tetraposet.arrays import ideal_arrays
from tetraposet.bijections import (
    PlanePartition,
    all_tspps,
    all_tsscpps,
    ideal_to_tspp,
    is_self_complementary,
    is_totally_symmetric,
    is_tsscpp,
    tspp_to_ideal,
    tsscpp_to_yplus,
    yplus_to_tsscpp,
)
from tetraposet.bijections.plane_partitions import TSSCPP_N4_EXAMPLE, TSSCPPS_N3
from tetraposet.ideals import count_ideals, enumerate_ideals
from tetraposet.identities import tspp_product
from tetraposet.poset import build_tetra

from .conftest import upto


@pytest.mark.parametrize("n, count", [(0, 1), (1, 1), (2, 2), (3, 7), (4, 42)])
def test_tsscpp_brute_force_counts(n, count):
    assert sum(1 for _ in all_tsscpps(n)) == count


@pytest.mark.slow
def test_tsscpp_brute_force_n5():
    assert sum(1 for _ in all_tsscpps(5)) == 429


@pytest.mark.parametrize("m, count", [(0, 1), (1, 2), (2, 5), (3, 16), (4, 66)])
def test_tspp_brute_force_counts(m, count):
    assert sum(1 for _ in all_tspps(m)) == count


def test_known_tsscpps_are_the_full_set():
    assert all(is_tsscpp(pp) for pp in TSSCPPS_N3)
    assert set(TSSCPPS_N3) == set(all_tsscpps(3))


def test_first_known_tsscpp_is_minimal_array():
    assert tsscpp_to_yplus(TSSCPPS_N3[0]).rows == ((1, 1, 1), (2, 2), (3,))


def test_known_tsscpp_n4():
    assert tsscpp_to_yplus(TSSCPP_N4_EXAMPLE).rows == ((1, 1, 2, 4), (2, 3, 3), (3, 4), (4,))


@pytest.mark.parametrize("n", upto(4))
def test_tsscpp_bijection(n):
    images = sorted(tsscpp_to_yplus(pp).rows for pp in all_tsscpps(n))
    assert images == sorted(a.rows for a in ideal_arrays(n, "rgoy"))
    for a in ideal_arrays(n, "rgoy"):
        pp = yplus_to_tsscpp(a)
        assert is_tsscpp(pp)
        assert tsscpp_to_yplus(pp).rows == a.rows


@pytest.mark.parametrize("n", upto(5))
def test_tspp_bijection(n):
    p = build_tetra(n)
    pps = list(all_tspps(n - 1))
    assert len(pps) == count_ideals(p) == tspp_product(n)
    assert {tspp_to_ideal(pp, p) for pp in pps} == set(enumerate_ideals(p))
    for ideal in enumerate_ideals(p):
        assert tspp_to_ideal(ideal_to_tspp(ideal, p), p) == ideal


def test_plane_partition_validation():
    with pytest.raises(ValueError):
        PlanePartition((2, 2, 2), ((1, 2), (0, 0)))
    with pytest.raises(ValueError):
        PlanePartition((2, 2, 2), ((3, 0), (0, 0)))
    pp = PlanePartition((2, 2, 2), ((2, 1), (1, 0)))
    assert pp.size == 4
    assert is_totally_symmetric(pp) and is_self_complementary(pp)
    assert PlanePartition.from_cubes(pp.cubes(), pp.box) == pp
    corner = PlanePartition((2, 2, 2), ((1, 0), (0, 0)))
    assert is_totally_symmetric(corner) and not is_self_complementary(corner)


def test_asymmetric_partition_is_rejected():
    pp = PlanePartition((2, 2, 2), ((2, 0), (0, 0)))
    assert not is_totally_symmetric(pp)
    with pytest.raises(ValueError):
        tspp_to_ideal(pp)
