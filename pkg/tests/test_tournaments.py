from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tetraposet.arrays import StaircaseArray, ideal_arrays, validate
from tetraposet.bijections import (
    Tournament,
    all_tournaments,
    fiber_size,
    is_tsscpp_tournament,
    normalize_rows,
    row_shuffles,
    rows_weakly_increase,
    tournament_to_yplus,
    yplus_to_tournament,
)
from tetraposet.ideals import count_ideals
from tetraposet.poset import tetra

from .conftest import upto

tournaments = st.integers(1, 5).flatmap(
    lambda n: st.sets(st.sampled_from([(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)] or [(0, 0)])).map(
        lambda ups: Tournament(n, frozenset(u for u in ups if u != (0, 0)))
    )
)


@given(tournaments)
def test_upsets_are_southwest_equalities(t):
    a = tournament_to_yplus(t)
    assert validate(a, "brg")
    for i, j in a.cells():
        if j >= 1:
            assert (a.get(i, j) == a.get(i + 1, j - 1)) == t.is_upset(i, i + j)
    assert yplus_to_tournament(a) == t


@pytest.mark.parametrize("n", upto(5))
def test_bijection_onto_brg_arrays(n):
    images = sorted(tournament_to_yplus(t).rows for t in all_tournaments(n))
    assert len(images) == 2 ** comb(n, 2)
    assert images == sorted(a.rows for a in ideal_arrays(n, "brg"))


@pytest.mark.parametrize("n", upto(5))
def test_tsscpp_condition(n):
    accepted = 0
    for t in all_tournaments(n):
        a = tournament_to_yplus(t)
        assert is_tsscpp_tournament(t) == rows_weakly_increase(a)
        accepted += is_tsscpp_tournament(t)
    assert accepted == count_ideals(tetra(n, "brgy"))


@pytest.mark.parametrize("n", upto(5))
def test_fibers_partition_tournaments(n):
    fibers = {}
    for t in all_tournaments(n):
        a = tournament_to_yplus(t)
        fibers.setdefault(normalize_rows(a).rows, set()).add(a.rows)
    reps = list(ideal_arrays(n, "brgy"))
    assert set(fibers) == {r.rows for r in reps}
    for r in reps:
        assert fibers[r.rows] == {b.rows for b in row_shuffles(r)}
        assert len(fibers[r.rows]) == fiber_size(r)
    assert sum(map(fiber_size, reps)) == 2 ** comb(n, 2)


def test_rejected_tournament_n3():
    t = Tournament(3, frozenset({(1, 2)}))
    a = tournament_to_yplus(t)
    assert a.rows == ((1, 2, 1), (2, 2), (3,))
    assert not is_tsscpp_tournament(t)
    assert normalize_rows(a).rows == ((1, 1, 2), (2, 2), (3,))
    others = [u for u in all_tournaments(3) if u != t]
    assert all(is_tsscpp_tournament(u) for u in others)


def test_no_upsets_gives_minimal_array():
    assert tournament_to_yplus(Tournament(4, frozenset())).rows == ((1, 1, 1, 1), (2, 2, 2), (3, 3), (4,))


def test_tournament_helpers():
    t = Tournament(3, frozenset({(1, 3)}))
    assert t.wins(3) == 1 and t.wins(1) == 1 and t.wins(2) == 1
    assert t.upsets_with(3, 1, 2) == 1
    assert Tournament.from_json(3, t.to_json()) == t
    with pytest.raises(ValueError):
        Tournament(3, frozenset({(2, 1)}))


def test_normalize_requires_brg_array():
    with pytest.raises(ValueError):
        normalize_rows(StaircaseArray.from_rows([(1, 1), (2,)], "Y"))


def test_all_upsets_n3():
    t = Tournament(3, frozenset({(1, 2), (1, 3), (2, 3)}))
    assert tournament_to_yplus(t).rows == ((1, 2, 3), (2, 3), (3,))


def test_fiber_sizes_n3():
    reps = list(ideal_arrays(3, "brgy"))
    assert sorted(map(fiber_size, reps)) == [1, 1, 1, 1, 1, 1, 2]
    minimal = StaircaseArray.from_rows([(1, 1, 1), (2, 2), (3,)], "Yplus")
    assert [b.rows for b in row_shuffles(minimal)] == [minimal.rows]
    assert normalize_rows(minimal).rows == minimal.rows
