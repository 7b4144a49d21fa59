from math import comb

import pytest

from tetraposet.arrays import StaircaseArray, ideal_arrays
from tetraposet.bijections import TournamentTableau, all_staircase_ssyt, sundquist, sundquist_tournament
from tetraposet.bijections.sundquist import is_staircase_ssyt

from .conftest import upto

# The only SSYT of shape (3, 2, 1) whose tournament has upsets
# 1-3, 1-4, 2-3 and 3-4.
KNOWN_PREIMAGE = ((1, 2, 4), (3, 3), (4,))
KNOWN_UPSETS = {(1, 3), (1, 4), (2, 3), (3, 4)}


@pytest.mark.parametrize("n", upto(5))
def test_injective_with_full_image(n):
    images = [sundquist_tournament(t, n) for t in all_staircase_ssyt(n)]
    assert len(set(images)) == len(images) == 2 ** comb(n, 2)


@pytest.mark.parametrize("n", upto(4, start=2))
def test_ssyt_are_gyo_arrays(n):
    ssyt = {tuple(map(tuple, t)) for t in all_staircase_ssyt(n)}
    assert ssyt == {a.rows for a in ideal_arrays(n, "gyo", "Y")}


def test_known_tournament():
    t = sundquist(KNOWN_PREIMAGE)
    assert t.rows == ((1, 3, 4), (2, 3), (4,), ())
    assert t.is_valid()
    assert t.tournament().upsets == KNOWN_UPSETS
    matches = [s for s in all_staircase_ssyt(4) if sundquist_tournament(s, 4).upsets == KNOWN_UPSETS]
    assert [tuple(map(tuple, s)) for s in matches] == [KNOWN_PREIMAGE]


def test_accepts_y_arrays():
    a = StaircaseArray.from_rows(KNOWN_PREIMAGE, "Y")
    assert sundquist(a) == sundquist(KNOWN_PREIMAGE)


def test_rejects_non_ssyt():
    assert not is_staircase_ssyt(((2, 1), (3,)), 3)
    with pytest.raises(ValueError):
        sundquist(((2, 1), (3,)))
    assert not TournamentTableau(((1, 3, 3), (2,), ())).is_valid()
    assert not TournamentTableau(((1,), (1,), ())).is_valid()
