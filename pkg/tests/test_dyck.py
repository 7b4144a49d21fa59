import pytest
from hypothesis import given
from hypothesis import strategies as st

from tetraposet.bijections import DyckPath, all_dyck_paths, catalan_poset, dyck_to_ideal, ideal_to_dyck
from tetraposet.identities import carlitz_riordan, catalan
from tetraposet.ideals import enumerate_ideals, rank_gf
from tetraposet.polynomials import QPolynomial

from .conftest import upto


@pytest.mark.parametrize("n", upto(6))
def test_bijection_and_weight(n):
    p = catalan_poset(n)
    paths = list(all_dyck_paths(n))
    assert len(paths) == catalan(n)
    ideals = [dyck_to_ideal(d, p) for d in paths]
    assert set(ideals) == set(enumerate_ideals(p))
    assert all(i.size == d.area for i, d in zip(ideals, paths))
    assert all(ideal_to_dyck(i, p) == d for i, d in zip(ideals, paths))


@pytest.mark.parametrize("n", upto(6))
def test_rank_gf_is_carlitz_riordan(n):
    assert rank_gf(catalan_poset(n)) == carlitz_riordan(n)


def test_c4_coefficients():
    assert carlitz_riordan(4) == QPolynomial([1, 3, 3, 3, 2, 1, 1])


def test_area_examples():
    assert DyckPath("UDUDUDUD").area == 0
    assert DyckPath("UUDUDUDD").area == 3
    assert DyckPath("UUUDDUDD").area == 4
    assert DyckPath("UUUUDDDD").area == 6


@pytest.mark.parametrize("steps", ["UUUDDUDD", "UUDUUDDD"])
def test_four_element_ideals(steps):
    ideal = dyck_to_ideal(DyckPath(steps))
    assert ideal.size == 4


def test_bad_paths():
    for bad in ["UDD", "DU", "UUDX"]:
        with pytest.raises(ValueError):
            DyckPath(bad)
    with pytest.raises(ValueError):
        dyck_to_ideal(DyckPath("UD"), catalan_poset(2))


@given(st.integers(1, 6).flatmap(lambda n: st.sampled_from(list(all_dyck_paths(n)))))
def test_heights_are_weakly_increasing_and_above_diagonal(d):
    h = d.heights()
    assert h == sorted(h)
    assert all(x >= c + 1 for c, x in enumerate(h))
