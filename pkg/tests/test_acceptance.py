"""Acceptance gate: one test per criterion, all comparisons exact.

Run ``pytest tests/test_acceptance.py`` to get the PASS/FAIL line per
criterion in the terminal summary.
"""

from math import comb

import pytest

from tetraposet import identities as ids
from tetraposet.arrays import StaircaseArray, ideal_arrays
from tetraposet.bijections import (
    Asm,
    Tournament,
    all_asms,
    all_staircase_ssyt,
    all_tournaments,
    all_tspps,
    asm_to_yplus,
    compute_stats,
    fiber_size,
    ideal_to_tspp,
    inversion_number,
    is_tsscpp,
    is_tsscpp_tournament,
    monotone_to_asm,
    normalize_rows,
    row_shuffles,
    sundquist,
    sundquist_tournament,
    tournament_to_yplus,
    tspp_to_ideal,
    yplus_to_monotone,
    yplus_to_tsscpp,
)
from tetraposet.bijections.plane_partitions import TSSCPPS_N3
from tetraposet.ideals import count_ideals, count_ideals_fast, enumerate_ideals, rank_gf
from tetraposet.polynomials import QPolynomial
from tetraposet.poset import (
    FIVE_A,
    FIVE_B,
    TSSCPP_FOUR_SETS,
    ColorSet,
    admissible_sets,
    build_tetra,
    classify,
    dual,
    restrict,
    tetra,
    truncate_trapezoid,
)

ASM_COUNTS = [1, 2, 7, 42, 429, 7436]

KNOWN_ASMS_N3 = {
    ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
    ((1, 0, 0), (0, 0, 1), (0, 1, 0)),
    ((0, 1, 0), (1, 0, 0), (0, 0, 1)),
    ((0, 1, 0), (1, -1, 1), (0, 1, 0)),
    ((0, 1, 0), (0, 0, 1), (1, 0, 0)),
    ((0, 0, 1), (1, 0, 0), (0, 1, 0)),
    ((0, 0, 1), (0, 1, 0), (1, 0, 0)),
}


@pytest.mark.criterion(1, "ASM counts 1, 2, 7, 42, 429, 7436 and the seven 3x3 matrices")
def test_criterion_1_asm_counts():
    p = [tetra(n, "byog") for n in range(1, 7)]
    assert [count_ideals(q) for q in p] == ASM_COUNTS
    assert [count_ideals_fast(q) for q in p] == ASM_COUNTS
    regenerated = {monotone_to_asm(yplus_to_monotone(a)).entries for a in ideal_arrays(3, "byog")}
    assert regenerated == KNOWN_ASMS_N3


@pytest.mark.criterion(2, "six TSSCPP posets and duals share the ASM sequence; n=3 TSSCPPs rebuilt")
def test_criterion_2_tsscpp_counts():
    assert len(set(TSSCPP_FOUR_SETS)) == 6
    for s in TSSCPP_FOUR_SETS:
        for n, c in zip(range(1, 7), ASM_COUNTS):
            p = tetra(n, s)
            assert count_ideals(p) == c, (str(s), n)
            assert count_ideals(dual(p)) == c, (str(s), n, "dual")
    rebuilt = [yplus_to_tsscpp(a) for a in ideal_arrays(3, "rgoy")]
    assert all(is_tsscpp(pp) for pp in rebuilt)
    assert set(rebuilt) == set(TSSCPPS_N3)


@pytest.mark.criterion(3, "exceptional three-color and five-color sequences")
def test_criterion_3_sequences():
    # The second exceptional set is {s,b,g}; see the decisions ledger.
    for s in ("rgy", "sbg"):
        assert [count_ideals_fast(tetra(n, s)) for n in range(1, 7)] == [1, 2, 9, 96, 2498, 161422]
    for s in FIVE_A:
        assert [count_ideals_fast(tetra(n, s)) for n in range(1, 8)] == [1, 2, 6, 26, 162, 1450, 18626]
    assert FIVE_B == (ColorSet("rbsyg"),)
    assert [count_ideals_fast(tetra(n, "rbsyg")) for n in range(1, 7)] == [1, 2, 6, 28, 202, 2252]


@pytest.mark.criterion(4, "rank generating functions match closed forms for the factoring classes")
def test_criterion_4_rank_gf():
    classes = {"empty", "single", "two-opposite", "two-adjacent", "three-nice"}
    sets = [s for s in admissible_sets() if classify(s) in classes]
    assert len(sets) == 27
    for s in sets:
        for n in range(1, 6):
            p = tetra(n, s)
            f = ids.rank_gf_formula(s, n)
            if ids.formula_is_dual(s):
                assert rank_gf(p) == f.reversed(len(p)), (str(s), n)
            else:
                assert rank_gf(p) == f, (str(s), n)


@pytest.mark.criterion(5, "tournament generating function expansions and the lambda identity")
def test_criterion_5_expansions():
    for n in range(1, 5):
        t = ids.tournament_gf(n)
        assert ids.asm_expansion(n) == t, n
        assert ids.tsscpp_expansion(n) == t, n
    for n in range(1, 7):
        lam = ids.tsscpp_binomial_sum(n)
        assert lam == QPolynomial([1, 1]) ** comb(n, 2), n
        assert lam(1) == 2 ** comb(n, 2)
        assert ids.asm_two_enumeration(n) == 2 ** comb(n, 2), n


@pytest.mark.criterion(6, "E + N = inversions and content identity over ASMs; worked example")
def test_criterion_6_statistics():
    for n in range(1, 6):
        for a in all_asms(n):
            st = compute_stats(asm_to_yplus(a))
            assert st.E + st.N == inversion_number(a)
            for j in range(1, n + 1):
                assert st.C_of(j) - 1 == sum((n - i) * a.entries[i - 1][j - 1] for i in range(1, n + 1))
    example = Asm(((0, 0, 1, 0, 0), (0, 1, 0, 0, 0), (0, 0, 0, 1, 0), (1, 0, -1, 0, 1), (0, 0, 1, 0, 0)))
    alpha = asm_to_yplus(example)
    assert alpha.rows == ((1, 1, 2, 2, 3), (2, 2, 3, 3), (3, 4, 4), (4, 5), (5,))
    st = compute_stats(alpha)
    assert (st.E, st.N, st.C) == (4, 1, (2, 4, 4, 3, 2))


@pytest.mark.criterion(7, "tournament fibers and the TSSCPP tournament condition")
def test_criterion_7_tournaments():
    for n in range(1, 6):
        arrays = [tournament_to_yplus(t) for t in all_tournaments(n)]
        fibers = {}
        for a in arrays:
            fibers.setdefault(normalize_rows(a).rows, set()).add(a.rows)
        reps = list(ideal_arrays(n, "brgy"))
        assert sorted(fibers) == sorted(r.rows for r in reps)
        for r in reps:
            assert len(fibers[r.rows]) == fiber_size(r)
            assert fibers[r.rows] == {b.rows for b in row_shuffles(r)}
        assert sum(len(f) for f in fibers.values()) == 2 ** comb(n, 2)
        accepted = sum(map(is_tsscpp_tournament, all_tournaments(n)))
        assert accepted == count_ideals(tetra(n, "brgy")) == ASM_COUNTS[n - 1]
    rejected = [t for t in all_tournaments(3) if not is_tsscpp_tournament(t)]
    assert rejected == [Tournament(3, frozenset({(1, 2)}))]
    assert tournament_to_yplus(rejected[0]).rows == ((1, 2, 1), (2, 2), (3,))


@pytest.mark.criterion(8, "Sundquist map injective with 2^C(n,2) images; four-upset example")
def test_criterion_8_sundquist():
    for n in range(1, 5):
        images = [sundquist_tournament(t, n) for t in all_staircase_ssyt(n)]
        assert len(set(images)) == len(images) == 2 ** comb(n, 2)
    upsets = {(1, 3), (1, 4), (2, 3), (3, 4)}
    preimages = [t for t in all_staircase_ssyt(4) if sundquist_tournament(t, 4).upsets == upsets]
    assert len(preimages) == 1
    assert sundquist(preimages[0]).tournament().upsets == upsets


@pytest.mark.criterion(9, "gog = magog on every trapezoid with k < n <= 5")
def test_criterion_9_trapezoids():
    for n in range(1, 6):
        p = build_tetra(n)
        for k in range(n):
            t = truncate_trapezoid(p, k)
            assert count_ideals(restrict(t, "byog")) == count_ideals(restrict(t, "ryog")), (n, k)


@pytest.mark.criterion(10, "TSPP product formula and exhaustive TSPP round trip")
def test_criterion_10_tspp():
    counts = [count_ideals(build_tetra(n)) for n in range(1, 7)]
    assert counts == [ids.tspp_product(n) for n in range(1, 7)]
    assert counts[-1] == 352
    for n in range(1, 5):
        p = build_tetra(n)
        pps = list(all_tspps(n - 1))
        assert {tspp_to_ideal(pp, p) for pp in pps} == set(enumerate_ideals(p))
        assert all(ideal_to_tspp(tspp_to_ideal(pp, p), p) == pp for pp in pps)
        assert all(tspp_to_ideal(ideal_to_tspp(i, p), p) == i for i in enumerate_ideals(p))
