import pytest
from hypothesis import given, strategies as st

from multicatalan.core import all_words, shape_of
from multicatalan.counting import (
    brute_counts, build_det_matrix, catalan, count_nkr, det_poly, det_weight_check,
    interior_gf, narayana, z0_count,
)
from multicatalan.exact import WeightPoly, bareiss_det, det_by_permutations


def test_spot_values():
    assert z0_count(3, 1) == 14
    assert z0_count(3, 0) == 14
    assert z0_count(1, 1) == 1
    assert count_nkr(3, 1, 1) == 8
    assert (count_nkr(3, 0, 1), count_nkr(3, 2, 1)) == (3, 3)
    with pytest.raises(ValueError):
        z0_count(2, 3)


@pytest.mark.parametrize("m", range(1, 10))
def test_counts_against_brute_force(m):
    for r in range(m + 1):
        per_k = brute_counts(m, r)
        assert sum(per_k.values()) == z0_count(m, r)
        assert sum(count_nkr(m, k, r) for k in range(m - r + 1)) == z0_count(m, r)
        for k in range(m - r + 1):
            assert count_nkr(m, k, r) == per_k.get(k, 0)
    assert z0_count(m, 0) == catalan(m + 1)


@given(st.integers(1, 12), st.integers(0, 12))
def test_narayana_symmetry(n, k):
    assert narayana(n, k) == narayana(n, n + 1 - k)


@given(st.integers(1, 10), st.integers(0, 9))
def test_r0_is_narayana(m, k):
    assert count_nkr(m, k, 0) == narayana(m + 1, k + 1)


def test_det_examples():
    a, b = WeightPoly.monomial(1, 0), WeightPoly.monomial(0, 1)
    assert det_poly((1,)) == a + b
    assert det_poly((2,)) == a**2 + a * b + b
    assert det_poly((0,)) == WeightPoly.const(1)
    assert det_weight_check("DE")["pass"]
    assert det_weight_check("DEE")["pass"]


def test_det_af_words_exhaustive():
    seen = set()
    for m in range(1, 9):
        for w in all_words(m, 0):
            rep = det_weight_check(w)
            assert rep["pass"], rep
            parts = shape_of(w).parts
            if parts not in seen:
                seen.add(parts)
                assert all(c > 0 for c in det_poly(parts).terms.values())


def test_bareiss_vs_leibniz_on_det_matrices():
    for parts in [(1,), (2, 1), (3, 1, 1), (2, 2, 0), (3, 2, 1, 0)]:
        mat = [list(r) for r in build_det_matrix(parts).entries]
        assert bareiss_det(mat) == det_by_permutations(mat)


def test_product_formula_conventions():
    rep = det_weight_check("DEEAE")
    assert rep["de_letters"]["equal"]
    # with n = word length the formula is off by (alpha beta)^r exactly
    assert rep["length"]["weight_over_formula"] == {"a": -1, "b": -1}
    for m in range(1, 7):
        for r in range(1, m + 1):
            for w in all_words(m, r):
                assert det_weight_check(w)["de_letters"]["equal"], w


def test_interior_gf_is_det():
    assert interior_gf("DEE") == det_poly((2,))


def test_bad_partition():
    with pytest.raises(ValueError):
        build_det_matrix((1, 2))
