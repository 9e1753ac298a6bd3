from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from multicatalan.exact import (
    ALPHA, BETA, ONE, Q, ZERO, WeightPoly, bareiss_det, det_by_permutations,
    format_rational, parse_rational,
)

exps = st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 2))
polys = st.dictionaries(exps, st.integers(-5, 5), max_size=5).map(WeightPoly)
rats = st.fractions(min_value=-5, max_value=5, max_denominator=7)


def test_rational_io():
    assert parse_rational("3/6") == Fraction(1, 2)
    assert parse_rational("-4") == -4
    assert format_rational(Fraction(6, 3)) == "2"
    for bad in ("x", "1/0", "1/2/3", ""):
        with pytest.raises(ValueError):
            parse_rational(bad)


def test_examples():
    assert ALPHA + BETA == WeightPoly({(1, 0, 0): 1, (0, 1, 0): 1})
    assert ALPHA * BETA * (ALPHA + BETA) == WeightPoly({(2, 1, 0): 1, (1, 2, 0): 1})
    assert (ALPHA + BETA).scale(0).terms == {}
    assert (ALPHA**2 * BETA + ALPHA * BETA**2).eval(1, 1, 0) == 2
    three = WeightPoly({(4, 4, 0): 1, (3, 4, 0): 1, (2, 4, 0): 1})
    assert three.eval(1, 1, 0) == 3
    assert ALPHA.eval(Fraction(2, 3), 5, 0) == Fraction(2, 3)


def test_no_zero_terms():
    p = ALPHA - ALPHA
    assert p.is_zero() and p.terms == {}


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p + q == q + p and p * q == q * p
    assert p - p == ZERO and p * ONE == p


@given(polys, polys, rats, rats, rats)
def test_eval_homomorphism(p, q, a, b, c):
    assert (p * q).eval(a, b, c) == p.eval(a, b, c) * q.eval(a, b, c)
    assert (p + q).eval(a, b, c) == p.eval(a, b, c) + q.eval(a, b, c)


@given(polys, polys)
def test_exact_division(p, q):
    if q.is_zero():
        return
    assert (p * q).exact_div(q) == p


@given(polys)
def test_json_round_trip(p):
    assert WeightPoly.from_json(p.to_json()) == p


def test_str():
    assert str(ALPHA**2 * BETA + ALPHA * BETA**2) == "α^2β + αβ^2"
    assert str(ZERO) == "0"
    assert str(Q) == "q"


@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(polys, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_bareiss_matches_leibniz(mat):
    assert bareiss_det(mat) == det_by_permutations(mat)
