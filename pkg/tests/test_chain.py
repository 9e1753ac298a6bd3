from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from multicatalan.chain import (
    DEFAULT_GRID, ChainParams, build_sector_chain, moves, partition_function,
    residual, stationary, transitions, verify_ansatz, verify_stationary_theorem,
)
from multicatalan.core import Word, all_words
from multicatalan.exact import WeightPoly

from conftest import words


def test_transitions_examples():
    p = ChainParams(1, 1, 0)
    assert transitions("DE", p) == [("ED", F(1, 3))]
    assert transitions("AE", p) == [("EA", F(1, 3))]
    assert sorted(transitions("ED", ChainParams(2, 3, 0))) == [("DD", F(2, 3)), ("EE", F(1))]


def test_params_validation():
    with pytest.raises(ValueError):
        ChainParams(0, 1, 0)
    with pytest.raises(ValueError):
        ChainParams(1, 1, -1)


def test_sector_shapes():
    c = build_sector_chain(1, 1, ChainParams())
    assert c.states == ["A"] and c.rows == [{0: F(1)}]
    assert build_sector_chain(2, 0, ChainParams()).states == ["DD", "DE", "ED", "EE"]
    assert len(build_sector_chain(3, 1, ChainParams()).states) == 12


def test_stationary_examples():
    pi = stationary(build_sector_chain(2, 0, ChainParams(1, 1, 0)))
    assert pi.probabilities == {"DD": F(1, 5), "DE": F(2, 5), "ED": F(1, 5), "EE": F(1, 5)}
    assert stationary(build_sector_chain(1, 1, ChainParams())).probabilities == {"A": 1}
    assert stationary(build_sector_chain(1, 0, ChainParams())).probabilities == {"D": F(1, 2), "E": F(1, 2)}


def test_partition_function():
    a, b = WeightPoly.monomial(1, 0), WeightPoly.monomial(0, 1)
    assert partition_function(2, 0) == a**2 + a**2 * b + a * b**2 + a * b + b**2
    assert partition_function(1, 1) == WeightPoly.const(1)
    assert partition_function(3, 1).eval(1, 1) == 14


@given(words(max_size=8))
def test_moves_conserve_a(s):
    for target, _ in moves(s):
        assert Word(target).r == Word(s).r and len(target) == len(s)


@given(st.integers(1, 5).flatmap(lambda m: st.tuples(st.just(m), st.integers(0, m))),
       st.sampled_from(DEFAULT_GRID), st.sampled_from([F(0), F(1), F(1, 2)]))
def test_rows_stochastic(mr, ab, q):
    m, r = mr
    c = build_sector_chain(m, r, ChainParams(ab[0], ab[1], q))
    for row in c.rows:
        assert sum(row.values()) == 1 and all(p >= 0 for p in row.values())
    pi = stationary(c)
    assert residual(c, pi) == []


def test_uniformization_only_when_needed():
    assert build_sector_chain(3, 1, ChainParams(1, 1, 0)).uniformization == 1
    assert build_sector_chain(3, 1, ChainParams(3, 5, 0)).uniformization > 1


def test_theorem_small():
    for m in range(1, 6):
        for r in range(m + 1):
            assert verify_stationary_theorem(m, r)["pass"]
    rep = verify_stationary_theorem(2, 0, [(F(1), F(1))])
    assert rep["checked"] == 4


def test_ansatz_small():
    rep = verify_ansatz(5)
    assert rep["pass"] and all(rep["instances"].values())


def test_csv_output():
    pi = stationary(build_sector_chain(2, 0, ChainParams()))
    assert pi.to_csv().splitlines() == ["word,probability", "DD,1/5", "DE,2/5", "ED,1/5", "EE,1/5"]
