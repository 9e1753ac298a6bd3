import pytest
from hypothesis import given

from multicatalan.core import (
    Word, WordError, all_words, boundary_word, de_decompose, parse_word, shape_of,
)

from conftest import words


def test_parse_counts():
    w = parse_word("DEEAE")
    assert (w.m, w.k, w.e, w.r) == (5, 1, 3, 1)
    a = parse_word("A")
    assert (a.m, a.k, a.e, a.r) == (1, 0, 0, 1)


def test_parse_reports_index():
    with pytest.raises(WordError) as exc:
        parse_word("DEX")
    assert exc.value.index == 2


def test_parse_rejects_empty():
    with pytest.raises(ValueError):
        parse_word("")


def test_shape_dddeadea():
    sh = shape_of("DDDEADEA")
    assert sh.parts == (4, 4, 4, 2, 2, 0)
    assert sh.row_labels == "DDDADA"
    assert sorted(j for j, c in enumerate(sh.col_labels) if c == "A") == [0, 2]
    assert Word("DDDEADEA").edge_count == 10


def test_shape_small():
    sh = shape_of("AAA")
    assert sh.parts == (2, 1, 0)
    assert sh.row_labels == "AAA" and sh.col_labels == "AAA"
    assert shape_of("DEEAE").parts == (4, 1)
    assert shape_of("DEEAE").row_labels == "DA"


def test_de_decompose_example():
    dec = de_decompose("EEDEDEAEDDEAEE")
    assert dec.subwords == ("EEDEDE", "EDDE", "EE")
    assert dec.partitions == ((2, 1), (1, 1), ())
    assert de_decompose("A").subwords == ("", "")
    assert de_decompose("DE").partitions == ((1,),)


def test_all_words():
    assert [w.letters for w in all_words(2, 1)] == ["AD", "AE", "DA", "EA"]
    assert len(all_words(3, 1)) == 12
    assert [w.letters for w in all_words(1, 0)] == ["D", "E"]
    with pytest.raises(ValueError):
        all_words(2, 3)


@given(words(max_size=10))
def test_boundary_round_trip(s):
    assert boundary_word(shape_of(s)) == s


@given(words(max_size=10))
def test_shape_invariants(s):
    w, sh = Word(s), shape_of(s)
    assert sh.nrows == w.k + w.r
    assert sh.row_labels.count("A") == sh.col_labels.count("A") == w.r
    assert all(a >= b for a, b in zip(sh.parts, sh.parts[1:]))
    assert sum(1 for p in sh.conjugate if p > 0) <= w.e + w.r


def test_de_decompose_round_trip_exhaustive():
    for m in range(1, 9):
        for r in range(m + 1):
            for w in all_words(m, r):
                dec = de_decompose(w)
                assert dec.join() == w.letters
                assert all(shape_of(s).parts == p for s, p in zip(dec.subwords, dec.partitions) if s)
