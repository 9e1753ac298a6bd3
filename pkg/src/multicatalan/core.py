"""Words over {D, E, A}, their Young shapes, and the D-E decomposition.

A word is a state of the two-species exclusion process: ``D`` is a heavy
particle, ``A`` a light particle and ``E`` a hole.  Reading a word left to
right as a lattice path (D = south edge, E = west edge, A = west edge then
south edge) gives a Young diagram in English notation: one row per D or A,
one column per E or A.  Rows are numbered top to bottom, columns left to
right, so the right-most column belongs to the earliest E/A of the word.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

LETTERS = "DEA"


class WordError(ValueError):
    """Raised for text that is not a word over {D, E, A}."""

    def __init__(self, text: str, index: int):
        self.text = text
        self.index = index
        super().__init__(f"invalid letter {text[index]!r} at index {index} in {text!r}")


@dataclass(frozen=True)
class Word:
    letters: str

    def __post_init__(self):
        for i, ch in enumerate(self.letters):
            if ch not in LETTERS:
                raise WordError(self.letters, i)

    @property
    def m(self) -> int:
        return len(self.letters)

    @property
    def k(self) -> int:
        return self.letters.count("D")

    @property
    def r(self) -> int:
        return self.letters.count("A")

    @property
    def e(self) -> int:
        return self.letters.count("E")

    @property
    def edge_count(self) -> int:
        """Number of edges of the boundary path; each A contributes two."""
        return self.m + self.r

    def __str__(self) -> str:
        return self.letters

    def __len__(self) -> int:
        return len(self.letters)

    def __getitem__(self, i):
        return self.letters[i]


def parse_word(text: str) -> Word:
    if not text:
        raise ValueError("empty word")
    for i, ch in enumerate(text):
        if ch.upper() not in LETTERS:
            raise WordError(text, i)
    return Word(text.upper())


def as_word(w) -> Word:
    return w if isinstance(w, Word) else parse_word(w)


@dataclass(frozen=True)
class Shape:
    """Labelled Young shape of a word.

    ``row_pos[i]`` / ``col_pos[j]`` give the word position carrying the label
    of row ``i`` / column ``j``.  Zero-length rows and columns are kept.
    """

    parts: tuple[int, ...]
    row_labels: str
    col_labels: str
    row_pos: tuple[int, ...]
    col_pos: tuple[int, ...]

    @property
    def nrows(self) -> int:
        return len(self.parts)

    @property
    def ncols(self) -> int:
        return len(self.col_labels)

    @property
    def conjugate(self) -> tuple[int, ...]:
        return tuple(sum(1 for p in self.parts if p > j) for j in range(self.ncols))

    def boxes(self):
        for i, p in enumerate(self.parts):
            for j in range(p):
                yield i, j

    def box_type(self, i: int, j: int) -> str:
        return self.row_labels[i] + self.col_labels[j]

    def to_json(self) -> dict:
        return {
            "parts": list(self.parts),
            "rowLabels": self.row_labels,
            "colLabels": self.col_labels,
        }


def shape_of(word) -> Shape:
    w = as_word(word).letters
    row_pos = tuple(i for i, ch in enumerate(w) if ch in "DA")
    ea = [i for i, ch in enumerate(w) if ch in "EA"]
    # right-most column is the earliest E/A occurrence
    col_pos = tuple(reversed(ea))
    parts = tuple(sum(1 for q in ea if q > p) for p in row_pos)
    return Shape(
        parts=parts,
        row_labels="".join(w[p] for p in row_pos),
        col_labels="".join(w[q] for q in col_pos),
        row_pos=row_pos,
        col_pos=col_pos,
    )


def boundary_word(shape: Shape) -> str:
    """Read the labelled boundary path of ``shape`` back into a word.

    Walks from the north-east corner; every A inner-corner pair (west A-edge
    followed by south A-edge) is read once.
    """
    steps = []  # (direction, label)
    x = shape.ncols
    col_label = {j: shape.col_labels[j] for j in range(shape.ncols)}
    for i, p in enumerate(shape.parts):
        while x > p:
            x -= 1
            steps.append(("W", col_label[x]))
        steps.append(("S", shape.row_labels[i]))
    while x > 0:
        x -= 1
        steps.append(("W", col_label[x]))
    out = []
    skip_next_a = False
    for d, lab in steps:
        if lab == "A":
            if d == "W":
                out.append("A")
                skip_next_a = True
                continue
            if skip_next_a:
                skip_next_a = False
                continue
            raise ValueError("A-labelled south edge without a preceding A west edge")
        if skip_next_a:
            raise ValueError("A-labelled west edge not followed by an A south edge")
        out.append(lab)
    if skip_next_a:
        raise ValueError("dangling A west edge")
    return "".join(out)


@dataclass(frozen=True)
class DEDecomposition:
    subwords: tuple[str, ...]
    partitions: tuple[tuple[int, ...], ...]

    def join(self) -> str:
        return "A".join(self.subwords)


def de_decompose(word) -> DEDecomposition:
    parts = as_word(word).letters.split("A")
    return DEDecomposition(
        subwords=tuple(parts),
        partitions=tuple(shape_of(Word(p)).parts for p in parts),
    )


def all_words(m: int, r: int) -> list[Word]:
    """All words of length ``m`` with ``r`` A's, in lexicographic order."""
    if m < 0 or r < 0:
        raise ValueError("m and r must be non-negative")
    if r > m:
        raise ValueError(f"r={r} exceeds m={m}")
    out = [
        Word("".join(t))
        for t in itertools.product("ADE", repeat=m)
        if t.count("A") == r
    ]
    assert len(out) == comb(m, r) * 2 ** (m - r)
    return out
