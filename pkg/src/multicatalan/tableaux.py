"""Multi-Catalan tableaux in staircase and condensed form.

Fillings are stored row by row as strings over ``a`` (alpha), ``b`` (beta),
``x`` (diagonal A marker, staircase only) and ``.`` (empty).

Condensed coordinates: row ``i`` is the i-th D/A letter of the word, column
``j`` counts from the left, and the right-most column belongs to the
earliest E/A letter (see :func:`multicatalan.core.shape_of`).

Staircase coordinates: row ``i`` has ``m - i`` boxes, its right-most box is
the diagonal box carrying letter ``i``; column ``c`` carries letter
``m - 1 - c``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import Shape, Word, as_word, shape_of
from .exact import WeightPoly

EMPTY = "."
_SYMBOL_NAMES = {"a": "alpha", "b": "beta", "x": "x"}
_GLYPH = {"a": "α", "b": "β", "x": "x", ".": "·"}
_DIAG = {"D": "a", "E": "b", "A": "x"}


@dataclass(frozen=True)
class Monomial:
    a: int
    b: int

    def poly(self) -> WeightPoly:
        return WeightPoly.monomial(self.a, self.b)

    def __str__(self) -> str:
        return str(self.poly())


@dataclass(frozen=True)
class CondensedTableau:
    word: str
    rows: tuple[str, ...]

    @property
    def shape(self) -> Shape:
        return shape_of(self.word)

    def symbol(self, i: int, j: int) -> str:
        return self.rows[i][j]

    def to_json(self) -> dict:
        sh = self.shape
        w = weight(self)
        return {
            "word": self.word,
            "shape": list(sh.parts),
            "boundaryLabels": {"rows": sh.row_labels, "cols": sh.col_labels},
            "filling": [
                {"row": i, "col": j, "symbol": _SYMBOL_NAMES[s]}
                for i, row in enumerate(self.rows)
                for j, s in enumerate(row)
                if s != EMPTY
            ],
            "weight": {"a": w.a, "b": w.b},
        }


@dataclass(frozen=True)
class StaircaseTableau:
    word: str
    rows: tuple[str, ...]

    @property
    def m(self) -> int:
        return len(self.word)

    @property
    def diagonal(self) -> str:
        return "".join(row[-1] for row in self.rows)

    def to_json(self) -> dict:
        w = weight(self)
        return {
            "word": self.word,
            "size": self.m,
            "filling": [
                {"row": i, "col": j, "symbol": _SYMBOL_NAMES[s]}
                for i, row in enumerate(self.rows)
                for j, s in enumerate(row)
                if s != EMPTY
            ],
            "weight": {"a": w.a, "b": w.b},
        }


# -- condensed enumeration ---------------------------------------------------

def _condensed_choices(box_type: str) -> tuple[str, ...]:
    if box_type == "DE":
        return ("a", "b")
    if box_type == "DA":
        return ("b",)
    if box_type == "AE":
        return ("a",)
    return (EMPTY,)


@lru_cache(maxsize=None)
def _enumerate_condensed(word: str) -> tuple[CondensedTableau, ...]:
    sh = shape_of(word)
    grid = [[EMPTY] * p for p in sh.parts]
    # bottom row to top row, right-most box first
    order = [(i, j) for i in reversed(range(sh.nrows)) for j in reversed(range(sh.parts[i]))]
    out: list[CondensedTableau] = []

    def forced_empty(i: int, j: int) -> bool:
        row = grid[i]
        if "b" in row[j + 1:]:
            return True
        return any(grid[r][j] == "a" for r in range(i + 1, sh.nrows) if sh.parts[r] > j)

    def rec(n: int):
        if n == len(order):
            out.append(CondensedTableau(word, tuple("".join(r) for r in grid)))
            return
        i, j = order[n]
        choices = (EMPTY,) if forced_empty(i, j) else _condensed_choices(sh.box_type(i, j))
        for s in choices:
            grid[i][j] = s
            rec(n + 1)
        grid[i][j] = EMPTY

    rec(0)
    return tuple(out)


def enumerate_condensed(word) -> list[CondensedTableau]:
    return list(_enumerate_condensed(as_word(word).letters))


# -- staircase enumeration ---------------------------------------------------

@lru_cache(maxsize=None)
def _enumerate_staircase(word: str, literal: bool) -> tuple[StaircaseTableau, ...]:
    m = len(word)
    grid = [[EMPTY] * (m - i) for i in range(m)]
    for i, ch in enumerate(word):
        grid[i][m - 1 - i] = _DIAG[ch]
    order = [(i, c) for i in reversed(range(m)) for c in reversed(range(m - 1 - i))]
    out: list[StaircaseTableau] = []

    def seen_right(i: int, c: int) -> str:
        for s in grid[i][c + 1:]:
            if s != EMPTY:
                return s
        raise AssertionError("the diagonal closes every row")

    def seen_below(i: int, c: int) -> str:
        for r in range(i + 1, m - c):
            if grid[r][c] != EMPTY:
                return grid[r][c]
        raise AssertionError("the diagonal closes every column")

    def choices(i: int, c: int) -> tuple[str, ...]:
        right, below = seen_right(i, c), seen_below(i, c)
        if right == "b" or below == "a":
            return (EMPTY,)
        if not literal:
            # line class is fixed by the diagonal symbol of the row / column
            right = grid[i][m - 1 - i]
            below = grid[m - 1 - c][c]
        if right == "a" and below == "b":
            return ("a", "b")
        if right == "a" and below == "x":
            return ("b",)
        if right == "x" and below == "b":
            return ("a",)
        return (EMPTY,)

    def rec(n: int):
        if n == len(order):
            out.append(StaircaseTableau(word, tuple("".join(r) for r in grid)))
            return
        i, c = order[n]
        for s in choices(i, c):
            grid[i][c] = s
            rec(n + 1)
        grid[i][c] = EMPTY

    rec(0)
    return tuple(out)


def enumerate_staircase(word, literal: bool = False) -> list[StaircaseTableau]:
    """Staircase tableaux of the given type.

    With ``literal=True`` the "first symbol seen" of rules 2-4 is taken at
    face value, so an interior alpha in an A-row counts as an alpha.  That
    reading breaks the AE recurrence (``AEE`` gets an extra tableau) and is
    kept only for comparison.
    """
    return list(_enumerate_staircase(as_word(word).letters, literal))


def condense(t: StaircaseTableau) -> CondensedTableau:
    m = t.m
    sh = shape_of(t.word)
    rows = []
    for i, p in enumerate(sh.row_pos):
        rows.append("".join(t.rows[p][m - 1 - sh.col_pos[j]] for j in range(sh.parts[i])))
    return CondensedTableau(t.word, tuple(rows))


def expand(t: CondensedTableau) -> StaircaseTableau:
    """Inverse of :func:`condense`."""
    word = t.word
    m = len(word)
    sh = shape_of(word)
    grid = [[EMPTY] * (m - i) for i in range(m)]
    for i, ch in enumerate(word):
        grid[i][m - 1 - i] = _DIAG[ch]
    for i, p in enumerate(sh.row_pos):
        for j, s in enumerate(t.rows[i]):
            grid[p][m - 1 - sh.col_pos[j]] = s
    return StaircaseTableau(word, tuple("".join(r) for r in grid))


def weight(t) -> Monomial:
    if isinstance(t, StaircaseTableau):
        return Monomial(sum(r.count("a") for r in t.rows), sum(r.count("b") for r in t.rows))
    w = Word(t.word)
    return Monomial(
        w.k + sum(r.count("a") for r in t.rows),
        w.e + sum(r.count("b") for r in t.rows),
    )


def interior_weight(t: CondensedTableau) -> Monomial:
    return Monomial(sum(r.count("a") for r in t.rows), sum(r.count("b") for r in t.rows))


@lru_cache(maxsize=None)
def _word_weight(word: str) -> WeightPoly:
    t: dict = {}
    for tab in _enumerate_condensed(word):
        mono = weight(tab)
        key = (mono.a, mono.b, 0)
        t[key] = t.get(key, 0) + 1
    return WeightPoly(t)


def word_weight(word) -> WeightPoly:
    return _word_weight(as_word(word).letters)


# -- validation --------------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    row: int
    col: int
    rule: str

    def __str__(self) -> str:
        return f"rule {self.rule} at ({self.row + 1},{self.col + 1})"


def validate(t) -> list[Violation]:
    if isinstance(t, StaircaseTableau):
        return _validate_staircase(t)
    return _validate_condensed(t)


def _validate_condensed(t: CondensedTableau) -> list[Violation]:
    sh = shape_of(t.word)
    out: list[Violation] = []
    if tuple(len(r) for r in t.rows) != sh.parts:
        return [Violation(-1, -1, "shape")]
    for i, row in enumerate(t.rows):
        for j, s in enumerate(row):
            if s not in "ab.":
                out.append(Violation(i, j, "symbol"))
                continue
            beta_right = "b" in row[j + 1:]
            alpha_below = any(
                t.rows[r][j] == "a" for r in range(i + 1, sh.nrows) if sh.parts[r] > j
            )
            if beta_right and s != EMPTY:
                out.append(Violation(i, j, "i"))
                continue
            if alpha_below and s != EMPTY:
                out.append(Violation(i, j, "ii"))
                continue
            if beta_right or alpha_below:
                continue
            bt = sh.box_type(i, j)
            if bt == "DE" and s not in "ab":
                out.append(Violation(i, j, "iii"))
            elif bt == "DA" and s != "b":
                out.append(Violation(i, j, "iv"))
            elif bt == "AE" and s != "a":
                out.append(Violation(i, j, "v"))
            elif bt == "AA" and s != EMPTY:
                out.append(Violation(i, j, "vi"))
    return out


def _validate_staircase(t: StaircaseTableau) -> list[Violation]:
    m = t.m
    out: list[Violation] = []
    if tuple(len(r) for r in t.rows) != tuple(m - i for i in range(m)):
        return [Violation(-1, -1, "shape")]
    for i in range(m):
        if t.rows[i][m - 1 - i] != _DIAG[t.word[i]]:
            out.append(Violation(i, m - 1 - i, "1"))
    for i in range(m):
        for c in range(m - 1 - i):
            s = t.rows[i][c]
            right = next((x for x in t.rows[i][c + 1:] if x != EMPTY), EMPTY)
            below = next(
                (t.rows[r][c] for r in range(i + 1, m - c) if t.rows[r][c] != EMPTY), EMPTY
            )
            row_diag = t.rows[i][m - 1 - i]
            col_diag = t.rows[m - 1 - c][c]
            if right == "b" or below == "a":
                allowed = EMPTY
                rule = "5"
            elif row_diag == "a" and col_diag == "b":
                allowed, rule = "ab", "2"
            elif row_diag == "a" and col_diag == "x":
                allowed, rule = "b", "3"
            elif row_diag == "x" and col_diag == "b":
                allowed, rule = "a", "4"
            else:
                allowed, rule = EMPTY, "5"
            if s not in allowed:
                out.append(Violation(i, c, rule))
    return out


# -- rendering ---------------------------------------------------------------

def render_condensed(t: CondensedTableau) -> str:
    sh = shape_of(t.word)
    lines = [f"type {t.word}  weight {weight(t)}"]
    width = sh.ncols
    lines.append("   " + " ".join(sh.col_labels) if width else "   (no columns)")
    for i, row in enumerate(t.rows):
        cells = " ".join(_GLYPH[s] for s in row)
        lines.append(f"{sh.row_labels[i]}  {cells}")
    return "\n".join(lines)


def render_staircase(t: StaircaseTableau) -> str:
    lines = [f"type {t.word}  weight {weight(t)}"]
    for row in t.rows:
        lines.append(" ".join(_GLYPH[s] for s in row))
    return "\n".join(lines)
