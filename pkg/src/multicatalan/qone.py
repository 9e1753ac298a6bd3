"""Two-species alternative tableaux and the q = 1 stationary-law harness.

Fillings live on the staircase of size m.  Symbols::

    a  alpha      A  alpha-hat      b  beta      B  beta-hat
    q  q          Q  q-hat          u  u         U  u-hat
    x  diagonal marker of an A letter

Boxes are filled in two passes.  The first pass walks from the diagonal
inwards (bottom row first, right-most box first) and places Greek symbols
and q's.  A box is blocked when the first Greek symbol to its right is a
beta or beta-hat, or the first one below it is an alpha or alpha-hat.
Blocked boxes hold u, except those blocked from the right by a beta-hat and
from below by an alpha-hat: these intersections take q-hat or u-hat when the
A-rows and A-columns between the pair balance, and u otherwise.

Which symbols an unblocked box may take depends on its row letter and
column letter and is given by a :class:`RuleSet`.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .chain import ChainParams, DEFAULT_GRID, build_sector_chain, moves, stationary
from .core import all_words, as_word
from .exact import WeightPoly, ZERO, format_rational
from .tableaux import word_weight

ALT_SYMBOLS = "aAbBqQuU"
_GREEK = set("aAbB")
_DIAG = {"D": "a", "E": "b", "A": "x"}
_NAMES = {"a": "alpha", "A": "alpha-hat", "b": "beta", "B": "beta-hat",
          "q": "q", "Q": "q-hat", "u": "u", "U": "u-hat", "x": "x"}
_GLYPH = {"a": "α", "A": "â", "b": "β", "B": "b̂", "q": "q", "Q": "q̂",
          "u": "·", "U": "û", "x": "x"}
# exponents (alpha, beta, q) contributed by each symbol
_WEIGHT = {"a": (1, 0, 0), "A": (1, 0, 0), "b": (0, 1, 0), "B": (0, 1, 0),
           "q": (0, 0, 1), "Q": (0, 0, 1), "u": (0, 0, 0), "U": (0, 0, 0), "x": (0, 0, 0)}


@dataclass(frozen=True)
class RuleSet:
    """Interpretation of the filling rules.

    ``de``, ``da``, ``ae``: symbols allowed in an unblocked box of that type.
    ``q_transparent``: q boxes are skipped when looking for the symbol a box sees.
    ``between``: how the A-rows/A-columns between a hat pair are counted;
    ``"open"`` counts strictly between the two hats, ``"closed"`` includes the
    hats' own A lines.
    ``patterns``: ``"submatrix"`` forbids the two 2x2 patterns on any two
    intersection rows and columns; ``"adjacent"`` only on consecutive ones.
    """

    de: tuple[str, ...] = ("a", "b", "q")
    da: tuple[str, ...] = ("B", "q")
    ae: tuple[str, ...] = ("A", "q")
    q_transparent: bool = True
    between: str = "open"
    patterns: str = "submatrix"
    name: str = "default"

    def __post_init__(self):
        for key in ("de", "da", "ae"):
            syms = tuple(getattr(self, key))
            object.__setattr__(self, key, syms)
            if not syms or any(s not in "aAbBq" for s in syms):
                raise ValueError(f"rule set {key!r} must be a nonempty subset of a, A, b, B, q")
        if self.between not in ("open", "closed"):
            raise ValueError(f"unknown between mode {self.between!r}")
        if self.patterns not in ("submatrix", "adjacent"):
            raise ValueError(f"unknown pattern mode {self.patterns!r}")

    @classmethod
    def from_json(cls, data) -> "RuleSet":
        if isinstance(data, str):
            data = json.loads(data)
        alias = {"alpha": "a", "alpha-hat": "A", "beta": "b", "beta-hat": "B", "q": "q"}
        kw = {}
        for key in ("de", "da", "ae"):
            if key in data:
                kw[key] = tuple(alias.get(s, s) for s in data[key])
        for key in ("q_transparent", "between", "patterns", "name"):
            if key in data:
                kw[key] = data[key]
        return cls(**kw)

    def to_json(self) -> dict:
        return {"name": self.name, "de": [_NAMES[s] for s in self.de],
                "da": [_NAMES[s] for s in self.da], "ae": [_NAMES[s] for s in self.ae],
                "q_transparent": self.q_transparent, "between": self.between,
                "patterns": self.patterns}


DEFAULT_RULES = RuleSet()


@dataclass(frozen=True)
class AltTableau:
    word: str
    rows: tuple[str, ...]

    @property
    def m(self) -> int:
        return len(self.word)

    def to_json(self) -> dict:
        return {"word": self.word,
                "filling": [[_NAMES[s] for s in row] for row in self.rows],
                "weight": alt_weight(self, track_q=True).to_json()}


def _first(seq) -> str | None:
    for s in seq:
        if s is not None:
            return s
    return None


class _Grid:
    """Mutable staircase used during enumeration."""

    def __init__(self, word: str, rules: RuleSet):
        m = len(word)
        self.m = m
        self.word = word
        self.rules = rules
        self.cells: list[list[str]] = [["u"] * (m - i) for i in range(m)]
        for i, ch in enumerate(word):
            self.cells[i][m - 1 - i] = _DIAG[ch]

    def col_letter(self, c: int) -> str:
        return self.word[self.m - 1 - c]

    def _visible(self, s: str) -> bool:
        if s in _GREEK or s == "x":
            return True
        return s == "q" and not self.rules.q_transparent

    def seen_right(self, i: int, c: int) -> tuple[str, int]:
        row = self.cells[i]
        for cc in range(c + 1, len(row)):
            if self._visible(row[cc]):
                return row[cc], cc
        raise AssertionError("diagonal closes every row")

    def seen_below(self, i: int, c: int) -> tuple[str, int]:
        for r in range(i + 1, self.m - c):
            if self._visible(self.cells[r][c]):
                return self.cells[r][c], r
        raise AssertionError("diagonal closes every column")


def _box_choices(g: _Grid, i: int, c: int) -> tuple[tuple[str, ...], object]:
    """Symbols for box (i, c) and, for hat intersections, the hat pair."""
    right, cr = g.seen_right(i, c)
    below, rb = g.seen_below(i, c)
    if right in ("b", "B") or below in ("a", "A"):
        if right == "B" and below == "A":
            return ("?",), (rb, c, i, cr)  # decided in the second pass
        return ("u",), None
    if right == "q" or below == "q":
        # only reachable with opaque q: a box behind a q stays empty
        return ("u",), None
    rl, cl = g.word[i], g.col_letter(c)
    if rl == "E" or cl == "D":
        return ("u",), None
    kind = rl + cl
    if kind == "DE":
        return g.rules.de, None
    if kind == "DA":
        return g.rules.da, None
    if kind == "AE":
        return g.rules.ae, None
    return ("u",), None


def _balanced(word: str, m: int, pair, mode: str) -> bool:
    """Compare A-rows and A-columns lying between an alpha-hat and a beta-hat."""
    r1, c1, r2, c2 = pair  # alpha-hat at (r1, c1), beta-hat at (r2, c2); r2 < r1, c1 < c2
    e1 = m - 1 - c1
    a2 = m - 1 - c2
    if mode == "open":
        a_rows = sum(1 for p in range(r2 + 1, r1) if word[p] == "A")
        a_cols = sum(1 for p in range(a2 + 1, e1) if word[p] == "A")
    else:
        a_rows = sum(1 for p in range(r2, r1 + 1) if word[p] == "A")
        a_cols = sum(1 for p in range(a2, e1 + 1) if word[p] == "A")
    return a_rows == a_cols


def _pattern_free(cells: dict[tuple[int, int], str], mode: str) -> bool:
    rows = sorted({i for i, _ in cells})
    cols = sorted({c for _, c in cells})
    if mode == "adjacent":
        row_pairs = zip(rows, rows[1:])
        col_pairs = list(zip(cols, cols[1:]))
    else:
        row_pairs = itertools.combinations(rows, 2)
        col_pairs = list(itertools.combinations(cols, 2))
    for ra, rb in row_pairs:
        for ca, cb in col_pairs:
            quad = (cells.get((ra, ca)), cells.get((ra, cb)), cells.get((rb, ca)), cells.get((rb, cb)))
            if None in quad:
                continue
            # top-left, top-right, bottom-left, bottom-right in the drawn orientation
            if quad[0] == "Q" and quad[1] == "U" and quad[2] == "U" and quad[3] in ("U", "Q"):
                return False
    return True


def _hat_assignments(g: _Grid, pending: list[tuple[int, int, object]]):
    m = g.m
    free = []
    fixed = {}
    for i, c, pair in pending:
        if _balanced(g.word, m, pair, g.rules.between):
            free.append((i, c))
        else:
            fixed[(i, c)] = "u"
    for combo in itertools.product("QU", repeat=len(free)):
        cells = dict(zip(free, combo))
        if _pattern_free(cells, g.rules.patterns):
            yield {**fixed, **cells}


@lru_cache(maxsize=None)
def _enumerate_alt(word: str, rules: RuleSet) -> tuple[AltTableau, ...]:
    g = _Grid(word, rules)
    m = g.m
    order = [(i, c) for i in reversed(range(m)) for c in reversed(range(m - 1 - i))]
    out: list[AltTableau] = []

    def finish(pending):
        for assignment in _hat_assignments(g, pending):
            rows = []
            for i in range(m):
                row = list(g.cells[i])
                for (ii, c), s in assignment.items():
                    if ii == i:
                        row[c] = s
                rows.append("".join(row))
            out.append(AltTableau(word, tuple(rows)))

    def rec(n: int, pending: list):
        if n == len(order):
            finish(pending)
            return
        i, c = order[n]
        choices, pair = _box_choices(g, i, c)
        if choices == ("?",):
            g.cells[i][c] = "u"
            rec(n + 1, pending + [(i, c, pair)])
            return
        for s in choices:
            g.cells[i][c] = s
            rec(n + 1, pending)
        g.cells[i][c] = "u"

    rec(0, [])
    return tuple(out)


def enumerate_alt(word, rules: RuleSet = DEFAULT_RULES) -> list[AltTableau]:
    return list(_enumerate_alt(as_word(word).letters, rules))


def alt_weight(t: AltTableau, track_q: bool = False) -> WeightPoly:
    a = b = c = 0
    for row in t.rows:
        for s in row:
            x, y, z = _WEIGHT[s]
            a, b, c = a + x, b + y, c + z
    return WeightPoly.monomial(a, b, c if track_q else 0)


@lru_cache(maxsize=None)
def _alt_word_weight(word: str, rules: RuleSet, track_q: bool) -> WeightPoly:
    t: dict = {}
    for tab in _enumerate_alt(word, rules):
        e = next(iter(alt_weight(tab, track_q).terms))
        t[e] = t.get(e, 0) + 1
    return WeightPoly(t)


def alt_word_weight(word, rules: RuleSet = DEFAULT_RULES, track_q: bool = False) -> WeightPoly:
    return _alt_word_weight(as_word(word).letters, rules, track_q)


# -- independent validator --------------------------------------------------

def validate_alt(t: AltTableau, rules: RuleSet = DEFAULT_RULES) -> list[str]:
    """Re-check a filling box by box, working from the finished grid only."""
    m = t.m
    problems = []
    rows = t.rows
    if tuple(len(r) for r in rows) != tuple(m - i for i in range(m)):
        return ["shape"]
    for i, ch in enumerate(t.word):
        if rows[i][m - 1 - i] != _DIAG[ch]:
            problems.append(f"diagonal at row {i + 1}")

    def visible(s):
        return s in _GREEK or s == "x" or (s == "q" and not rules.q_transparent)

    hats = {}
    for i in range(m):
        for c in range(m - 1 - i):
            s = rows[i][c]
            if s not in ALT_SYMBOLS:
                problems.append(f"symbol {s!r} at ({i + 1},{c + 1})")
                continue
            right = next(rows[i][cc] for cc in range(c + 1, m - i) if visible(rows[i][cc]))
            below = next(rows[r][c] for r in range(i + 1, m - c) if visible(rows[r][c]))
            rl, cl = t.word[i], t.word[m - 1 - c]
            if right in "bB" or below in "aA":
                if right == "B" and below == "A":
                    hats[(i, c)] = s
                    if s not in "uUQ":
                        problems.append(f"hat intersection ({i + 1},{c + 1}) holds {s}")
                elif s != "u":
                    problems.append(f"blocked box ({i + 1},{c + 1}) holds {s}")
                continue
            if right == "q" or below == "q":
                if s != "u":
                    problems.append(f"box behind q ({i + 1},{c + 1}) holds {s}")
                continue
            allowed = {"DE": rules.de, "DA": rules.da, "AE": rules.ae}.get(rl + cl, ("u",))
            if s not in allowed:
                problems.append(f"box ({i + 1},{c + 1}) of type {rl + cl} holds {s}")
    # hat pairs: locate the beta-hat to the right and alpha-hat below each intersection
    for (i, c), s in hats.items():
        c2 = next(cc for cc in range(c + 1, m - i) if visible(rows[i][cc]))
        r1 = next(r for r in range(i + 1, m - c) if visible(rows[r][c]))
        want_free = _balanced(t.word, m, (r1, c, i, c2), rules.between)
        if want_free and s == "u":
            problems.append(f"balanced intersection ({i + 1},{c + 1}) holds u")
        if not want_free and s != "u":
            problems.append(f"unbalanced intersection ({i + 1},{c + 1}) holds {s}")
    cells = {k: v for k, v in hats.items() if v in "QU"}
    if not _pattern_free(cells, rules.patterns):
        problems.append("forbidden q-hat/u-hat pattern")
    return problems


# -- conjecture harness -----------------------------------------------------

def q1_partition_function(m: int, r: int, rules: RuleSet = DEFAULT_RULES) -> WeightPoly:
    z = ZERO
    for w in all_words(m, r):
        z = z + alt_word_weight(w, rules)
    return z


def balance_residual(m: int, r: int, weights: dict[str, WeightPoly], alpha, beta, q=1) -> list[str]:
    """Words where candidate weights break global balance of the generator at the given point.

    A cheap necessary-and-sufficient test used to screen rule sets: an
    irreducible chain has a unique stationary law, so zero residual everywhere
    means the weights are proportional to it.
    """
    params = ChainParams(alpha, beta, q)
    val = {w: p.eval(alpha, beta, q) for w, p in weights.items()}
    out_rate: dict[str, Fraction] = {}
    inflow = {w: Fraction(0) for w in weights}
    rate = {"1": Fraction(1), "q": params.q, "alpha": params.alpha, "beta": params.beta}
    for w in weights:
        tot = Fraction(0)
        for target, sym in moves(w):
            x = rate[sym]
            tot += x
            inflow[target] += val[w] * x
        out_rate[w] = tot
    return [w for w in weights if val[w] * out_rate[w] != inflow[w]]


@lru_cache(maxsize=None)
def _q1_stationary(m: int, r: int, alpha: Fraction, beta: Fraction):
    return stationary(build_sector_chain(m, r, ChainParams(alpha, beta, 1)))


def verify_conjecture(m: int, r: int, rules: RuleSet = DEFAULT_RULES, grid=DEFAULT_GRID) -> dict:
    """Compare the exact q = 1 stationary law with alternative-tableau weights."""
    weights = {w.letters: alt_word_weight(w, rules) for w in all_words(m, r)}
    z = ZERO
    for p in weights.values():
        z = z + p
    counterexamples = []
    checked = 0
    for a, b in grid:
        a, b = Fraction(a), Fraction(b)
        pi = _q1_stationary(m, r, a, b)
        zval = z.eval(a, b, 1)
        for w, poly in weights.items():
            checked += 1
            predicted = poly.eval(a, b, 1) / zval
            if pi[w] != predicted:
                counterexamples.append({
                    "word": w, "alpha": format_rational(a), "beta": format_rational(b),
                    "stationary": format_rational(pi[w]), "predicted": format_rational(predicted),
                })
    return {"check": "q1-conjecture", "m": m, "r": r, "rules": rules.to_json(),
            "grid": [[format_rational(a), format_rational(b)] for a, b in grid],
            "checked": checked, "pass": not counterexamples,
            "counterexamples": counterexamples}


def candidate_rulesets() -> list[RuleSet]:
    """The default reading and single-change variants of it, in a fixed order."""
    return [
        DEFAULT_RULES,
        RuleSet(between="closed", name="between-closed"),
        RuleSet(patterns="adjacent", name="patterns-adjacent"),
        RuleSet(q_transparent=False, name="q-opaque"),
        RuleSet(de=("a", "b"), name="de-no-q"),
        RuleSet(de=("A", "B", "q"), name="de-hatted"),
        RuleSet(ae=("A",), name="ae-no-q"),
        RuleSet(ae=("a", "q"), name="ae-plain"),
        RuleSet(da=("B",), name="da-no-q"),
        RuleSet(da=("b", "q"), name="da-plain"),
    ]


def sweep_rulesets(m_max: int = 5, grid=DEFAULT_GRID, rulesets=None) -> dict:
    """Run :func:`verify_conjecture` for each candidate on every sector up to ``m_max``."""
    results = []
    for rules in rulesets or candidate_rulesets():
        failed = []
        first = None
        for m in range(1, m_max + 1):
            for r in range(m + 1):
                rep = verify_conjecture(m, r, rules, grid)
                if not rep["pass"]:
                    failed.append([m, r])
                    if first is None:
                        first = rep["counterexamples"][0]
        results.append({"rules": rules.to_json(), "pass": not failed,
                        "failed_sectors": failed, "first_counterexample": first})
    return {"check": "q1-sweep", "m_max": m_max,
            "passing": [x["rules"]["name"] for x in results if x["pass"]],
            "results": results}


def q0_consistency(m: int, r: int, rules: RuleSet = DEFAULT_RULES) -> dict:
    """q^0 coefficient of the q-tracked generating function vs the multi-Catalan weight."""
    failures = []
    words = all_words(m, r)
    for w in words:
        slice0 = alt_word_weight(w, rules, track_q=True).q_slice(0)
        ref = word_weight(w)
        if slice0 != ref:
            failures.append({"word": w.letters, "q0_slice": str(slice0), "multi_catalan": str(ref)})
    return {"check": "q0-consistency", "m": m, "r": r, "rules": rules.to_json(),
            "words": len(words), "pass": not failures, "failures": failures}


def render_alt(t: AltTableau) -> str:
    lines = [f"type {t.word}  weight {alt_weight(t, track_q=True)}"]
    for row in t.rows:
        lines.append(" ".join(_GLYPH[s] for s in row))
    return "\n".join(lines)
