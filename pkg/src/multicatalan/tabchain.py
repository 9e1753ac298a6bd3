"""A Markov chain on condensed multi-Catalan tableaux that projects to the
two-species exclusion process at q = 0.

Moves happen at transition points: corners (DE, DA or AE boxes that end
their row and their column) and the two legs (a leading E, a trailing D).
A corner holding beta moves its row, a corner holding alpha moves its
column; legs swap an empty column for a beta-row or an empty row for an
alpha-column.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chain import ChainParams, build_sector_chain, rate_value, stationary
from .core import all_words, shape_of
from .exact import WeightPoly, ZERO, format_rational, stationary_from_rates
from .tableaux import CondensedTableau, EMPTY, enumerate_condensed, validate, weight

CORNER_KINDS = ("DEcorner", "DAcorner", "AEcorner")


class InvalidTransitionPoint(ValueError):
    pass


@dataclass(frozen=True)
class TransitionPoint:
    kind: str  # DEcorner | DAcorner | AEcorner | RightLeg | LeftLeg
    row: int = -1
    col: int = -1
    position: int = -1  # word position of the left letter of the swapped pair


@dataclass(frozen=True)
class TransitionPointSummary:
    C: int
    delta_beta: int
    delta_alpha: int
    delta_R: int
    delta_L: int


@dataclass(frozen=True)
class TableauMove:
    source: CondensedTableau
    target: CondensedTableau
    point: TransitionPoint
    rate: str  # "1", "alpha" or "beta"
    case: int
    degenerate: bool
    # wt(target) / wt(source) as (alpha exponent, beta exponent)
    ratio: tuple[int, int]

    def rate_value(self, params: ChainParams) -> Fraction:
        return rate_value(self.rate, params)

    def rate_poly(self) -> WeightPoly:
        return {"1": WeightPoly.const(1), "alpha": WeightPoly.monomial(1, 0),
                "beta": WeightPoly.monomial(0, 1)}[self.rate]


def transition_points(t: CondensedTableau) -> list[TransitionPoint]:
    w = t.word
    sh = shape_of(w)
    row_of = {p: i for i, p in enumerate(sh.row_pos)}
    col_of = {q: j for j, q in enumerate(sh.col_pos)}
    out = []
    for p in range(len(w) - 1):
        pair = w[p:p + 2]
        if pair in ("DE", "DA", "AE"):
            i, j = row_of[p], col_of[p + 1]
            assert j == sh.parts[i] - 1, "adjacent pair must sit on a corner"
            out.append(TransitionPoint(pair + "corner", i, j, p))
    if w.startswith("E"):
        out.append(TransitionPoint("RightLeg", position=0))
    if w.endswith("D"):
        out.append(TransitionPoint("LeftLeg", position=len(w) - 1))
    return out


def summarize(t: CondensedTableau) -> TransitionPointSummary:
    pts = transition_points(t)
    corners = [p for p in pts if p.kind in CORNER_KINDS]
    parts = shape_of(t.word).parts
    nonzero = [x for x in parts if x]
    top = max(nonzero, default=0)
    bottom = min(nonzero, default=0)
    top_beta = any(parts[p.row] == top and t.rows[p.row][p.col] == "b" for p in corners)
    bottom_alpha = any(parts[p.row] == bottom and t.rows[p.row][p.col] == "a" for p in corners)
    return TransitionPointSummary(
        C=len(corners),
        delta_beta=int(top_beta),
        delta_alpha=int(bottom_alpha),
        delta_R=int(t.word.startswith("E")),
        delta_L=int(t.word.endswith("D")),
    )


# -- diagram surgery ----------------------------------------------------------

def _columns(rows: list[str], ncols: int) -> list[str]:
    return ["".join(r[j] for r in rows if len(r) > j) for j in range(ncols)]


def _rows(cols: list[str], nrows: int) -> list[str]:
    return ["".join(c[i] for c in cols if len(c) > i) for i in range(nrows)]


def _insert_lowest(lines: list[str], line: str) -> list[str]:
    """Insert below every line at least as long, keeping lengths weakly decreasing."""
    pos = sum(1 for x in lines if len(x) >= len(line))
    return lines[:pos] + [line] + lines[pos:]


def _ending_with(symbol: str, length: int) -> str:
    return EMPTY * (length - 1) + symbol if length > 0 else ""


def _swap(word: str, p: int) -> str:
    return word[:p] + word[p + 1] + word[p] + word[p + 2:]


def apply_transition(t: CondensedTableau, point: TransitionPoint) -> TableauMove:
    if point not in transition_points(t):
        raise InvalidTransitionPoint(f"{point} is not a transition point of {t}")
    w = t.word
    sh = shape_of(w)
    rows = list(t.rows)
    ncols, nrows = sh.ncols, sh.nrows
    parts = sh.parts
    nonzero = [x for x in parts if x]
    degenerate = False

    if point.kind in CORNER_KINDS:
        i, j = point.row, point.col
        sym = rows[i][j]
        new_word = _swap(w, point.position)
        rate = "1"
        if sym == "b":
            length = parts[i]
            rest = rows[:i] + rows[i + 1:]
            new_rows = _insert_lowest(rest, _ending_with("b", length - 1))
            if length == 1:
                case = 5
            elif length == min(nonzero):
                case = 3
            else:
                case = 1
        elif sym == "a":
            cols = _columns(rows, ncols)
            height = len(cols[j])
            rest = cols[:j] + cols[j + 1:]
            new_cols = _insert_lowest(rest, _ending_with("a", height - 1))
            new_rows = _rows(new_cols, nrows)
            if height == 1:
                case = 4
            elif parts[i] == max(nonzero):
                case = 2
            else:
                case = 1
        else:
            raise InvalidTransitionPoint(f"corner {point} of {t} is empty")
    elif point.kind == "RightLeg":
        cols = _columns(rows, ncols)
        assert cols[-1] == "", "right leg column must be empty"
        cols = cols[:-1]
        new_rows = _insert_lowest(rows, _ending_with("b", len(cols)))
        new_word = "D" + w[1:]
        rate, case = "alpha", 6
        degenerate = len(cols) == 0
    elif point.kind == "LeftLeg":
        assert rows[-1] == "", "left leg row must be empty"
        rest = rows[:-1]
        cols = _columns(rest, ncols)
        new_cols = _insert_lowest(cols, _ending_with("a", len(rest)))
        new_rows = _rows(new_cols, len(rest))
        new_word = w[:-1] + "E"
        rate, case = "beta", 7
        degenerate = len(rest) == 0
    else:
        raise InvalidTransitionPoint(f"unknown transition point kind {point.kind!r}")

    target_shape = shape_of(new_word)
    if tuple(len(r) for r in new_rows) != target_shape.parts:
        raise AssertionError(
            f"move {point.kind} on {w} gives shape {[len(r) for r in new_rows]}, "
            f"expected {list(target_shape.parts)}"
        )
    target = CondensedTableau(new_word, tuple(new_rows))
    w0, w1 = weight(t), weight(target)
    return TableauMove(t, target, point, rate, case, degenerate, (w1.a - w0.a, w1.b - w0.b))


def predicted_ratio(case: int, degenerate: bool = False) -> tuple[int, int]:
    """Weight ratio wt(target)/wt(source) as (alpha, beta) exponents."""
    if case in (1, 2, 3):
        return (0, 0)
    if case == 4:
        return (-1, 0)
    if case == 5:
        return (0, -1)
    if case == 6:
        return (1, -1) if degenerate else (1, 0)
    if case == 7:
        return (-1, 1) if degenerate else (0, 1)
    raise ValueError(f"no case {case}")


def moves_from(t: CondensedTableau) -> list[TableauMove]:
    return [apply_transition(t, p) for p in transition_points(t)]


def sector_tableaux(m: int, r: int) -> list[CondensedTableau]:
    out = []
    for w in all_words(m, r):
        out.extend(enumerate_condensed(w))
    return out


def check_moves(m: int, r: int) -> dict:
    """Closure under moves, type change, and agreement with the case table."""
    failures = []
    n_moves = 0
    case_counts: dict[int, int] = {}
    for t in sector_tableaux(m, r):
        for mv in moves_from(t):
            n_moves += 1
            case_counts[mv.case] = case_counts.get(mv.case, 0) + 1
            bad = validate(mv.target)
            if bad:
                failures.append({"source": _tid(t), "point": mv.point.kind,
                                 "problem": "invalid target", "violations": [str(v) for v in bad]})
            if mv.ratio != predicted_ratio(mv.case, mv.degenerate):
                failures.append({"source": _tid(t), "point": mv.point.kind, "case": mv.case,
                                 "problem": "weight ratio", "ratio": list(mv.ratio)})
    return {"check": "moves", "m": m, "r": r, "moves": n_moves,
            "cases": dict(sorted(case_counts.items())),
            "pass": not failures, "failures": failures}


def _tid(t: CondensedTableau) -> str:
    return t.word + ":" + "|".join(t.rows)


def verify_detailed_balance(m: int, r: int, params: ChainParams = ChainParams()) -> dict:
    """wt(T) * (total rate out of T) == sum of wt(T') * rate(T' -> T), for every T.

    Both sides are compared as polynomials in alpha, beta and at ``params``.
    """
    tabs = sector_tableaux(m, r)
    inflow: dict[CondensedTableau, WeightPoly] = {t: ZERO for t in tabs}
    outflow: dict[CondensedTableau, WeightPoly] = {}
    out_rates: dict[CondensedTableau, WeightPoly] = {}
    for t in tabs:
        wt = weight(t).poly()
        total = ZERO
        for mv in moves_from(t):
            total = total + mv.rate_poly()
            inflow[mv.target] = inflow[mv.target] + wt * mv.rate_poly()
        out_rates[t] = total
        outflow[t] = wt * total
    failures = []
    for t in tabs:
        s = summarize(t)
        expected_rate = (WeightPoly.const(s.C) + WeightPoly.monomial(1, 0) * s.delta_R
                         + WeightPoly.monomial(0, 1) * s.delta_L)
        lhs_v = outflow[t].eval(params.alpha, params.beta)
        rhs_v = inflow[t].eval(params.alpha, params.beta)
        if outflow[t] != inflow[t] or lhs_v != rhs_v or out_rates[t] != expected_rate:
            failures.append({"tableau": _tid(t), "outflow": str(outflow[t]),
                             "inflow": str(inflow[t]), "out_rate": str(out_rates[t]),
                             "expected_out_rate": str(expected_rate)})
    return {"check": "balance", "m": m, "r": r, "tableaux": len(tabs),
            "alpha": format_rational(params.alpha), "beta": format_rational(params.beta),
            "pass": not failures, "failures": failures}


def verify_projection(m: int, r: int, params: ChainParams = ChainParams()) -> dict:
    if params.q != 0:
        raise ValueError("the tableau chain projects to the process at q = 0 only")
    from .chain import transitions

    tabs = sector_tableaux(m, r)
    index = {t: i for i, t in enumerate(tabs)}
    failures = []
    rates: list[dict[int, Fraction]] = [dict() for _ in tabs]
    n1 = m + 1
    for t in tabs:
        pasep = dict(transitions(t.word, params))
        landed: dict[str, list[TableauMove]] = {}
        for mv in moves_from(t):
            landed.setdefault(mv.target.word, []).append(mv)
            p = mv.rate_value(params) / n1
            # condition (ii)
            if pasep.get(mv.target.word) != p:
                failures.append({"condition": "ii", "tableau": _tid(t), "target": mv.target.word,
                                 "tableau_prob": format_rational(p),
                                 "pasep_prob": format_rational(pasep.get(mv.target.word, 0))})
            j = index[mv.target]
            rates[index[t]][j] = rates[index[t]].get(j, Fraction(0)) + mv.rate_value(params)
        # condition (iii)
        for y, prob in pasep.items():
            hits = landed.get(y, [])
            if len(hits) != 1 or hits[0].rate_value(params) / n1 != prob:
                failures.append({"condition": "iii", "tableau": _tid(t), "target_type": y,
                                 "moves": len(hits)})
        for y in landed:
            if y not in pasep:
                failures.append({"condition": "iii", "tableau": _tid(t), "target_type": y,
                                 "problem": "move to a type the process cannot reach"})
    pi_tab = stationary_from_rates(rates)
    marginal: dict[str, Fraction] = {}
    for t, p in zip(tabs, pi_tab):
        marginal[t.word] = marginal.get(t.word, Fraction(0)) + p
    pi = stationary(build_sector_chain(m, r, params))
    for w, p in pi.probabilities.items():
        if marginal.get(w) != p:
            failures.append({"condition": "stationary", "word": w,
                             "tableau_marginal": format_rational(marginal.get(w, Fraction(0))),
                             "pasep": format_rational(p)})
    return {"check": "projection", "m": m, "r": r, "tableaux": len(tabs), "states": len(pi.probabilities),
            "alpha": format_rational(params.alpha), "beta": format_rational(params.beta),
            "pass": not failures, "failures": failures}


def tableau_graph(m: int, r: int) -> dict:
    """The tableau chain as nodes and labelled edges."""
    tabs = sector_tableaux(m, r)
    index = {t: i for i, t in enumerate(tabs)}
    nodes = [{"id": i, "word": t.word, "rows": list(t.rows),
              "weight": {"a": weight(t).a, "b": weight(t).b}} for i, t in enumerate(tabs)]
    edges = []
    for t in tabs:
        for mv in moves_from(t):
            edges.append({"source": index[t], "target": index[mv.target],
                          "rate": mv.rate, "case": mv.case})
    return {"m": m, "r": r, "nodes": nodes, "edges": edges}
