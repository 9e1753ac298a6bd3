"""The two-species exclusion process as a finite Markov chain per sector.

A sector fixes the word length ``m`` and the number ``r`` of light
particles.  From a word of length ``m`` every listed move has probability
``u / (m + 1)`` with ``u`` in {1, q, alpha, beta}; the remaining mass is a
self-loop.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .core import Word, all_words, as_word
from .exact import ONE, WeightPoly, ZERO, format_rational, stationary_from_rates
from .tableaux import word_weight

DEFAULT_GRID: tuple[tuple[Fraction, Fraction], ...] = (
    (Fraction(1), Fraction(1)),
    (Fraction(1, 2), Fraction(2)),
    (Fraction(2), Fraction(1, 2)),
    (Fraction(1, 3), Fraction(1, 3)),
    (Fraction(3), Fraction(5)),
)


class ReducibleChainError(RuntimeError):
    """The sector chain has more than one strongly connected component."""

    def __init__(self, components):
        self.components = components
        sizes = [len(c) for c in components]
        super().__init__(f"sector chain is not irreducible: component sizes {sizes}")


@dataclass(frozen=True)
class ChainParams:
    alpha: Fraction = Fraction(1)
    beta: Fraction = Fraction(1)
    q: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("alpha", "beta", "q"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.alpha <= 0 or self.beta <= 0:
            raise ValueError("alpha and beta must be positive")
        if self.q < 0:
            raise ValueError("q must be non-negative")


# (pattern, replacement, rate symbol) for bulk swaps
_BULK = (
    ("DE", "ED", "1"),
    ("DA", "AD", "1"),
    ("AE", "EA", "1"),
    ("ED", "DE", "q"),
    ("AD", "DA", "q"),
    ("EA", "AE", "q"),
)


def moves(word) -> list[tuple[str, str]]:
    """All moves out of ``word`` as (target, rate symbol); symbols are 1, q, alpha, beta."""
    w = as_word(word).letters
    out = []
    for i in range(len(w) - 1):
        pair = w[i:i + 2]
        for pat, rep, sym in _BULK:
            if pair == pat:
                out.append((w[:i] + rep + w[i + 2:], sym))
    if w.startswith("E"):
        out.append(("D" + w[1:], "alpha"))
    if w.endswith("D"):
        out.append((w[:-1] + "E", "beta"))
    return out


def rate_value(sym: str, params: ChainParams) -> Fraction:
    return {"1": Fraction(1), "q": params.q, "alpha": params.alpha, "beta": params.beta}[sym]


def transitions(word, params: ChainParams) -> list[tuple[str, Fraction]]:
    """Moves with their exact probabilities ``u/(m+1)``; zero-rate moves are dropped.

    The self-loop is implied and not listed.
    """
    w = as_word(word)
    n1 = w.m + 1
    out: dict[str, Fraction] = {}
    for target, sym in moves(w):
        p = rate_value(sym, params) / n1
        if p:
            out[target] = out.get(target, Fraction(0)) + p
    return list(out.items())


@dataclass
class SectorChain:
    m: int
    r: int
    params: ChainParams
    states: list[str]
    index: dict[str, int] = field(repr=False)
    # sparse rows: state index -> {target index: probability}, self-loop included
    rows: list[dict[int, Fraction]] = field(repr=False)
    # off-diagonal entries are (u / (m + 1)) / uniformization
    uniformization: Fraction = Fraction(1)

    def dense(self) -> list[list[Fraction]]:
        n = len(self.states)
        out = [[Fraction(0)] * n for _ in range(n)]
        for i, row in enumerate(self.rows):
            for j, p in row.items():
                out[i][j] = p
        return out

    def rates(self) -> list[dict[int, Fraction]]:
        """Off-diagonal part of the transition matrix."""
        return [{j: p for j, p in row.items() if j != i} for i, row in enumerate(self.rows)]


def strongly_connected_components(n: int, succ: list[list[int]]) -> list[list[int]]:
    """Tarjan's algorithm, iterative."""
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, pos = work[-1]
            if pos < len(succ[v]):
                work[-1] = (v, pos + 1)
                w = succ[v][pos]
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w]:
                    low[v] = min(low[v], index[w])
            else:
                work.pop()
                if work:
                    u = work[-1][0]
                    low[u] = min(low[u], low[v])
                if low[v] == index[v]:
                    comp = []
                    while True:
                        w = stack.pop()
                        on_stack[w] = False
                        comp.append(w)
                        if w == v:
                            break
                    comps.append(sorted(comp))
    return comps


def build_sector_chain(m: int, r: int, params: ChainParams) -> SectorChain:
    states = [w.letters for w in all_words(m, r)]
    index = {s: i for i, s in enumerate(states)}
    raw = []
    for s in states:
        row: dict[int, Fraction] = {}
        for target, p in transitions(s, params):
            row[index[target]] = row.get(index[target], Fraction(0)) + p
        raw.append(row)
    # large alpha/beta push a row's mass u/(m+1) above 1; rescale every row by
    # the same factor, which leaves the stationary law unchanged
    unif = max([Fraction(1)] + [sum(row.values(), Fraction(0)) for row in raw])
    rows = []
    for i, row in enumerate(raw):
        row = {j: p / unif for j, p in row.items()}
        loop = 1 - sum(row.values(), Fraction(0))
        if loop:
            row[i] = loop
        rows.append(dict(sorted(row.items())))
    chain = SectorChain(m, r, params, states, index, rows, unif)
    comps = strongly_connected_components(
        len(states), [[j for j in row if j != i] for i, row in enumerate(rows)]
    )
    if len(comps) > 1:
        raise ReducibleChainError([[states[i] for i in c] for c in comps])
    return chain


@dataclass(frozen=True)
class StationaryVector:
    probabilities: dict[str, Fraction]

    def __getitem__(self, word) -> Fraction:
        return self.probabilities[str(word)]

    def to_csv(self) -> str:
        lines = ["word,probability"]
        lines += [f"{w},{format_rational(p)}" for w, p in self.probabilities.items()]
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {w: format_rational(p) for w, p in self.probabilities.items()}


def stationary(chain: SectorChain) -> StationaryVector:
    pi = stationary_from_rates(chain.rates())
    vec = StationaryVector(dict(zip(chain.states, pi)))
    if residual(chain, vec):
        raise ArithmeticError("stationary solve left a nonzero residual")
    return vec


def residual(chain: SectorChain, vec: StationaryVector) -> list[tuple[str, Fraction]]:
    """Nonzero entries of pi P - pi, and of sum(pi) - 1 under the key ``"sum"``."""
    pi = [vec.probabilities[s] for s in chain.states]
    acc = [Fraction(0)] * len(pi)
    for i, row in enumerate(chain.rows):
        if pi[i]:
            for j, p in row.items():
                acc[j] += pi[i] * p
    out = [(chain.states[j], acc[j] - pi[j]) for j in range(len(pi)) if acc[j] != pi[j]]
    total = sum(pi, Fraction(0))
    if total != 1:
        out.append(("sum", total - 1))
    return out


def partition_function(m: int, r: int) -> WeightPoly:
    z = ZERO
    for w in all_words(m, r):
        z = z + word_weight(w)
    return z


def verify_stationary_theorem(m: int, r: int, grid=DEFAULT_GRID) -> dict:
    """Exact check that stationary probabilities equal weight(X) / Z at every grid point."""
    weights = {w.letters: word_weight(w) for w in all_words(m, r)}
    z = ZERO
    for p in weights.values():
        z = z + p
    counterexamples = []
    checked = 0
    for a, b in grid:
        params = ChainParams(a, b, 0)
        pi = stationary(build_sector_chain(m, r, params))
        zval = z.eval(a, b, 0)
        for w, poly in weights.items():
            checked += 1
            expected = poly.eval(a, b, 0) / zval
            if pi[w] != expected:
                counterexamples.append({
                    "word": w,
                    "alpha": format_rational(a),
                    "beta": format_rational(b),
                    "stationary": format_rational(pi[w]),
                    "predicted": format_rational(expected),
                })
    return {
        "check": "main-theorem",
        "m": m,
        "r": r,
        "grid": [[format_rational(a), format_rational(b)] for a, b in grid],
        "checked": checked,
        "pass": not counterexamples,
        "counterexamples": counterexamples,
    }


ANSATZ_CASES = ("DE", "DA", "AE", "E-start", "D-end")


def ansatz_instances(word: str):
    """Every decomposition of ``word`` to which one of the five recurrences applies.

    Yields (case, position, list of (coefficient, smaller word)) where the
    coefficient multiplies the smaller word's weight.
    """
    ab = WeightPoly.monomial(1, 1)
    for i in range(len(word) - 1):
        pair = word[i:i + 2]
        x, y = word[:i], word[i + 2:]
        if pair == "DE":
            yield "DE", i, [(ab, x + "D" + y), (ab, x + "E" + y)]
        elif pair == "DA":
            yield "DA", i, [(ab, x + "A" + y)]
        elif pair == "AE":
            yield "AE", i, [(ab, x + "A" + y)]
    if word.startswith("E"):
        yield "E-start", 0, [(WeightPoly.monomial(0, 1), word[1:])]
    if word.endswith("D"):
        yield "D-end", len(word) - 1, [(WeightPoly.monomial(1, 0), word[:-1])]


def verify_ansatz(m_max: int) -> dict:
    """Check the five weight recurrences on every word with ``1 <= m <= m_max``."""
    failures = []
    counts = {c: 0 for c in ANSATZ_CASES}
    for m in range(1, m_max + 1):
        for r in range(m + 1):
            for w in all_words(m, r):
                s = w.letters
                lhs = word_weight(s)
                for case, pos, terms in ansatz_instances(s):
                    counts[case] += 1
                    rhs = ZERO
                    for coeff, smaller in terms:
                        rhs = rhs + coeff * (word_weight(smaller) if smaller else ONE)
                    if lhs != rhs:
                        failures.append({
                            "word": s, "case": case, "position": pos,
                            "lhs": str(lhs), "rhs": str(rhs),
                        })
    return {
        "check": "ansatz",
        "m_max": m_max,
        "instances": counts,
        "pass": not failures,
        "failures": failures,
    }
