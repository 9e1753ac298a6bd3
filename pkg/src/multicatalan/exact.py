"""Exact arithmetic: rationals, sparse polynomials in alpha, beta, q, and
exact linear solvers.

Rationals are :class:`fractions.Fraction`.  Polynomials keep a map from
exponent triples ``(a, b, c)`` (for alpha^a beta^b q^c) to Python ints.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

Exp = tuple[int, int, int]

_VARS = ("alpha", "beta", "q")
_GLYPHS = ("α", "β", "q")


def parse_rational(text) -> Fraction:
    """Parse ``"p/q"`` or an integer string into a Fraction."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    s = str(text).strip()
    try:
        if "/" in s:
            num, den = s.split("/")
            return Fraction(int(num), int(den))
        return Fraction(int(s))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational: {text!r}") from exc


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class WeightPoly:
    """Polynomial in alpha, beta, q with integer coefficients.

    Instances are treated as immutable; arithmetic returns new objects.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Exp, int] | None = None):
        t = {}
        if terms:
            for e, c in terms.items():
                if c:
                    if len(e) != 3 or min(e) < 0:
                        raise ValueError(f"bad exponent {e!r}")
                    t[tuple(e)] = int(c)
        self.terms: dict[Exp, int] = dict(sorted(t.items()))
        self._hash = None

    # constructors
    @classmethod
    def const(cls, c: int) -> "WeightPoly":
        return cls({(0, 0, 0): c})

    @classmethod
    def monomial(cls, a: int = 0, b: int = 0, c: int = 0, coeff: int = 1) -> "WeightPoly":
        return cls({(a, b, c): coeff})

    @classmethod
    def promote(cls, x) -> "WeightPoly":
        if isinstance(x, WeightPoly):
            return x
        if isinstance(x, int):
            return cls.const(x)
        raise TypeError(f"cannot promote {type(x).__name__} to WeightPoly")

    # ring operations
    def __add__(self, other):
        other = self.promote(other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            t[e] = t.get(e, 0) + c
        return WeightPoly(t)

    __radd__ = __add__

    def __neg__(self):
        return WeightPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self.promote(other))

    def __rsub__(self, other):
        return self.promote(other) - self

    def __mul__(self, other):
        other = self.promote(other)
        t: dict[Exp, int] = {}
        for (a1, b1, c1), x in self.terms.items():
            for (a2, b2, c2), y in other.terms.items():
                e = (a1 + a2, b1 + b2, c1 + c2)
                t[e] = t.get(e, 0) + x * y
        return WeightPoly(t)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = WeightPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scale(self, s) -> "WeightPoly":
        s = Fraction(s)
        if s.denominator != 1:
            t = {}
            for e, c in self.terms.items():
                v = c * s
                if v.denominator != 1:
                    raise ValueError("scaling leaves integer coefficients")
                t[e] = int(v)
            return WeightPoly(t)
        return WeightPoly({e: c * s.numerator for e, c in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, int):
            other = WeightPoly.const(other)
        if not isinstance(other, WeightPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # queries
    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def leading(self) -> tuple[Exp, int]:
        """Leading term in lex order alpha > beta > q."""
        e = max(self.terms)
        return e, self.terms[e]

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def coefficient_sum(self) -> int:
        return sum(self.terms.values())

    def q_slice(self, c: int) -> "WeightPoly":
        """Coefficient of q^c, as a polynomial in alpha and beta."""
        return WeightPoly({(a, b, 0): v for (a, b, cc), v in self.terms.items() if cc == c})

    def drop_q(self) -> "WeightPoly":
        """Substitute q = 1."""
        t: dict[Exp, int] = {}
        for (a, b, _), v in self.terms.items():
            t[(a, b, 0)] = t.get((a, b, 0), 0) + v
        return WeightPoly(t)

    def substitute(self, alpha=None, beta=None, q=None) -> "WeightPoly":
        """Substitute integer values for some variables, keeping the rest formal."""
        vals = (alpha, beta, q)
        t: dict[Exp, int] = {}
        for e, v in self.terms.items():
            ne = list(e)
            for idx, val in enumerate(vals):
                if val is not None:
                    v *= int(val) ** e[idx]
                    ne[idx] = 0
            ne = tuple(ne)
            t[ne] = t.get(ne, 0) + v
        return WeightPoly(t)

    def divide(self, other: "WeightPoly"):
        """Multivariate division by ``other`` in lex order; returns (quotient, remainder)."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        le, lc = other.leading()
        quot: dict[Exp, int] = {}
        rem: dict[Exp, int] = {}
        p = dict(self.terms)
        while p:
            e = max(p)
            c = p[e]
            if all(x >= y for x, y in zip(e, le)) and c % lc == 0:
                f = c // lc
                fe = (e[0] - le[0], e[1] - le[1], e[2] - le[2])
                quot[fe] = quot.get(fe, 0) + f
                for oe, oc in other.terms.items():
                    te = (oe[0] + fe[0], oe[1] + fe[1], oe[2] + fe[2])
                    v = p.get(te, 0) - f * oc
                    if v:
                        p[te] = v
                    else:
                        p.pop(te, None)
            else:
                rem[e] = c
                del p[e]
        return WeightPoly(quot), WeightPoly(rem)

    def exact_div(self, other: "WeightPoly") -> "WeightPoly":
        q, r = self.divide(other)
        if not r.is_zero():
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def eval(self, alpha=1, beta=1, q=0) -> Fraction:
        a, b, qq = Fraction(alpha), Fraction(beta), Fraction(q)
        total = Fraction(0)
        for (x, y, z), c in self.terms.items():
            total += c * a**x * b**y * qq**z
        return total

    # serialisation
    def to_json(self) -> list[dict]:
        return [
            {"a": a, "b": b, "c": c, "coeff": str(v)}
            for (a, b, c), v in self.terms.items()
        ]

    @classmethod
    def from_json(cls, data: Iterable[Mapping]) -> "WeightPoly":
        t: dict[Exp, int] = {}
        for d in data:
            e = (int(d["a"]), int(d["b"]), int(d.get("c", 0)))
            t[e] = t.get(e, 0) + int(d["coeff"])
        return cls(t)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for e, c in sorted(self.terms.items(), key=lambda kv: (-sum(kv[0]), tuple(-x for x in kv[0]))):
            mono = "".join(
                g if p == 1 else f"{g}^{p}" for g, p in zip(_GLYPHS, e) if p
            )
            if not mono:
                pieces.append(str(c))
            elif c == 1:
                pieces.append(mono)
            elif c == -1:
                pieces.append("-" + mono)
            else:
                pieces.append(f"{c}{mono}")
        return " + ".join(pieces).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"WeightPoly({str(self)!r})"


ZERO = WeightPoly()
ONE = WeightPoly.const(1)
ALPHA = WeightPoly.monomial(1, 0, 0)
BETA = WeightPoly.monomial(0, 1, 0)
Q = WeightPoly.monomial(0, 0, 1)


def poly_arith(kind: str, p: WeightPoly, other) -> WeightPoly:
    if kind == "add":
        return p + other
    if kind == "mul":
        return p * other
    if kind == "scale":
        return p.scale(other)
    raise ValueError(f"unknown operation {kind!r}")


def poly_eval(p: WeightPoly, alpha, beta, q=0) -> Fraction:
    return p.eval(alpha, beta, q)


def bareiss_det(matrix: list[list[WeightPoly]]) -> WeightPoly:
    """Determinant over Z[alpha, beta, q] by fraction-free elimination."""
    n = len(matrix)
    if n == 0:
        return ONE
    a = [[WeightPoly.promote(x) for x in row] for row in matrix]
    if any(len(row) != n for row in a):
        raise ValueError("matrix is not square")
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if a[k][k].is_zero():
            for i in range(k + 1, n):
                if not a[i][k].is_zero():
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return ZERO
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]).exact_div(prev)
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return det if sign > 0 else -det


def det_by_permutations(matrix: list[list[WeightPoly]]) -> WeightPoly:
    """Leibniz expansion; only for small matrices (independent check on Bareiss)."""
    import itertools

    n = len(matrix)
    total = ZERO
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = ONE
        for i, j in enumerate(perm):
            term = term * matrix[i][j]
            if term.is_zero():
                break
        total = total + (term if inv % 2 == 0 else -term)
    return total


def stationary_from_rates(rates: list[dict[int, Fraction]]) -> list[Fraction]:
    """Stationary law of an irreducible chain given its off-diagonal rates.

    Grassmann-Taksar-Heyman state reduction on sparse rows.  Only additions,
    multiplications and divisions of non-negative numbers occur, so there is
    no cancellation; states are eliminated in minimum-degree order.
    """
    n = len(rates)
    if n == 0:
        return []
    out_rows: list[dict[int, Fraction]] = [dict(r) for r in rates]
    in_cols: list[dict[int, Fraction]] = [{} for _ in range(n)]
    for i, row in enumerate(out_rows):
        row.pop(i, None)
        for j, v in row.items():
            in_cols[j][i] = v
    alive = set(range(n))
    eliminated: list[tuple[int, dict[int, Fraction], Fraction]] = []
    while len(alive) > 1:
        v = min(alive, key=lambda s: (len(out_rows[s]) * len(in_cols[s]), s))
        out_v = out_rows[v]
        in_v = in_cols[v]
        total = sum(out_v.values(), Fraction(0))
        if total == 0:
            raise ArithmeticError(f"state {v} has no exit to remaining states; chain reducible")
        for i, a_iv in in_v.items():
            row_i = out_rows[i]
            del row_i[v]
            f = a_iv / total
            for j, a_vj in out_v.items():
                if j == i:
                    continue
                nv = row_i.get(j, 0) + f * a_vj
                row_i[j] = nv
                in_cols[j][i] = nv
        for j in out_v:
            del in_cols[j][v]
        eliminated.append((v, dict(in_v), total))
        alive.discard(v)
        out_rows[v] = {}
        in_cols[v] = {}
    last = alive.pop()
    pi: dict[int, Fraction] = {last: Fraction(1)}
    # back substitution: pi_v = sum_i pi_i a_iv / total_v over states alive at v's elimination
    for v, in_v, total in reversed(eliminated):
        pi[v] = sum((pi[i] * a for i, a in in_v.items()), Fraction(0)) / total
    s = sum(pi.values(), Fraction(0))
    return [pi[i] / s for i in range(n)]
