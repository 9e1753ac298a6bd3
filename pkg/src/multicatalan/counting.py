"""Closed-form counts and determinant formulas, with brute-force cross-checks."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .core import Word, all_words, as_word, de_decompose, shape_of
from .exact import WeightPoly, bareiss_det
from .tableaux import enumerate_condensed, interior_weight, word_weight


def binom(n: int, j: int) -> int:
    if j < 0 or n < 0 or j > n:
        return 0
    return comb(n, j)


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def narayana(n: int, k: int) -> int:
    if n <= 0 or k <= 0 or k > n:
        return 0
    return comb(n, k) * comb(n, k - 1) // n


def z0_count(m: int, r: int) -> int:
    """Number of multi-Catalan tableaux over all words of length m with r A's."""
    if not 0 <= r <= m:
        raise ValueError(f"need 0 <= r <= m, got m={m}, r={r}")
    num = 2 * (r + 1) * comb(2 * m + 1, m - r)
    den = m + r + 2
    if num % den:
        raise ArithmeticError(f"count formula not integral at m={m}, r={r}")
    return num // den


def count_nkr(m: int, k: int, r: int) -> int:
    """Number of tableaux over words of length m with k D's and r A's."""
    if r < 0 or k < 0 or r > m or k > m - r:
        return 0

    @lru_cache(maxsize=None)
    def blocks(i: int, n_left: int, k_left: int) -> int:
        # sum over the remaining r+1-i blocks
        if i == r + 1:
            return 1 if n_left == 0 and k_left == 0 else 0
        total = 0
        for n_i in range(n_left + 1):
            for k_i in range(min(n_i, k_left) + 1):
                total += narayana(n_i + 1, k_i + 1) * blocks(i + 1, n_left - n_i, k_left - k_i)
        return total

    return blocks(0, m - r, k)


def brute_counts(m: int, r: int) -> dict[int, int]:
    """Tableau counts per number of D's, by enumeration."""
    out: dict[int, int] = {}
    for w in all_words(m, r):
        out[w.k] = out.get(w.k, 0) + len(enumerate_condensed(w))
    return dict(sorted(out.items()))


# -- determinant -------------------------------------------------------------

@dataclass(frozen=True)
class DetMatrix:
    parts: tuple[int, ...]
    entries: tuple[tuple[WeightPoly, ...], ...]

    @property
    def k(self) -> int:
        return len(self.parts)

    def det(self) -> WeightPoly:
        return bareiss_det([list(r) for r in self.entries])

    def to_json(self) -> dict:
        return {
            "parts": list(self.parts),
            "matrix": [[str(x) for x in row] for row in self.entries],
            "det": str(self.det()),
        }


def _entry(lam: tuple[int, ...], i: int, j: int) -> WeightPoly:
    """A_ij for 1-based i, j, with lambda_{k+1} = 0."""
    k = len(lam)

    def L(t: int) -> int:
        return lam[t - 1] if t <= k else 0

    terms: dict[tuple[int, int], int] = {}

    def add(coeff: int, a: int, b: int):
        if coeff:
            terms[(a, b)] = terms.get((a, b), 0) + coeff

    d = j - i
    # beta^{j-i} alpha^{lam_i - lam_{j+1}} (C(lam_{j+1}, j-i) + beta C(lam_{j+1}, j-i+1))
    a0 = L(i) - L(j + 1)
    add(binom(L(j + 1), d), a0, d)
    add(binom(L(j + 1), d + 1), a0, d + 1)
    # beta^{j-i} alpha^{lam_i - lam_j} sum_l alpha^l (C(lam_j-l-1, j-i-1) + beta C(lam_j-l-1, j-i))
    a1 = L(i) - L(j)
    for ell in range(L(j) - L(j + 1)):
        top = L(j) - ell - 1
        add(binom(top, d - 1), a1 + ell, d)
        add(binom(top, d), a1 + ell, d + 1)
    out = {}
    for (a, b), c in terms.items():
        if c == 0:
            continue
        if a < 0 or b < 0:
            raise ArithmeticError(f"negative exponent in A[{i},{j}] for {lam}")
        out[(a, b, 0)] = c
    return WeightPoly(out)


def build_det_matrix(parts) -> DetMatrix:
    lam = tuple(int(p) for p in parts)
    if any(lam[t] < lam[t + 1] for t in range(len(lam) - 1)) or any(p < 0 for p in lam):
        raise ValueError(f"not a partition: {lam}")
    k = len(lam)
    rows = tuple(tuple(_entry(lam, i, j) for j in range(1, k + 1)) for i in range(1, k + 1))
    return DetMatrix(lam, rows)


def det_poly(parts) -> WeightPoly:
    return build_det_matrix(parts).det()


def interior_gf(word) -> WeightPoly:
    """Generating function of fillings only (boundary monomial left out)."""
    t: dict = {}
    for tab in enumerate_condensed(word):
        w = interior_weight(tab)
        t[(w.a, w.b, 0)] = t.get((w.a, w.b, 0), 0) + 1
    return WeightPoly(t)


def monomial_ratio(num: WeightPoly, den: WeightPoly):
    """Exponents (a, b, c) with num = alpha^a beta^b q^c * den, or None."""
    if num.is_zero() or den.is_zero():
        return None
    (e1, c1), (e2, c2) = num.leading(), den.leading()
    if c1 != c2:
        return None
    d = tuple(x - y for x, y in zip(e1, e2))
    up = WeightPoly.monomial(*(max(0, x) for x in d))
    down = WeightPoly.monomial(*(max(0, -x) for x in d))
    return d if num * down == den * up else None


def product_formula(word, n_convention: str = "length") -> WeightPoly:
    """The factorised determinant expression for a word with A's.

    ``n_convention`` picks n = word length (``"length"``), the path edge
    count m + r (``"edges"``) or the number of D/E letters m - r
    (``"de_letters"``).  Each block's row count is its D count and its
    column count is its E count.
    """
    w = as_word(word)
    dec = de_decompose(w)
    n = {"length": w.m, "edges": w.edge_count, "de_letters": w.m - w.r}[n_convention]
    blocks = dec.subwords
    r = len(blocks) - 1
    m1 = Word(blocks[0]).e
    k_last = Word(blocks[-1]).k
    if n < max(m1, k_last):
        raise ArithmeticError("negative exponent in product formula")
    out = WeightPoly.monomial(n - m1, n - k_last)
    if r == 0:
        return out * det_poly(dec.partitions[0])
    out = out * det_poly(dec.partitions[0]).substitute(beta=1)
    out = out * det_poly(dec.partitions[-1]).substitute(alpha=1)
    for lam in dec.partitions[1:-1]:
        out = out * det_poly(lam).substitute(alpha=1, beta=1)
    return out


N_CONVENTIONS = ("length", "edges", "de_letters")


def det_weight_check(word) -> dict:
    w = as_word(word)
    ww = word_weight(w)
    report: dict = {"word": w.letters, "r": w.r}
    if w.r == 0:
        parts = shape_of(w).parts
        det = det_poly(parts)
        interior = interior_gf(w)
        boundary = WeightPoly.monomial(w.k, w.e)
        report.update({
            "shape": list(parts),
            "det": str(det),
            "interior": str(interior),
            "det_equals_interior": det == interior,
            "det_times_boundary_equals_weight": boundary * det == ww,
        })
        report["pass"] = report["det_equals_interior"] and report["det_times_boundary_equals_weight"]
        return report
    report["weight"] = str(ww)
    report["pass"] = False
    for conv in N_CONVENTIONS:
        f = product_formula(w, conv)
        ratio = monomial_ratio(ww, f)
        report[conv] = {
            "formula": str(f),
            "equal": f == ww,
            "weight_over_formula": None if ratio is None else {"a": ratio[0], "b": ratio[1]},
        }
        report["pass"] = report["pass"] or f == ww
    return report
