"""Command-line interface.

Exit codes: 0 success, 1 verification failure (report on stdout), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import chain, counting, qone, tabchain, tableaux
from .core import WordError, as_word, shape_of
from .exact import format_rational, parse_rational


class UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def parse_grid(text: str) -> tuple[tuple[Fraction, Fraction], ...]:
    """``"a/b,c/d;e,f"`` -> ((a/b, c/d), (e, f))."""
    pts = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        parts = chunk.split(",")
        if len(parts) != 2:
            raise argparse.ArgumentTypeError(f"grid point needs two coordinates: {chunk!r}")
        a, b = (_rational(p) for p in parts)
        if a <= 0 or b <= 0:
            raise argparse.ArgumentTypeError(f"grid point must be positive: {chunk!r}")
        pts.append((a, b))
    if not pts:
        raise argparse.ArgumentTypeError("empty grid")
    return tuple(pts)


def _load_ruleset(source: str | None) -> qone.RuleSet:
    if source is None:
        return qone.DEFAULT_RULES
    path = Path(source)
    text = path.read_text() if path.is_file() else source
    try:
        return qone.RuleSet.from_json(text)
    except (ValueError, TypeError) as exc:
        raise UsageError(f"bad rule set: {exc}") from None


def _word(args):
    if args.word is None:
        raise UsageError("--word is required")
    try:
        return as_word(args.word)
    except WordError as exc:
        raise UsageError(str(exc)) from None


def _need(args, *names):
    for n in names:
        if getattr(args, n) is None:
            raise UsageError(f"--{n} is required")


def _sectors(args):
    """(m, r) pairs selected by --m and optional --r."""
    _need(args, "m")
    if args.m < 1:
        raise UsageError("--m must be at least 1")
    if args.r is not None:
        if not 0 <= args.r <= args.m:
            raise UsageError(f"need 0 <= r <= m, got m={args.m}, r={args.r}")
        return [(args.m, args.r)]
    return [(args.m, r) for r in range(args.m + 1)]


def _upto(args):
    """Every sector with 1 <= m <= --m (or exactly --r when given)."""
    _need(args, "m")
    out = []
    for m in range(1, args.m + 1):
        if args.r is not None:
            if args.r <= m:
                out.append((m, args.r))
        else:
            out.extend((m, r) for r in range(m + 1))
    if args.r is not None and args.r > args.m:
        raise UsageError(f"need 0 <= r <= m, got m={args.m}, r={args.r}")
    return out


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _csv(header, rows) -> str:
    lines = [",".join(header)]
    lines += [",".join(str(x) for x in row) for row in rows]
    return "\n".join(lines) + "\n"


def _combine(check: str, reports: list[dict]) -> dict:
    return {"check": check, "pass": all(r["pass"] for r in reports), "reports": reports}


# -- subcommands -------------------------------------------------------------

def cmd_enumerate(args):
    w = _word(args)
    fmt = args.format or "json"
    if args.tableaux == "alt":
        rules = _load_ruleset(args.ruleset)
        tabs = qone.enumerate_alt(w, rules)
        if fmt == "ascii":
            return "\n\n".join(qone.render_alt(t) for t in tabs) + "\n", 0
        return _dump([t.to_json() for t in tabs]), 0
    if args.tableaux == "staircase":
        tabs = tableaux.enumerate_staircase(w)
        render = tableaux.render_staircase
    else:
        tabs = tableaux.enumerate_condensed(w)
        render = tableaux.render_condensed
    if fmt == "ascii":
        return "\n\n".join(render(t) for t in tabs) + "\n", 0
    if fmt == "csv":
        rows = [(i, t.word, "|".join(t.rows), tableaux.weight(t).a, tableaux.weight(t).b)
                for i, t in enumerate(tabs)]
        return _csv(["index", "word", "rows", "a", "b"], rows), 0
    return _dump([t.to_json() for t in tabs]), 0


def cmd_weight(args):
    w = _word(args)
    if args.tableaux == "alt":
        poly = qone.alt_word_weight(w, _load_ruleset(args.ruleset), track_q=True)
    else:
        poly = tableaux.word_weight(w)
    out = {"word": w.letters, "weight": str(poly), "terms": poly.to_json()}
    if args.alpha is not None and args.beta is not None:
        q = args.q if args.q is not None else Fraction(1 if args.tableaux == "alt" else 0)
        out["value"] = format_rational(poly.eval(args.alpha, args.beta, q))
    return _dump(out), 0


def _params(args) -> chain.ChainParams:
    one = Fraction(1)
    return chain.ChainParams(
        args.alpha if args.alpha is not None else one,
        args.beta if args.beta is not None else one,
        args.q if args.q is not None else Fraction(0),
    )


def cmd_stationary(args):
    (m, r), = _sectors(args) if args.r is not None else [(None, None)]
    if m is None:
        raise UsageError("--r is required")
    try:
        params = _params(args)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    vec = chain.stationary(chain.build_sector_chain(m, r, params))
    if (args.format or "csv") == "json":
        return _dump({"m": m, "r": r, "alpha": format_rational(params.alpha),
                      "beta": format_rational(params.beta), "q": format_rational(params.q),
                      "stationary": vec.to_json()}), 0
    return vec.to_csv(), 0


def cmd_count(args):
    rows = []
    for m, r in _sectors(args):
        ks = [args.k] if args.k is not None else range(m - r + 1)
        for k in ks:
            rows.append((m, r, k, counting.count_nkr(m, k, r)))
    if args.format == "json":
        return _dump([{"m": m, "r": r, "k": k, "count": c} for m, r, k, c in rows]), 0
    return _csv(["m", "r", "k", "count"], rows), 0


def cmd_det(args):
    if args.parts is not None:
        try:
            parts = tuple(int(x) for x in args.parts.split(",") if x.strip())
            return _dump(counting.build_det_matrix(parts).to_json()), 0
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    w = _word(args)
    if w.r == 0:
        out = counting.build_det_matrix(shape_of(w).parts).to_json()
        out["word"] = w.letters
        out["check"] = counting.det_weight_check(w)
        return _dump(out), 0
    rep = counting.det_weight_check(w)
    return _dump(rep), 0


def cmd_graph(args):
    (m, r), = _sectors(args) if args.r is not None else [(None, None)]
    if m is None:
        raise UsageError("--r is required")
    g = tabchain.tableau_graph(m, r)
    if args.format == "csv":
        rows = [(e["source"], e["target"], e["rate"], e["case"]) for e in g["edges"]]
        return _csv(["source", "target", "rate", "case"], rows), 0
    return _dump(g), 0


def cmd_q1(args):
    rules = _load_ruleset(args.ruleset)
    grid = args.grid or chain.DEFAULT_GRID
    if args.action == "sweep":
        _need(args, "m")
        rep = qone.sweep_rulesets(args.m, grid)
        return _dump(rep), 0 if rep["passing"] else 1
    if args.action == "q0":
        reps = [qone.q0_consistency(m, r, rules) for m, r in _upto(args)]
        rep = _combine("q0-consistency", reps)
    else:
        reps = [qone.verify_conjecture(m, r, rules, grid) for m, r in _upto(args)]
        rep = _combine("q1-conjecture", reps)
    return _dump(rep), 0 if rep["pass"] else 1


def cmd_verify(args):
    grid = args.grid or chain.DEFAULT_GRID
    kind = args.check
    if kind == "ansatz":
        _need(args, "m")
        rep = chain.verify_ansatz(args.m)
    elif kind == "main-theorem":
        rep = _combine(kind, [chain.verify_stationary_theorem(m, r, grid) for m, r in _upto(args)])
    elif kind == "balance":
        reps = []
        for m, r in _upto(args):
            for a, b in grid:
                reps.append(tabchain.verify_detailed_balance(m, r, chain.ChainParams(a, b, 0)))
            reps.append(tabchain.check_moves(m, r))
        rep = _combine(kind, reps)
    else:
        reps = []
        for m, r in _upto(args):
            for a, b in grid:
                reps.append(tabchain.verify_projection(m, r, chain.ChainParams(a, b, 0)))
        rep = _combine(kind, reps)
    return _dump(rep), 0 if rep["pass"] else 1


# -- parser ------------------------------------------------------------------

def _common(p: argparse.ArgumentParser, *flags: str):
    if "word" in flags:
        p.add_argument("--word", help="word over D, E, A")
    if "m" in flags:
        p.add_argument("--m", type=int, help="word length (or maximum length for checks)")
    if "r" in flags:
        p.add_argument("--r", type=int, help="number of A letters")
    if "k" in flags:
        p.add_argument("--k", type=int, help="number of D letters")
    if "params" in flags:
        p.add_argument("--alpha", type=_rational)
        p.add_argument("--beta", type=_rational)
        p.add_argument("--q", type=_rational)
    if "grid" in flags:
        p.add_argument("--grid", type=parse_grid, help='points "a/b,c/d;e,f"')
    if "ruleset" in flags:
        p.add_argument("--ruleset", help="rule set as a JSON string or file")
    p.add_argument("--format", choices=("json", "csv", "ascii"))
    p.add_argument("--out", help="write output here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="multicatalan",
                                     description="Tableaux and exact stationary laws of the two-species PASEP.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list tableaux of a word")
    _common(p, "word", "ruleset")
    p.add_argument("--tableaux", choices=("condensed", "staircase", "alt"), default="condensed")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("weight", help="weight polynomial of a word")
    _common(p, "word", "params", "ruleset")
    p.add_argument("--tableaux", choices=("condensed", "alt"), default="condensed")
    p.set_defaults(func=cmd_weight)

    p = sub.add_parser("stationary", help="exact stationary law of a sector")
    _common(p, "m", "r", "params")
    p.set_defaults(func=cmd_stationary)

    p = sub.add_parser("count", help="tableau counts by m, r, k")
    _common(p, "m", "r", "k")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("det", help="determinant matrix for a word or partition")
    _common(p, "word")
    p.add_argument("--parts", help="partition as comma-separated parts")
    p.set_defaults(func=cmd_det)

    p = sub.add_parser("graph", help="tableau chain of a sector")
    _common(p, "m", "r")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("q1", help="q = 1 alternative-tableaux harness")
    p.add_argument("action", choices=("verify", "q0", "sweep"))
    _common(p, "m", "r", "grid", "ruleset")
    p.set_defaults(func=cmd_q1)

    p = sub.add_parser("verify", help="verification suites")
    p.add_argument("check", choices=("main-theorem", "ansatz", "balance", "projection"))
    _common(p, "m", "r", "grid")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits 2 on bad flags
    try:
        text, code = args.func(args)
    except UsageError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2
    except chain.ReducibleChainError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 1
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
