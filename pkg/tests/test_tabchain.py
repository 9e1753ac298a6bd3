from fractions import Fraction as F

from multicatalan.chain import DEFAULT_GRID, ChainParams
from multicatalan.tableaux import enumerate_condensed, validate, weight
from multicatalan.tabchain import (
    apply_transition, check_moves, moves_from, predicted_ratio, summarize, tableau_graph,
    transition_points, verify_detailed_balance, verify_projection,
)


def test_no_points_for_all_a():
    (t,) = enumerate_condensed("AAA")
    assert transition_points(t) == []
    assert verify_detailed_balance(1, 1)["pass"]


def test_ddeaea_corners():
    for t in enumerate_condensed("DDEAEA"):
        kinds = {p.kind for p in transition_points(t)}
        assert "DEcorner" in kinds and "AEcorner" in kinds and "DAcorner" not in kinds


def test_degenerate_right_leg():
    for k in range(0, 4):
        for t in enumerate_condensed("E" + "D" * k):
            (mv,) = [apply_transition(t, p) for p in transition_points(t) if p.kind == "RightLeg"]
            assert mv.target.word == "D" * (k + 1)
            assert mv.rate == "alpha" and mv.case == 6
            assert mv.degenerate and mv.ratio == (1, -1)


def test_moves_and_ratios():
    for m in range(1, 6):
        for r in range(m + 1):
            rep = check_moves(m, r)
            assert rep["pass"], rep["failures"][:3]


def test_ratio_from_weights():
    for t in enumerate_condensed("DEDAED"):
        for mv in moves_from(t):
            assert validate(mv.target) == []
            ws, wt = weight(t), weight(mv.target)
            assert (wt.a - ws.a, wt.b - ws.b) == predicted_ratio(mv.case, mv.degenerate)


def test_outflow_summary():
    for t in enumerate_condensed("EDEAD"):
        s = summarize(t)
        assert s.delta_R == 1 and s.delta_L == 1
        assert s.C == sum(1 for p in transition_points(t) if p.kind.endswith("corner"))


def test_balance_grid():
    assert verify_detailed_balance(3, 1, ChainParams(1, 1, 0))["tableaux"] == 14
    for m in range(1, 6):
        for r in range(m + 1):
            for a, b in DEFAULT_GRID:
                assert verify_detailed_balance(m, r, ChainParams(a, b, 0))["pass"]


def test_projection():
    assert verify_projection(1, 0)["pass"]
    assert verify_projection(3, 1)["states"] == 12
    assert verify_projection(4, 1, ChainParams(2, F(1, 2), 0))["pass"]


def test_projection_uniqueness():
    for t in enumerate_condensed("DEAED"):
        targets = [mv.target.word for mv in moves_from(t)]
        assert len(targets) == len(set(targets))


def test_graph():
    g = tableau_graph(2, 0)
    assert len(g["nodes"]) == 5
    assert {e["case"] for e in g["edges"]} <= set(range(1, 8))
