from math import factorial

import pytest

from multicatalan.chain import DEFAULT_GRID
from multicatalan.core import all_words
from multicatalan.exact import WeightPoly
from multicatalan.qone import (
    DEFAULT_RULES, AltTableau, RuleSet, alt_weight, alt_word_weight, candidate_rulesets,
    enumerate_alt, q0_consistency, q1_partition_function, render_alt, sweep_rulesets,
    validate_alt, verify_conjecture,
)


def test_all_a():
    (t,) = enumerate_alt("AAAA")
    assert alt_weight(t) == WeightPoly.const(1)


def test_de():
    tabs = enumerate_alt("DE")
    assert sorted(t.rows[0][0] for t in tabs) == ["a", "b", "q"]
    q_tab = next(t for t in tabs if t.rows[0][0] == "q")
    assert alt_weight(q_tab) == WeightPoly.monomial(1, 1)
    assert alt_weight(q_tab, track_q=True) == WeightPoly.monomial(1, 1, 1)
    assert alt_word_weight("DE") == WeightPoly({(2, 1, 0): 1, (1, 2, 0): 1, (1, 1, 0): 1})


def test_dddeadea_alt_weight():
    assert any(alt_weight(t) == WeightPoly.monomial(6, 6) for t in enumerate_alt("DDDEADEA"))


def test_validator_on_everything():
    for m in range(1, 6):
        for r in range(m + 1):
            for w in all_words(m, r):
                tabs = enumerate_alt(w)
                assert len(set(tabs)) == len(tabs)
                for t in tabs:
                    assert validate_alt(t) == []


def test_validator_catches_corruption():
    t = next(t for t in enumerate_alt("DAE") if "Q" in "".join(t.rows))
    rows = list(t.rows)
    rows[0] = rows[0].replace("Q", "q")
    assert validate_alt(AltTableau(t.word, tuple(rows)))


def test_forbidden_patterns_absent():
    for w in all_words(6, 2):
        for t in enumerate_alt(w):
            hats = {(i, c): s for i, row in enumerate(t.rows) for c, s in enumerate(row) if s in "QU"}
            rows = sorted({i for i, _ in hats})
            cols = sorted({c for _, c in hats})
            for x, ra in enumerate(rows):
                for rb in rows[x + 1:]:
                    for y, ca in enumerate(cols):
                        for cb in cols[y + 1:]:
                            quad = [hats.get(k) for k in ((ra, ca), (ra, cb), (rb, ca), (rb, cb))]
                            assert quad not in (["Q", "U", "U", "U"], ["Q", "U", "U", "Q"])


def test_r0_counts_are_factorials():
    # one-species alternative tableaux of size m number (m+1)!
    for m in range(1, 7):
        assert q1_partition_function(m, 0).eval(1, 1, 1) == factorial(m + 1)


def test_q0_consistency():
    assert q0_consistency(5, 1)["pass"]
    for m in range(1, 6):
        for r in range(m + 1):
            assert q0_consistency(m, r)["pass"]


def test_conjecture_examples():
    assert verify_conjecture(1, 1)["pass"]
    assert verify_conjecture(3, 1)["pass"]
    assert verify_conjecture(4, 0)["pass"]


def test_wrong_rules_give_counterexample():
    rep = verify_conjecture(2, 0, RuleSet(de=("a", "b"), name="de-no-q"))
    assert not rep["pass"]
    assert rep["counterexamples"][0] == {"word": "DD", "alpha": "1", "beta": "1",
                                         "stationary": "1/6", "predicted": "1/5"}


def test_ruleset_json():
    rs = RuleSet.from_json('{"de": ["alpha", "beta", "q"], "da": ["beta-hat", "q"], "ae": ["alpha-hat", "q"]}')
    assert (rs.de, rs.da, rs.ae) == (DEFAULT_RULES.de, DEFAULT_RULES.da, DEFAULT_RULES.ae)
    assert RuleSet.from_json(DEFAULT_RULES.to_json()) == DEFAULT_RULES
    with pytest.raises(ValueError):
        RuleSet(de=())
    with pytest.raises(ValueError):
        RuleSet(ae=("u",))


def test_sweep_deterministic():
    a = sweep_rulesets(3, DEFAULT_GRID[:2])
    b = sweep_rulesets(3, DEFAULT_GRID[:2])
    assert a == b
    assert "default" in a["passing"]
    assert len(a["results"]) == len(candidate_rulesets())


def test_render():
    assert render_alt(enumerate_alt("DE")[0]).startswith("type DE")
