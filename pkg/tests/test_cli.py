import json

import pytest

from multicatalan.cli import main, parse_grid


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_enumerate_ascii(capsys):
    code, out, _ = run(capsys, "enumerate", "--word", "DEEAE", "--format", "ascii")
    assert code == 0
    assert out.count("type DEEAE") == 3


def test_enumerate_json_and_alt(capsys):
    code, out, _ = run(capsys, "enumerate", "--word", "DE")
    assert code == 0 and len(json.loads(out)) == 2
    code, out, _ = run(capsys, "enumerate", "--word", "DE", "--tableaux", "alt")
    assert code == 0 and len(json.loads(out)) == 3


def test_stationary_csv(capsys):
    code, out, _ = run(capsys, "stationary", "--m", "2", "--r", "0", "--q", "0",
                       "--alpha", "1", "--beta", "1", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "word,probability" and len(lines) == 5
    assert "DE,2/5" in lines


def test_verify_main_theorem(capsys):
    code, out, _ = run(capsys, "verify", "main-theorem", "--m", "4")
    assert code == 0 and json.loads(out)["pass"]


@pytest.mark.parametrize("check", ["ansatz", "balance", "projection"])
def test_verify_other(capsys, check):
    code, out, _ = run(capsys, "verify", check, "--m", "3", "--grid", "1,1;2,1/2")
    assert code == 0 and json.loads(out)["pass"]


def test_q1_failure_exit_code(capsys):
    rules = '{"de": ["alpha", "beta"], "da": ["beta-hat", "q"], "ae": ["alpha-hat", "q"]}'
    code, out, _ = run(capsys, "q1", "verify", "--m", "2", "--ruleset", rules)
    rep = json.loads(out)
    assert code == 1 and not rep["pass"]
    assert any(r["counterexamples"] for r in rep["reports"])


def test_q1_default_passes(capsys):
    code, out, _ = run(capsys, "q1", "verify", "--m", "3")
    assert code == 0


@pytest.mark.parametrize("argv", [
    ["stationary", "--m", "2", "--r", "3"],
    ["stationary", "--m", "2", "--r", "0", "--alpha", "x/3"],
    ["enumerate", "--word", "DEX"],
    ["frobnicate"],
    ["count", "--m", "2", "--bogus"],
])
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        raise SystemExit(main(argv))
    assert exc.value.code == 2


def test_count_and_det(capsys):
    code, out, _ = run(capsys, "count", "--m", "3", "--r", "1")
    assert code == 0 and "3,1,1,8" in out.splitlines()
    code, out, _ = run(capsys, "det", "--parts", "2")
    assert json.loads(out)["det"] == "α^2 + αβ + β"


def test_graph_csv(capsys):
    code, out, _ = run(capsys, "graph", "--m", "2", "--r", "0", "--format", "csv")
    assert code == 0 and out.splitlines()[0] == "source,target,rate,case"


def test_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    main(["q1", "sweep", "--m", "3", "--out", str(a)])
    main(["q1", "sweep", "--m", "3", "--out", str(b)])
    capsys.readouterr()
    assert a.read_bytes() == b.read_bytes()


def test_parse_grid():
    assert parse_grid("1/2,2;3,5") == ((0.5, 2), (3, 5))
