import io
import json

import pytest

from fishburn_lab import cli, suite
from fishburn_lab.report import CONJECTURE, VerificationReport


def run(argv):
    out = io.StringIO()
    code = cli.main(argv, out=out)
    return code, out.getvalue()


def test_xi():
    code, text = run(["xi", "--limit", "20", "--no-cache"])
    assert code == 0
    lines = text.splitlines()
    assert len(lines) == 21
    assert lines[9] == "xi(9) = 31240"


def test_xi_json_and_mod():
    code, text = run(["--format", "json", "xi", "--limit", "9", "--mod", "5", "--no-cache"])
    rec = json.loads(text)
    assert code == 0 and rec["modulus"] == "5" and rec["values"][3:5] == ["0", "0"]


def test_a_series():
    code, text = run(["a-series", "--limit", "9", "--format", "json", "--no-cache"])
    assert json.loads(text)["values"] == ["1", "-1", "1", "-2", "5", "-16", "61", "-271", "1372", "-7795"]


def test_sets():
    code, text = run(["sets", "-p", "11"])
    assert code == 0 and text.strip() == "S(11) = {0,1,2,4,5,7}, T(11) = {8,9,10}"


def test_partial_sum_and_dissect():
    _, text = run(["partial-sum", "-N", "2"])
    assert text.strip() == "F(q,2) = 3 - 2*q - q^2 + q^3"
    _, text = run(["dissect", "-N", "2", "-p", "3", "--format", "json"])
    assert json.loads(text)["components"] == [["3", "1"], ["-2"], ["-1"]]


def test_verify_theorem1_19():
    code, text = run(["verify", "theorem1", "-p", "19", "--n-max", "200", "--no-cache"])
    assert code == 0
    assert text.startswith("[VERIFIED] theorem1")


@pytest.mark.parametrize("argv", [
    ["verify", "theorem1", "-p", "4"],
    ["xi"],
    ["bogus"],
    ["xi", "--limit", "-3"],
    ["scan", "prime-power", "-p", "5", "-j", "1"],
    ["classify", "--p-max", "3"],
    ["verify", "bernoulli", "-p", "3"],
])
def test_usage_errors(argv):
    with pytest.raises(SystemExit) as exc:
        run(argv)
    assert exc.value.code == 2


def test_unreadable_cache(tmp_path):
    (tmp_path / "xi-5-100.txt").write_text("not a table\n")
    code, _ = run(["xi", "--limit", "10", "--mod", "5", "--cache", str(tmp_path)])
    assert code == 2


def test_cache_env(tmp_path, monkeypatch):
    monkeypatch.setenv("FISHBURN_LAB_CACHE", str(tmp_path))
    run(["xi", "--limit", "10", "--mod", "7"])
    assert (tmp_path / "xi-7-10.txt").exists()


def _fake(kind, status):
    def check(**kw):
        bad = [((1,), 1)] if status == "refuted" else []
        return VerificationReport("fake", {"x": 1}, status, bad, 1, kind)
    return check


def test_exit_code_policy(monkeypatch, capsys):
    monkeypatch.setitem(suite.CHECKS, "a-conjecture", _fake(CONJECTURE, "refuted"))
    code, text = run(["verify", "a-conjecture", "--n-max", "3"])
    assert code == 0 and "[REFUTED]" in text
    assert "FINDING" in capsys.readouterr().err
    monkeypatch.setitem(suite.CHECKS, "a-conjecture", _fake("theorem", "refuted"))
    code, _ = run(["verify", "a-conjecture", "--n-max", "3"])
    assert code == 1


def test_multiple_reports_sorted_and_parallel_identical():
    argv = ["--format", "json", "verify", "lemma5", "-p", "7", "5", "-n", "2", "1", "--no-cache"]
    code1, serial = run(argv)
    code2, parallel = run(argv + ["--jobs", "4"])
    assert code1 == code2 == 0
    assert serial == parallel
    params = [json.loads(line)["parameters"] for line in serial.splitlines()]
    assert params == [{"n": 1, "p": 5}, {"n": 1, "p": 7}, {"n": 2, "p": 5}, {"n": 2, "p": 7}]


def test_scan_and_other_verifies():
    for argv in (["scan", "prime-power", "-p", "5", "-j", "2", "--n-max", "5"],
                 ["scan", "strengthened-lemma5", "-p", "5", "-n", "2"],
                 ["verify", "lemma4", "-p", "3", "-n", "4", "--max-N", "2"],
                 ["verify", "lemma2", "--trials", "5"],
                 ["verify", "eq214", "-p", "5", "--max-j", "1"],
                 ["verify", "bernoulli", "-p", "5", "--max-order", "1"],
                 ["verify", "congruences", "--n-max", "10"],
                 ["classify", "--p-max", "100"]):
        code, text = run(argv + ["--no-cache"])
        assert code == 0, argv
        assert "REFUTED" not in text
