import json
import subprocess
import sys

import pytest

from garsidekit.cli import main

from conftest import ROOT

P = {k: str(ROOT / "presentations" / f"{k}.txt") for k in ("p1", "p2", "p3", "p4", "p5", "p2_table")}


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_recognize_json(capsys):
    code, out, _ = run(capsys, "recognize", P["p1"], "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["verdict"] == "Garside" and data["omega"] == "abab"
    assert len(data["lcm_closure"]) == 10
    code2, out2, _ = run(capsys, "recognize", P["p1"], "--format", "json", "--jobs", "2")
    assert out2 == out


def test_recognize_p3_inconclusive(capsys):
    code, out, _ = run(capsys, "recognize", P["p3"], "--cap", "50", "--format", "json")
    assert code == 2 and json.loads(out)["stage"] == "closure"


def test_recognize_homogeneous_note(capsys):
    code, out, _ = run(capsys, "recognize", P["p2"])
    assert code == 0 and "homogeneous shortcut: applies" in out


def test_input_errors(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("letters a b\nrel ab = aa\n")
    assert run(capsys, "recognize", str(bad))[0] == 3
    assert run(capsys, "recognize", str(tmp_path / "missing.txt"))[0] == 3
    assert run(capsys, "reverse", P["p1"], "a'bxa")[0] == 3
    assert run(capsys, "word-problem", P["p1"], "ab'", "ba")[0] == 3
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 3


def test_reverse(capsys, tmp_path):
    code, out, _ = run(capsys, "reverse", P["p1"], "a'baa", "--show-grid", "--dot", str(tmp_path / "g.dot"))
    assert code == 0
    assert out.splitlines()[0] == "babbab'a'b'"
    assert "positive: babba" in out and "negative: bab" in out and "row 0:" in out
    assert (tmp_path / "g.dot").read_text().startswith("digraph reversing")
    code, out, _ = run(capsys, "reverse", P["p2"], "ab'", "--left", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["negative"] == "ab" and data["positive"] == "ba"


def test_reverse_fuel(capsys):
    code, out, _ = run(capsys, "reverse", P["p3"], "b'b'b'aaaaaa", "--max-steps", "3")
    assert code == 2 and "fuel" in out


def test_word_problem(capsys):
    assert run(capsys, "word-problem", P["p2"], "aba'b'a'b")[0] == 0
    code, out, _ = run(capsys, "word-problem", P["p2"], "ab'")
    assert code == 1 and out.startswith("nontrivial")
    code, out, _ = run(capsys, "word-problem", P["p1"], "abab", "bbb", "--oracle", "4")
    assert code == 0 and "oracle (radius 4): equal" in out
    assert run(capsys, "word-problem", P["p1"], "ab", "ba")[0] == 1


def test_word_problem_needs_garside(capsys):
    assert run(capsys, "word-problem", P["p3"], "ab'", "--cap", "30")[0] == 2


def test_nf(capsys):
    code, out, _ = run(capsys, "nf", P["p2"], "ab'")
    assert code == 0 and out.strip() == "(ab)^-1 | ba"
    code, out, _ = run(capsys, "nf", P["p2"], "aab", "--right", "--format", "json")
    data = json.loads(out)
    assert data["positive"] == ["a", "ab"] and data["right"] == ["a", "ab"]


def test_lcm_gcd(capsys):
    assert run(capsys, "lcm-gcd", P["p2"], "lcm-right", "a", "b")[1].strip() == "aba"
    assert run(capsys, "lcm-gcd", P["p1"], "gcd-left", "bb", "bab")[1].strip() == "b"
    assert run(capsys, "lcm-gcd", P["p2"], "gcd-left", "ab", "ba")[1].strip() == "ε"


def test_simples(capsys, tmp_path):
    code, out, _ = run(capsys, "simples", P["p1"], "--dot", str(tmp_path / "s.dot"), "--format", "json")
    data = json.loads(out)
    assert code == 0 and len(data["simples"]) == 8 and data["delta"] == "abab"
    assert data["simples"][1] == {"word": "a", "star": "bab", "costar": "bab", "norm": 1}
    assert "digraph simples" in (tmp_path / "s.dot").read_text()


def test_automaton(capsys):
    code, out, _ = run(capsys, "automaton", P["p2"], "--kind", "left-gcd", "--format", "json")
    assert code == 0 and json.loads(out)["states"] == 20
    code, out, _ = run(capsys, "automaton", P["p1"], "--kind", "right-transducer", "--format", "dot")
    assert out.startswith("digraph right_transducer")
    code, out, _ = run(capsys, "automaton", P["p4"], "--kind", "char-graph")
    assert "edges: 4" in out


def test_enumerate_one_letter(capsys):
    code, out, _ = run(capsys, "enumerate", "1", "2", "--format", "json")
    assert code == 0 and json.loads(out)["presentations"] == [{"relations": [], "omega": "a", "simples_upper_bound": 2}]


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "garsidekit", "recognize", P["p2_table"]], capture_output=True, text=True
    )
    assert res.returncode == 0 and "verdict: Garside" in res.stdout
