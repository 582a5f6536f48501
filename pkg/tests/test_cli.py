import io
import json
import re
import subprocess
import sys

import pytest

from parity_palindromes.cli import main


def run(*argv):
    out = io.StringIO()
    try:
        code = main(list(argv), out=out)
    except SystemExit as exc:  # argparse errors
        code = exc.code
    return code, out.getvalue()


def test_enum_ppc_only():
    code, out = run("enum", "4", "--ppc-only")
    assert code == 0
    assert out.split() == ["4", "1,3", "2,2", "3,1", "1,2,1", "1,1,1,1"]


def test_enum_one_and_counts():
    assert run("enum", "1") == (0, "1\n")
    assert len(run("enum", "6", "--ppc-only")[1].splitlines()) == 18
    assert len(run("enum", "6")[1].splitlines()) == 32


def test_enum_json_records():
    code, out = run("enum", "3", "--format", "json")
    records = [json.loads(line) for line in out.splitlines()]
    assert records[0] == {"n": 3, "parts": [3], "ppc": True, "type": "B"}
    assert records[1] == {"n": 3, "parts": [1, 2], "ppc": False}
    assert records[3] == {"n": 3, "parts": [1, 1, 1], "ppc": True, "type": "A"}


def test_enum_compact_global_flag_either_side():
    assert run("--compact", "enum", "3")[1].split() == ["3", "12", "21", "111"]
    assert run("enum", "3", "--compact")[1].split() == ["3", "12", "21", "111"]


@pytest.mark.parametrize(
    "argv",
    [("enum", "0"), ("enum", "31"), ("enum", "4", "--format", "dot"), ("enum", "x"),
     ("--cap", "5", "enum", "6"), ("enum", "4", "--format", "xml")],
)
def test_enum_usage_errors(argv):
    assert run(*argv)[0] == 2


def test_count():
    assert run("count", "4", "--method", "both") == (0, "6 6\n")
    assert run("count", "1", "--method", "formula") == (0, "1\n")
    assert run("count", "12", "--method", "both") == (0, "486 486\n")
    assert run("count", "6", "--method", "brute", "--jobs", "2") == (0, "18\n")
    assert run("count", "40", "--method", "formula") == (0, f"{2 * 3**19}\n")


def test_count_errors():
    assert run("count", "0")[0] == 2
    assert run("count", "31", "--method", "brute")[0] == 2
    assert run("count", "90", "--method", "formula")[0] == 2


def test_count_mismatch_exits_one(monkeypatch):
    from parity_palindromes import oracle

    monkeypatch.setattr(oracle, "count_ppcs_formula", lambda n: 7)
    assert run("count", "4") == (1, "6 7\n")


def test_classify(capsys):
    assert run("classify", "1,2,1") == (0, "A\n")
    assert run("classify", "32141") == (0, "C\n")
    assert run("classify", "1,2") == (1, "")
    assert "not a ppc" in capsys.readouterr().err
    assert run("classify", "1,,2")[0] == 2


def test_produce(capsys):
    assert run("produce", "1,1") == (0, "A 1,1,1,1\nB 2,2\nC1 1,3\nC2 3,1\n")
    assert run("produce", "3") == (0, "A 1,3,1\nB 5\n")
    assert run("produce", "2,1,2") == (0, "A 1,2,1,2,1\nB 3,1,3\n")
    assert run("--compact", "produce", "11")[1] == "A 1111\nB 22\nC1 13\nC2 31\n"
    assert run("produce", "2,1") == (1, "")
    assert "not a ppc" in capsys.readouterr().err
    assert run("produce", "1")[0] == 2
    assert run("produce", "abc")[0] == 2


def test_forest_dot_matches_figure():
    code, out = run("forest", "even", "4", "--format", "dot")
    assert code == 0
    assert out.startswith("digraph")
    nodes = re.findall(r'^\s+("[0-9,]+") \[label="(\d+)"\];$', out, re.M)
    edges = re.findall(r'^\s+"([0-9,]+)" -> "([0-9,]+)" \[label="(\w+)"\];$', out, re.M)
    assert len(nodes) == 8
    assert {label for _, label in nodes} == {"11", "2", "1111", "22", "13", "31", "121", "4"}
    assert set(edges) == {
        ("1,1", "1,1,1,1", "A"), ("1,1", "2,2", "B"), ("1,1", "1,3", "C1"),
        ("1,1", "3,1", "C2"), ("2", "1,2,1", "A"), ("2", "4", "B"),
    }


def test_forest_dot_label_falls_back_to_canonical():
    out = run("forest", "even", "12", "--format", "dot")[1]
    assert '"1,10,1" [label="1,10,1"];' in out
    assert '"1,2,1" [label="121"];' in out


def test_forest_text_seed_only():
    assert run("forest", "odd", "3") == (0, "total 3 (seed)\n  1,1,1\n  3\n")


def test_forest_json_sizes():
    code, out = run("forest", "even", "8", "--format", "json")
    levels = [json.loads(line) for line in out.splitlines()]
    assert [len(lv["members"]) for lv in levels] == [2, 6, 18, 54]
    assert levels[0]["seed"] and "rule" not in levels[0]["members"][0]
    assert all("rule" in m and "parent" in m for m in levels[1]["members"])


@pytest.mark.parametrize("argv", [("forest", "even", "5"), ("forest", "odd", "1"),
                                  ("forest", "mixed", "4"), ("--cap", "6", "forest", "even", "8")])
def test_forest_errors(argv):
    assert run(*argv)[0] == 2


def test_verify_small():
    code, out = run("verify", "--max", "5")
    assert code == 0
    assert out.splitlines()[-1] == "overall: PASS"
    assert all(line.startswith("PASS") for line in out.splitlines()[:-1])


def test_verify_json():
    code, out = run("verify", "--max", "6", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["overall"] is True
    assert {c["name"] for c in doc["checks"]} >= {"counts", "bijection", "thirds",
                                                   "fanout", "round-trip", "forest"}


@pytest.mark.parametrize("value", ["3", "31", "x"])
def test_verify_range(value):
    assert run("verify", "--max", value)[0] == 2


def test_verify_failure_reports_counterexample(monkeypatch):
    from parity_palindromes import production

    real = production.FANOUT.copy()
    monkeypatch.setitem(production.FANOUT, production.PpcType.B, real[production.PpcType.A])
    code, out = run("verify", "--max", "5")
    assert code == 1
    fail = [line for line in out.splitlines() if line.startswith("FAIL")]
    assert fail and "counterexample=" in fail[0]
    assert out.splitlines()[-1] == "overall: FAIL"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "parity_palindromes", "classify", "2,1,2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "B\n"
