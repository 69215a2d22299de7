import json
import subprocess
import sys

import pytest
from jsonschema import Draft202012Validator

from terminal_ca.cli import main
from terminal_ca.report import analyze_report, dumps, load_schema

from make_golden import CORPUS, GOLDEN, golden_name

SCHEMA = load_schema()


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def run_json(capsys, *argv):
    code, out = run(capsys, "--json", *argv)
    report = json.loads(out)
    Draft202012Validator(SCHEMA).validate(report)
    return code, report


def test_schema_is_valid():
    Draft202012Validator.check_schema(SCHEMA)


def test_analyze_z3_u3(capsys):
    code, r = run_json(capsys, "analyze", "z^3+u^3")
    assert code == 0 and r["ok"]
    assert r["germ"]["k"] == 3
    assert len(r["valuations"]["maximal"]) == 2
    assert [len(b["ledger"]["records"]) for b in r["blowups"]] == [2, 2]
    assert r["count"]["divisors"] == 2


def test_analyze_smooth_blowup(capsys):
    code, r = run_json(capsys, "analyze", "z^2+u^2")
    assert code == 0
    (b,) = r["blowups"]
    assert b["quotient_points"] == [] and b["residual_points"] == []
    assert len(b["ledger"]["records"]) == 1


def test_analyze_non_isolated(capsys):
    code, r = run_json(capsys, "analyze", "z^2")
    assert code == 1 and not r["ok"]
    assert "non-isolated" in r["errors"][0]
    assert r["blowups"] == []


def test_analyze_non_isolated_forced(capsys):
    code, r = run_json(capsys, "--force", "analyze", "z^2")
    assert code == 0 and r["warnings"]
    assert r["blowups"][0]["ledger"] is None
    assert r["blowups"][0]["diagnostics"]


def test_analyze_accepts_full_equation(capsys):
    _, r = run_json(capsys, "analyze", "x*y + z^3 + u^3")
    assert r["germ"]["f"] == "z^3 + u^3"


def test_charts_example(capsys):
    code, r = run_json(capsys, "charts", "z^3+u^3", "--weights", "1,2")
    assert code == 0
    u2 = r["blowup"]["charts"][1]
    assert u2["equation"] == "zb^3 + ub^3 + xb"
    assert u2["action"] == {"order": 2, "weights": [-1, 1, -1, -1], "reduced": [1, 1, 1, 1]}
    code, out = run(capsys, "charts", "z^3+u^3", "--weights", "1,2")
    assert "Z_2(-1,1,-1,-1)" in out


def test_charts_smooth(capsys):
    _, r = run_json(capsys, "charts", "z^2+u^2", "--weights", "1,1")
    b = r["blowup"]
    assert b["quotient_points"] == [] and b["residual_points"] == []


def test_charts_out_of_range(capsys):
    code, r = run_json(capsys, "charts", "z^3+u^3", "--weights", "3,3")
    assert code == 2 and "exceeds k" in r["errors"][0]
    code, _ = run_json(capsys, "--force", "charts", "z^3+u^3", "--weights", "3,3")
    assert code == 0


@pytest.mark.parametrize(
    "first, second, chi, verdict",
    [
        ("2,1,1,1", "1,1,1,1", None, "strictly_greater"),
        ("1,2", "2,1", "y,x,z,u", "equivalent"),
        ("1,2", "2,1", None, "incomparable"),
    ],
)
def test_compare_examples(capsys, first, second, chi, verdict):
    args = ["compare", "z^3+u^3", "--first", first, "--second", second]
    if chi:
        args += ["--chi", chi]
    code, r = run_json(capsys, *args)
    assert code == 0 and r["verdict"] == verdict
    assert len(r["forward"]) == 4


def test_compare_unlinked_chi(capsys):
    code, r = run_json(capsys, "compare", "z^3+u^3", "--first", "1,1", "--second", "1,1", "--chi", "x+z^2,y,z,u",
                           "--order", "1")
    assert code == 2 and "LinkingError" in r["errors"][0]


def test_compare_embedded_first(capsys):
    code, r = run_json(
        capsys, "compare", "z^3+u^3", "--first", "1,1,1,1", "--second", "2,1",
        "--chi", "x+z^2,y,z,u", "--embed-first", "--order", "1",
    )
    assert code == 0 and r["verdict"] == "strictly_less"


def test_ledger_examples(capsys):
    code, r = run_json(capsys, "ledger", "z^5+u^5", "--weights", "3,2")
    assert code == 0
    rows = r["ledger"]["records"]
    assert len(rows) == 4 and {row["discrepancy_over_X"] for row in rows} == {"1"}
    code, r = run_json(capsys, "ledger", "z^2+u^2", "--weights", "1,1")
    rows = r["ledger"]["records"]
    assert len(rows) == 1
    code, _ = run_json(capsys, "ledger", "z^3+u^3", "--weights", "1,1")
    assert code == 2


def test_count(capsys):
    code, r = run_json(capsys, "count", "z^3*u+z*u^3")
    assert code == 0 and r["count"] == {"divisors": 3, "expected": 3, "maximal_valuations": 3}


@pytest.mark.parametrize("argv", [["analyze", "z^2+"], ["analyze", "2z"], ["analyze", "z+u"], ["analyze", "w^2"]])
def test_input_errors_exit_2(capsys, argv):
    code, r = run_json(capsys, *argv)
    assert code == 2 and r["errors"] and not r["ok"]


def test_text_output(capsys):
    code, out = run(capsys, "ledger", "z^5+u^5", "--weights", "3,2")
    assert code == 0
    assert "4 divisor(s)" in out and "F_2" in out and out.rstrip().endswith("OK")


def test_quiet(capsys):
    assert run(capsys, "--quiet", "analyze", "z^3+u^3") == (0, "OK\n")
    code, out = run(capsys, "--quiet", "analyze", "z^2")
    assert code == 1 and out.startswith("FAILED")


def test_max_degree(capsys):
    code, r = run_json(capsys, "--max-degree", "4", "analyze", "z^2+u^7")
    assert code == 2 and "degree" in r["errors"][0]


def test_flags_after_subcommand(capsys):
    code, r = run_json(capsys, "analyze", "z^2", "--force")
    assert code == 0


def test_compare_order_condition(capsys):
    code, r = run_json(capsys, "compare", "z^3+u^3", "--first", "1,1", "--second", "1,1", "--chi", "x+z^2,y,z,u")
    assert code == 2 and "OrderConditionError" in r["errors"][0]


def test_quiet_count_and_compare(capsys):
    assert run(capsys, "--quiet", "count", "z^5+u^5") == (0, "4\n")
    assert run(capsys, "--quiet", "compare", "z^3+u^3", "--first", "1,2", "--second", "2,1") == (0, "incomparable\n")


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "terminal_ca", "--quiet", "count", "z^2+u^9"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "1"


def test_json_is_deterministic():
    assert dumps(analyze_report("z^4+z^2*u^2+u^4")) == dumps(analyze_report("z^4+z^2*u^2+u^4"))


@pytest.mark.parametrize("expr", CORPUS)
def test_golden(expr):
    expected = json.loads((GOLDEN / golden_name(expr)).read_text())
    report = analyze_report(expr)
    Draft202012Validator(SCHEMA).validate(report)
    assert report == expected
