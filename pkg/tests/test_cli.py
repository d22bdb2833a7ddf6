import csv
import io
import json
import subprocess
import sys

import pytest

from weitzenboeck.cli import EXIT_FAIL, SCHEMA, main, parse_range, render_value
from weitzenboeck.oracle.serialize import rep_from_json
from fractions import Fraction


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def rows(doc, title):
    t = next(t for t in doc["tables"] if t["title"] == title)
    return [dict(zip(t["columns"], r)) for r in t["rows"]]


def test_decompose_json(capsys):
    code, out, _ = run(capsys, "decompose", "--n", "5", "--weight", "1")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == SCHEMA
    assert [(r["lambda"], r["dim"], r["w"]) for r in rows(doc, "summands")] == [
        ("(2,0)", 14, "1"), ("(1,1)", 10, "-1"), ("(0,0)", 1, "-4")]


def test_decompose_flags(capsys):
    doc = json.loads(run(capsys, "decompose", "--n", "4", "--weight", "1")[1])
    assert doc["exceptional"] is True
    doc = json.loads(run(capsys, "decompose", "--n", "7", "--weight", "1/2,1/2,1/2")[1])
    assert doc["summands"] == 2


def test_output_is_deterministic(capsys):
    a = run(capsys, "bw", "--n", "6", "--weight", "2,1", "--include-dependent")[1]
    b = run(capsys, "bw", "--n", "6", "--weight", "2,1", "--include-dependent")[1]
    assert a == b


def test_markdown_and_csv(capsys):
    md = run(capsys, "casimir", "--n", "4", "--weight", "1,1", "--format", "markdown")[1]
    assert "| q | c_q | c_hat_q |" in md and "| 3 | -8 | 83/2 |" in md
    out = run(capsys, "casimir", "--n", "4", "--weight", "1,1", "--format", "csv", "--q-max", "3")[1]
    table = list(csv.reader(io.StringIO(out)))
    assert ["3", "-8", "83/2"] in table


def test_approx_rendering(capsys):
    out = run(capsys, "casimir", "--n", "5", "--weight", "1", "--approx", "--q-max", "3")[1]
    doc = json.loads(out)
    assert all("/" not in str(v) for r in doc["tables"][0]["rows"] for v in r)
    assert render_value(Fraction(1, 3), approx=True) == "0.333333333333"
    assert render_value(Fraction(1, 3)) == "1/3"


def test_bw_fourdim_rows(capsys):
    doc = json.loads(run(capsys, "bw", "--n", "4", "--weight", "3/2,1/2")[1])
    fd = rows(doc, "four-dimensional rows")
    assert fd[1]["coefficients"] == ["2", "2", "-4", "-4"]
    assert fd[2]["coefficients"] == ["1", "-3", "1", "-3"]
    assert doc["certificate"]["rank"] == 2


def test_bw_spinor_and_pf_family(capsys):
    doc = json.loads(run(capsys, "bw", "--n", "5", "--weight", "1/2,1/2")[1])
    assert doc["certificate"] == {"rank": 1, "expected": 1, "rank_without_exceptional": 1,
                                  "independent": ["even[1]"]}
    assert len(rows(doc, "formulas")) == 2
    doc = json.loads(run(capsys, "bw", "--n", "6", "--weight", "1,1,1")[1])
    red = rows(doc, "pf-family reduction")[0]
    assert (red["operator"], red["kappa"], red["weyl"]) == ("4", "3/10", "1/4")
    doc = json.loads(run(capsys, "bw", "--n", "6", "--weight", "1,1")[1])
    assert doc["exceptional"] and rows(doc, "formulas")[-1]["label"] == "exceptional"


def test_classical_examples(capsys):
    doc = json.loads(run(capsys, "classical", "spinor", "--n", "9")[1])
    assert dict((r["name"], r["value"]) for r in rows(doc, "constants"))["friedrich"] == "9/32"
    doc = json.loads(run(capsys, "classical", "forms", "--n", "6", "--p", "2")[1])
    assert dict((r["name"], r["value"]) for r in rows(doc, "constants"))["gallot_meyer"] == "10"
    doc = json.loads(run(capsys, "classical", "weyl", "--n", "7")[1])
    assert dict((r["name"], r["value"]) for r in rows(doc, "constants"))["operator"] == "4"
    doc = json.loads(run(capsys, "classical", "fourdim", "--k", "2", "--l", "1")[1])
    assert rows(doc, "rows")[1]["coefficients"] == ["2", "2", "-4", "-4"]
    doc = json.loads(run(capsys, "classical", "pf-family", "--n", "4", "--p", "3/2")[1])
    assert doc["weight"] == "(3/2,3/2)"
    doc = json.loads(run(capsys, "classical", "exceptional", "--n", "6", "--weight", "1,1")[1])
    assert rows(doc, "operators")[0]["name"] == "D+"


@pytest.mark.parametrize(
    "argv",
    [
        ["decompose", "--n", "5", "--weight", "1,2"],
        ["decompose", "--n", "4", "--weight", "1,0,0"],
        ["classical", "spinor", "--n", "5", "--weight", "1"],
        ["classical", "fourdim", "--k", "1"],
        ["classical", "forms", "--n", "6"],
        ["classical", "exceptional", "--n", "6", "--weight", "1,1,1"],
        ["verify", "--suite", "casimir", "--n", "2..4"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["classical", "hyperkahler"])
    assert info.value.code == 2


def test_parse_range():
    assert parse_range("3..6") == [3, 4, 5, 6]
    assert parse_range("4,6..7") == [4, 6, 7]


def test_verify_suites(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "casimir", "--n", "3..8")
    doc = json.loads(out)
    assert code == 0 and doc["passed"] and doc["failures"] == 0
    code, out, _ = run(capsys, "verify", "--suite", "clifford", "--n", "4", "--weight-budget", "64")
    assert code == 0 and json.loads(out)["passed"]
    code, out, _ = run(capsys, "verify", "--suite", "curvature", "--n", "4", "--samples", "2", "--jobs", "2")
    assert code == 0
    code, out, _ = run(capsys, "verify", "--suite", "fourdim", "--samples", "4")
    doc = json.loads(out)
    assert code == 0 and "split_formula" in [r["check"] for r in rows(doc, "checks")]
    code, out, _ = run(capsys, "verify", "--suite", "enveloping", "--n", "3,5")
    assert code == 0


def test_verify_reports_skips(capsys):
    code, out, err = run(capsys, "verify", "--suite", "clifford", "--n", "4", "--weight-budget", "30")
    doc = json.loads(out)
    assert code == 0 and doc["passed"]
    assert doc["skipped"] == 2
    assert "warning: skipped (2,2): ambient dimension 32" in err


def test_verify_failure_exit_code(capsys, monkeypatch):
    from weitzenboeck import suites

    def broken(n, max_entry=3, q_max=4):
        return suites._cell("casimir", n, "broken", [suites._check("c_identity", False, "forced")])

    monkeypatch.setattr(suites, "casimir_cell", broken)
    code, out, _ = run(capsys, "verify", "--suite", "casimir", "--n", "3")
    assert code == EXIT_FAIL
    assert json.loads(out)["passed"] is False


def test_export_rep(capsys):
    code, out, _ = run(capsys, "export-rep", "--n", "4", "--weight", "2")
    rep = rep_from_json(json.loads(out))
    assert code == 0 and rep.dim == 9


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "weitzenboeck", "decompose", "--n", "3", "--weight", "1",
                           "--format", "csv"], capture_output=True, text=True, check=True)
    assert proc.stdout.splitlines()[2] == "(2),5,1,2,,rho+mu_1"
