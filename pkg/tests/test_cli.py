import json
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from downup.cli import main, run

SCHEMA = json.loads(resources.files("downup").joinpath("schema/report.schema.json").read_text())


def call(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_nf_example(capsys):
    code, out, _ = call(capsys, "nf", "--algebra", "downup", "--params", "alpha=2,beta=-1,gamma=0",
                        "--expr", "d*d*u")
    assert code == 0
    assert out.splitlines()[0] == "2*d*u*d - u*d*d"


def test_witness_example(capsys):
    code, out, _ = call(capsys, "--format", "json", "witness", "qwa-essential", "--q", "2/3",
                        "--element", "w(4)")
    rep = json.loads(out)
    assert code == 0
    payload = rep["checks"][0]["payload"]
    assert payload["operator"] == "b - 243/16" and payload["result"] == "v(0)" and payload["sound"]


def test_classify_example(capsys):
    code, out, _ = call(capsys, "--format", "json", "classify", "--alpha", "3", "--beta", "-2",
                        "--gamma", "0", "--root-r", "2", "--root-s", "1")
    rep = json.loads(out)
    assert code == 0
    verdict = rep["checks"][0]["payload"]
    assert verdict["status"] == "FAILS" and verdict["witness"]["map"].endswith("B(2)")
    assert [c["name"] for c in rep["checks"]] == ["verdict", "pulled_back_relations_vanish",
                                                  "end_to_end_witness"]


def test_parse_error_diagnostic(capsys):
    code, _, err = call(capsys, "nf", "--algebra", "qplane", "--params", "q=2", "--expr", "a*b +* 3")
    assert code == 1
    assert "ParseError" in err and "position 5" in err
    assert err.rstrip().endswith("^")


def test_domain_error_name(capsys):
    code, out, _ = call(capsys, "--format", "json", "classify", "--alpha", "3", "--beta", "-2",
                        "--gamma", "0", "--root-r", "2", "--root-s", "3")
    rep = json.loads(out)
    assert code == 1 and rep["error"]["name"] == "RootMismatch"
    code, out, _ = call(capsys, "--format", "json", "hom", "--case", "b", "--params",
                        "alpha=3,beta=-2,r=2,s=1")
    assert code == 1 and json.loads(out)["error"]["name"] == "InvalidParameter"


def test_usage_errors(capsys):
    assert call(capsys, "nf", "--algebra", "nope", "--expr", "d")[0] == 1
    assert call(capsys, "nf", "--algebra", "downup", "--params", "alpha=1", "--expr", "d")[0] == 1


def test_verification_failure_exit_code(capsys, monkeypatch):
    from downup import cli
    monkeypatch.setattr(cli, "check_hom", lambda m: type("H", (), {"ok": False, "residues": (),
                                                                  "certificate": None})())
    code, _, _ = call(capsys, "hom", "--case", "a", "--params", "alpha=3,beta=-2,r=2,s=1")
    assert code == 2


@pytest.mark.parametrize("argv", [
    ["nf", "--algebra", "qweyl", "--params", "q=zeta:5", "--expr", "b*a*a"],
    ["confluence", "--algebra", "downup", "--draws", "3", "--mode", "Q(q)"],
    ["hom", "--case", "a", "--params", "alpha=q+1,beta=-q,r=q,s=1"],
    ["module-check", "qp", "--q", "q", "--range", "6"],
    ["module-check", "qwa", "--q", "2/3", "--range", "6"],
    ["witness", "qp-simple", "--q", "2/3", "--random", "5"],
    ["witness", "qp-essential", "--q", "q", "--element", "m(1) + v(0)"],
    ["witness", "qwa-simple", "--q", "3", "--element", "v(3)"],
    ["orbit", "--r", "zeta:6", "--gamma", "1", "--lambda1", "1", "--bound", "20"],
    ["orbit", "--r", "3", "--lambda1", "1", "--bound", "10"],
    ["centrality", "--r", "zeta:4", "--gamma", "1", "--power", "4"],
    ["classify", "--alpha", "5", "--beta", "-6", "--gamma", "1", "--root-r", "2", "--root-s", "3"],
    ["classify", "--alpha", "3", "--beta", "-2", "--gamma", "1", "--root-r", "2", "--root-s", "1"],
    ["classify", "--alpha", "3", "--beta", "-2", "--gamma", "0", "--root-r", "2", "--root-s", "3"],
    ["nf", "--algebra", "downup", "--params", "alpha=1,beta=1,gamma=1", "--expr", "d*/u"],
])
def test_json_reports_validate(capsys, argv):
    code, out, _ = call(capsys, "--format", "json", *argv)
    rep = json.loads(out)
    jsonschema.validate(rep, SCHEMA)
    assert rep["exit_status"] == code


def test_seeded_witness_run():
    rep, fmt = run(["witness", "qwa-essential", "--q", "2/3", "--random", "4", "--seed", "3"])
    assert fmt == "text" and rep.exit_status == 0 and len(rep.checks) == 4


def test_console_script_runs():
    proc = subprocess.run([sys.executable, "-m", "downup.cli", "nf", "--algebra", "qplane",
                           "--params", "q=3", "--expr", "b*a"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.splitlines()[0] == "1/3*a*b"
