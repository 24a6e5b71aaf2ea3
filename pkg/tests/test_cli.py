import json
import pathlib

import jsonschema
import pytest

from levelcurves.cli import main

SCHEMA = json.loads(
    (pathlib.Path(__file__).resolve().parent.parent / "reports.schema.json").read_text()
)


def run_json(capsys, *argv):
    code = main([*argv, "--json"])
    out = capsys.readouterr().out
    payload = json.loads(out)
    jsonschema.validate(payload, SCHEMA)
    return code, payload


def test_solve_tangent(capsys):
    code, payload = run_json(capsys, "solve", "z", "z+2")
    assert code == 0
    assert payload["command"] == "solve"
    assert payload["status"] == "FINITE"
    assert payload["bound"] == 4
    assert len(payload["points"]) == 1
    pt = payload["points"][0]
    assert abs(pt["re"] + 1) < 1e-15 and abs(pt["im"]) < 1e-15
    assert pt["radius"] < 1e-20


def test_solve_degenerate(capsys):
    code, payload = run_json(capsys, "solve", "z^2", "(z^2-1/2)/(1-1/2*z^2)")
    assert code == 0
    assert payload["status"] == "DEGENERATE"
    assert payload["shared_component"]
    assert payload["witness"]["residual"] < 1e-10


def test_blaschke_check_and_split(capsys):
    code, payload = run_json(capsys, "blaschke", "check", "(z-1/2)/(1-1/2*z)")
    assert code == 0 and payload["verdict"] is True
    code, payload = run_json(capsys, "blaschke", "check", "z+2")
    assert code == 0 and payload["verdict"] is False
    code, payload = run_json(capsys, "blaschke", "split", "(z-1/2)/(1-1/2*z)")
    assert code == 0
    assert len(payload["factors"]) == 1
    assert payload["factors"][0]["multiplicity"] == 1


def test_argcd_table(capsys):
    code, payload = run_json(capsys, "argcd", "z", "z+1", "--max-k", "12")
    assert code == 0
    assert payload["stabilized_F"] == "z^2 + z + 1"
    assert payload["stabilized_at"] == 6
    assert payload["consistency"] is True
    nontrivial = {row["k"] for row in payload["table"] if row["gcd"] != "1"}
    assert nontrivial == {6, 12}


def test_curve_analyze(capsys):
    code, payload = run_json(capsys, "curve", "analyze", "x*y - 1")
    assert code == 0
    assert payload["verdict"] == "INFINITE_UNIMODULAR"
    code, payload = run_json(capsys, "curve", "analyze", "x - y - 2")
    assert code == 0
    assert payload["verdict"] == "FINITE_BOUNDED"
    assert len(payload["points"]) == 1


def test_curve_implicitize(capsys):
    code, payload = run_json(capsys, "curve", "implicitize", "z", "z^2")
    assert code == 0
    assert "x" in payload["F"] and "y" in payload["F"]


def test_decompose(capsys):
    code, payload = run_json(capsys, "decompose", "z^2+1", "z^4")
    assert code == 0
    assert payload["command"] == "decompose"


def test_bound(capsys):
    code, payload = run_json(capsys, "bound", "z", "z+2")
    assert code == 0
    assert payload["bound"] == 4


def test_text_output_is_not_json(capsys):
    code = main(["solve", "z", "z+2"])
    assert code == 0
    out = capsys.readouterr().out
    with pytest.raises(json.JSONDecodeError):
        json.loads(out)


def test_usage_error_exit_code(capsys):
    assert main(["solve", "z"]) == 1  # missing operand


def test_parse_error_exit_code(capsys):
    assert main(["solve", "z +", "z"]) == 1


def test_wrong_variable_exit_code(capsys):
    assert main(["solve", "t", "z"]) == 1


def test_argcd_rejects_rational_input(capsys):
    assert main(["argcd", "1/z", "z"]) == 1
