import json
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from abelian_moduli.cli import main

EXACT = {"type": "string", "pattern": r"^-?\d+(/\d+)?$|p|k"}

REPORT_SCHEMA = {
    "type": "object",
    "required": ["command", "query", "result", "checks", "passed", "elapsed_s"],
    "additionalProperties": False,
    "properties": {
        "command": {"type": "string"},
        "query": {"type": "object"},
        "result": {"type": "object"},
        "checks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "passed", "details"],
                "additionalProperties": False,
                "properties": {
                    "name": {"type": "string"},
                    "passed": {"type": "boolean"},
                    "details": {"type": "object"},
                },
            },
        },
        "passed": {"type": "boolean"},
        "elapsed_s": {"type": "number", "minimum": 0},
    },
}

CHERN_RESULT = {
    "type": "object",
    "required": ["c1^3", "c1c2", "c3", "pa", "c2L", "c2D0"],
    "properties": {key: EXACT for key in ["c1^3", "c1c2", "c3", "pa", "c2L", "c2D0"]},
}


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    doc = json.loads(out)
    jsonschema.validate(doc, REPORT_SCHEMA)
    return code, doc


def no_floats(value):
    if isinstance(value, float):
        return False
    if isinstance(value, dict):
        return all(no_floats(v) for v in value.values())
    if isinstance(value, list):
        return all(no_floats(v) for v in value)
    return True


def test_intersect_examples(capsys):
    assert run(capsys, "intersect", "--expr", "(3L - D - 1/2 R - 1/2 E)^3", "--prime", "5")[:2] == (0, "68\n")
    assert run(capsys, "intersect", "--expr", "prod(L,L,R)")[:2] == (0, "(7/144)*p^3 - (7/144)*p\n")


def test_intersect_degree_error(capsys):
    code, out, err = run(capsys, "intersect", "--expr", "prod(L,L)")
    assert code == 2 and out == ""
    assert "degree must be 3" in err


def test_intersect_parse_error(capsys):
    code, _, err = run(capsys, "intersect", "--expr", "L +* R")
    assert code == 2 and "position" in err


def test_intersect_json(capsys):
    code, doc = run_json(capsys, "intersect", "--expr", "K^3", "--prime", "5")
    assert code == 0
    assert doc["result"]["value"] == "68"
    assert no_floats(doc["result"])


def test_bad_prime(capsys):
    code, _, err = run(capsys, "intersect", "--expr", "K^3", "--prime", "9")
    assert code == 2 and "prime" in err


def test_table_override(capsys, tmp_path):
    text = resources.files("abelian_moduli").joinpath("data/tables_hkw.txt").read_text()
    bad = tmp_path / "bad.txt"
    bad.write_text(text.replace("L.R.E = (1/16)", "L.R.E = (1/17)"))
    code, _, err = run(capsys, "verify", "--suite", "tables", "--table", str(bad))
    assert code == 2 and "overlap inconsistency for L.R.E" in err
    missing = tmp_path / "missing.txt"
    code, _, err = run(capsys, "verify", "--suite", "tables", "--table", str(missing))
    assert code == 2


def test_table_env(capsys, tmp_path, monkeypatch):
    text = resources.files("abelian_moduli").joinpath("data/tables_hkw.txt").read_text()
    path = tmp_path / "t.txt"
    path.write_text(text.replace("L.L.L = p*(p^4-1)/2880", "L.L.L = 0"))
    monkeypatch.setenv("MODULI_TABLE_PATH", str(path))
    assert run(capsys, "intersect", "--expr", "L^3")[:2] == (0, "0\n")
    code, _, err = run(capsys, "chern", "--prime", "5")
    assert code == 1 and "verification failed" in err


def test_verify_tables(capsys):
    code, doc = run_json(capsys, "verify", "--suite", "tables")
    assert code == 0
    overlaps = [c for c in doc["checks"] if "overlap" in c["name"]]
    assert len(overlaps) == 5 and all(c["passed"] for c in overlaps)


def test_verify_star(capsys):
    code, doc = run_json(capsys, "verify", "--suite", "star")
    assert code == 0
    names = [c["name"] for c in doc["checks"]]
    assert any("(a)" in n for n in names) and any("(b)" in n for n in names) and any("(c)" in n for n in names)


def test_verify_star_printed_comparison(capsys):
    code, doc = run_json(capsys, "verify", "--suite", "star", "--use-paper-display")
    assert code == 1
    (c,) = [c for c in doc["checks"] if "(c)" in c["name"]]
    assert not c["passed"]
    assert c["details"]["residual_bracket"] == "484*p^14 + 1200*p^13"


def test_verify_all(capsys):
    code, doc = run_json(capsys, "verify", "--suite", "all", "--prime-range", "5..37")
    assert code == 0 and doc["passed"]
    assert doc["query"]["primes"][-1] == 37


def test_dim(capsys):
    assert run(capsys, "dim", "--group", "gamma1p", "--prime", "5", "--weight", "12")[:2] == (0, "247\n")
    code, doc = run_json(capsys, "dim", "--group", "gamma2sq", "--prime", "5", "--weight", "12")
    assert code == 0 and doc["result"]["dim"] > 247
    code, _, err = run(capsys, "dim", "--group", "gamma1p", "--prime", "5", "--weight", "10")
    assert code == 2 and "multiple of 12" in err


def test_chern(capsys):
    code, doc = run_json(capsys, "chern", "--prime", "7")
    assert code == 0
    jsonschema.validate(doc["result"], CHERN_RESULT)
    assert doc["result"]["c1c2"] == "24"
    code, doc = run_json(capsys, "chern", "--symbolic")
    jsonschema.validate(doc["result"], CHERN_RESULT)
    assert "p" in doc["result"]["c1c2"]


def test_trace(capsys):
    code, out, _ = run(capsys, "trace", "--case", "1c", "--prime", "5")
    assert code == 0 and out == "1c: k^2 0; k^1 -62968750000\n"
    code, doc = run_json(capsys, "trace", "--case", "t3", "--normalized")
    (row,) = doc["result"]["traces"]
    assert row == {"case": "1c", "k2": "0", "k1": "-120*p^15 - 120*p^13 + 120*p^12 + 120*p^10", "unit": "(p^2-1)^2/34560"}
    code, doc = run_json(capsys, "trace", "--normalized")
    assert doc["result"]["traces"][-1]["k2"] == "210*p^14"
    code, _, err = run(capsys, "trace", "--case", "9z")
    assert code == 2 and "unknown case" in err


def test_theta_eval(capsys):
    code, doc = run_json(capsys, "theta", "eval", "--tau", "0,1,0,0,0,1", "--char", "1,1;1,1", "--eps", "1e-10")
    assert code == 0 and abs(doc["result"]["abs"]) < 1e-10
    code, _, err = run(capsys, "theta", "eval", "--tau", "0,1,0", "--char", "0,0;0,0")
    assert code == 2 and "six" in err
    code, _, err = run(capsys, "theta", "eval", "--tau", "0,1,0,0,0,1", "--char", "0,0,0,0")
    assert code == 2


@pytest.mark.parametrize("test", ["modularity", "vanishing", "omega"])
def test_theta_check(capsys, test):
    code, doc = run_json(capsys, "theta", "check", "--test", test, "--samples", "4", "--seed", "2")
    assert code == 0
    assert doc["result"]["max_residual"] < doc["query"]["tol"]


def test_theta_check_tolerance_failure(capsys):
    code, doc = run_json(capsys, "theta", "check", "--test", "modularity", "--samples", "2", "--tol", "1e-30")
    assert code == 1 and not doc["passed"]


def test_deterministic(capsys):
    argv = ("theta", "check", "--test", "omega", "--samples", "3", "--seed", "9")
    _, a = run_json(capsys, *argv)
    _, b = run_json(capsys, *argv)
    assert a["result"] == b["result"]


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as info:
        main(["dim", "--group", "nope", "--prime", "5", "--weight", "12"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main([])
    assert info.value.code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "abelian_moduli", "dim", "--group", "gamma1p", "--prime", "7", "--weight", "24"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0 and int(proc.stdout) > 0
