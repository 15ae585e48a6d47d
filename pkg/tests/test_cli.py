import csv
import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from sqfdensity import cli
from sqfdensity.cli import DENSITY_FIELDS, frac_str, main, parse_frac, run_verify
from sqfdensity.cyclotomic import NotRational
from sqfdensity.families import FAMILY_KINDS
from sqfdensity.oracle import enumerate_density


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_frac_roundtrip():
    for x in (Fraction(0), Fraction(8, 9), Fraction(-3, 4), Fraction(5)):
        assert parse_frac(frac_str(x)) == x
    assert frac_str(Fraction(0)) == "0/1"
    assert frac_str(Fraction(1)) == "1/1"


def test_density_examples(capsys):
    code, out, _ = run(capsys, "density", "--family", "a1", "--p", "3", "--n", "3", "--b1", "0", "--method", "closed")
    assert code == 0 and json.loads(out)["p_max"] == "8/9"
    code, out, _ = run(capsys, "density", "--family", "an-fixed", "--p", "3", "--n", "2", "--bn", "2",
                       "--method", "oracle")
    assert code == 0 and json.loads(out)["p_sqf"] == "1/1"
    code, out, _ = run(capsys, "density", "--family", "all", "--p", "2", "--n", "2", "--method", "engine")
    assert code == 0 and json.loads(out)["p_max"] == "3/4"


@pytest.mark.parametrize("kind", FAMILY_KINDS)
def test_json_schema(capsys, kind):
    extra = {"a1": ["--b1", "1"], "a1a2": ["--b1", "1", "--b2", "2"], "an-fixed": ["--bn", "1"],
             "a1-an-unit": ["--b1", "0"]}.get(kind, [])
    code, out, _ = run(capsys, "density", "--family", kind, "--p", "3", "--n", "3", *extra)
    assert code == 0
    rec = json.loads(out)
    assert set(DENSITY_FIELDS) <= set(rec)
    assert rec["command"] == "density" and rec["family"] == kind
    for k in ("p0_sqf", "p1_sqf", "p_sqf", "p_max"):
        assert isinstance(rec[k], str) and "/" in rec[k]
    assert parse_frac(rec["p_sqf"]) == parse_frac(rec["p0_sqf"]) + parse_frac(rec["p1_sqf"])


def test_params_echo_residues(capsys):
    _, out, _ = run(capsys, "density", "--family", "a1a2", "--p", "5", "--n", "4", "--b1", "7", "--b2", "-1",
                    "--deterministic")
    assert json.loads(out)["params"] == {"b1": 2, "b2": 4}


def test_deterministic_output(capsys):
    argv = ["density", "--family", "a1a2", "--p", "3", "--n", "4", "--b1", "0", "--b2", "1",
            "--method", "oracle", "--deterministic"]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second
    assert "timing" not in json.loads(first)
    _, timed, _ = run(capsys, *argv[:-1])
    assert "timing" in json.loads(timed)


def test_csv_output(capsys):
    code, out, _ = run(capsys, "density", "--family", "a1", "--p", "3", "--n", "3", "--b1", "0",
                       "--format", "csv", "--deterministic")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert tuple(rows[0]) == DENSITY_FIELDS
    row = dict(zip(rows[0], rows[1]))
    assert row["p_max"] == "8/9" and row["params"] == "b1=0"


def test_exit_codes(capsys):
    assert run(capsys, "density", "--family", "an-fixed", "--p", "3", "--n", "3", "--bn", "3")[0] == 2
    assert run(capsys, "density", "--family", "all", "--p", "4", "--n", "3")[0] == 2
    assert run(capsys, "density", "--family", "a1", "--p", "3", "--n", "3")[0] == 2
    assert run(capsys, "density", "--family", "nope", "--p", "3", "--n", "3")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    code, _, err = run(capsys, "density", "--family", "all", "--p", "3", "--n", "6", "--method", "oracle",
                       "--budget", "1000")
    assert code == 3 and "budget" in err
    assert run(capsys, "verify", "--pmax", "3", "--nmax", "3", "--budget", "10")[0] == 3
    assert run(capsys, "euler", "--set", "const", "--kind", "sqf", "--n", "1", "--bound", "10")[0] == 2


def test_exit_code_for_invariant_violation(capsys, monkeypatch):
    def broken(*args, **kw):
        raise NotRational("coordinate 1 nonzero")

    monkeypatch.setattr(cli, "compute", broken)
    code, _, err = run(capsys, "density", "--family", "all", "--p", "3", "--n", "3")
    assert code == 4 and "invariant" in err


def test_budget_env_override(capsys, monkeypatch):
    monkeypatch.setenv("PADIC_BUDGET", "100")
    code, _, _ = run(capsys, "density", "--family", "all", "--p", "3", "--n", "3", "--method", "oracle")
    assert code == 3


def test_verify_small_grid(capsys):
    code, out, err = run(capsys, "verify", "--pmax", "3", "--nmax", "4")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert all(r["closed"] == r["engine"] == r["oracle"] for r in rows)
    assert f"verified {len(rows)} tuples" in err


def test_verify_p2_grid(capsys):
    code, out, _ = run(capsys, "verify", "--pmax", "2", "--nmax", "8")
    assert code == 0
    rows = out.splitlines()
    assert len(rows) >= 7 * len(FAMILY_KINDS)


def test_verify_family_filter(capsys):
    code, out, _ = run(capsys, "verify", "--pmax", "3", "--nmax", "3", "--families", "all,an-unit")
    assert code == 0
    assert {json.loads(r)["family"] for r in out.splitlines()} == {"all", "an-unit"}
    assert run(capsys, "verify", "--pmax", "3", "--nmax", "3", "--families", "bogus")[0] == 2


def test_verify_detects_injected_fault():
    target = ("a1", 3, 3)

    def faulty(fam, p, n, budget=None):
        r = enumerate_density(fam, p, n, budget=budget)
        if (fam.kind, p, n) == target:
            total = 3**4  # a1 family at n = 3: two free positions mod 9
            r = type(r)(r.p0_sqf + Fraction(1, total), r.p1_sqf, r.p_max, r.method)
        return r

    out, err = io.StringIO(), io.StringIO()
    code = run_verify(3, 3, out=out, err=err, oracle=faulty)
    assert code == 1
    report = err.getvalue()
    assert "MISMATCH" in report and "a1(b1=0)" in report
    for name in ("closed", "engine", "oracle"):
        assert f"{name}:" in report


def test_euler_command(capsys):
    code, out, _ = run(capsys, "euler", "--set", "const", "--kind", "sqf", "--n", "2", "--bound", "2")
    rec = json.loads(out)
    assert code == 0 and rec["value"] == "0.5" and rec["factor_count"] == 1
    assert float(rec["lower"]) < 0.5 == float(rec["upper"])
    code, out, _ = run(capsys, "euler", "--set", "const", "--kind", "max", "--n", "2", "--bound", "100000")
    rec = json.loads(out)
    assert abs(float(rec["value"]) - 0.607927) < 1e-3
    assert float(rec["lower"]) <= 0.6079271018540267 <= float(rec["upper"])


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "sqfdensity", "density", "--family", "all", "--p", "2", "--n", "2",
         "--method", "engine", "--deterministic"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["p_max"] == "3/4"
