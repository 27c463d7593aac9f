"""Command line behavior: outputs, determinism, and exit codes."""

import json
import os
import subprocess
import sys

import pytest

from fstirling.cli import main

DATA = os.path.join(os.path.dirname(__file__), "data")
TABLE_ARG = f"table:{os.path.join(DATA, 'table12.json')}"


def run_cli(args, capsys):
    code = main(args)
    out, err = capsys.readouterr()
    return code, out, err


def test_triangle_csv(capsys):
    code, out, err = run_cli(
        ["triangle", "--f", "linear:1,0", "--t", "1", "--rows", "4"], capsys
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,k,entry"
    assert "4,2,11" in out


def test_triangle_json_round_trips(capsys):
    args = ["triangle", "--f", "linear:2,1", "--t", "3/2", "--rows", "5",
            "--format", "json"]
    code, out, _ = run_cli(args, capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["f"] == "linear:2,1"
    assert len(payload["rows"]) == 6
    # determinism: identical output on a second run
    code2, out2, _ = run_cli(args, capsys)
    assert out2 == out


def test_second_kind_triangle(capsys):
    code, out, _ = run_cli(
        ["triangle", "--kind", "s2", "--f", "linear:1,0", "--t", "1",
         "--rows", "3", "--format", "json"], capsys
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["rows"][1][1] == "1"


def test_harmonic_value_and_decimal(capsys):
    base = ["harmonic", "--f", "linear:1,0", "--t", "1", "--p", "2", "--n", "3"]
    for method in ("direct", "ftilde", "roots"):
        code, out, _ = run_cli(base + ["--method", method], capsys)
        assert code == 0
        assert out.strip() == "49/36"
    code, out, _ = run_cli(base + ["--decimal", "6"], capsys)
    assert out.strip() == "1.361111"


def test_convpoly_table(capsys):
    code, out, _ = run_cli(
        ["convpoly", "--f", "linear:1,0", "--t", "1", "--variant", "sigma",
         "--n-max", "2", "--x-max", "6"], capsys
    )
    assert code == 0
    assert "1,2,1/2" in out  # sigma_1(x) = 1/2


def test_eulersum(capsys):
    code, out, _ = run_cli(
        ["eulersum", "--f", "linear:1,0", "--r", "2", "--N", "2",
         "--mode", "harmonic_over_f"], capsys
    )
    assert code == 0
    assert out.strip() == "21/16"


def test_verify_single_suite_exit_zero(capsys):
    code, out, _ = run_cli(
        ["verify", "--suite", "s1-oracle", "--f", "linear:1,0", "--t", "1"], capsys
    )
    assert code == 0
    assert "s1-oracle" in out


def test_verify_report_file(tmp_path, capsys):
    report = tmp_path / "report.json"
    code, _, _ = run_cli(
        ["verify", "--suite", "wf", "--f", "linear:2,1", "--t", "3/2",
         "--output", str(report)], capsys
    )
    assert code == 0
    payload = json.loads(report.read_text())
    assert payload[0]["identity"] == "s1-from-wf"
    assert payload[0]["pass"] is True
    assert {"indices", "lhs", "rhs", "residual", "pass"} <= set(payload[0]["cells"][0])


def test_verify_prop1_exit_one(capsys):
    # the as-printed recurrence cells are documented failures
    code, out, _ = run_cli(
        ["verify", "--suite", "prop1", "--f", "linear:1,0", "--t", "1",
         "--max-n", "4"], capsys
    )
    assert code == 1
    assert "FAIL" in out


def test_usage_errors_exit_two(capsys):
    assert run_cli(["verify", "--suite", "no-such", "--f", "linear:1,0"], capsys)[0] == 2
    assert run_cli(["harmonic", "--f", "bogus", "--p", "2", "--n", "3"], capsys)[0] == 2
    assert run_cli(["harmonic", "--f", "linear:1,0", "--t", "zebra",
                    "--p", "2", "--n", "3"], capsys)[0] == 2
    # bivariate configuration: symbolic f with symbolic t
    assert run_cli(["triangle", "--f", "qpow:1", "--t", "symbolic",
                    "--rows", "3"], capsys)[0] == 2


def test_max_n_environment_override(capsys, monkeypatch):
    monkeypatch.setenv("FSTIRLING_MAX_N", "3")
    code, out, _ = run_cli(
        ["verify", "--suite", "harmonic-routes", "--f", TABLE_ARG, "--t", "1",
         "--max-n", "9"], capsys
    )
    assert code == 0
    # 4 n-values * (5 ftilde + 3 roots + 4 subst) cells
    assert "(48 cells)" in out


def test_entry_point_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "fstirling.cli", "harmonic", "--f", "linear:1,0",
         "--t", "1", "--p", "2", "--n", "3"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "49/36"
