"""Command-line surface: payload schemas, determinism, exit codes."""

import json
import math
import os
import subprocess
import sys

import pytest

from elliptic_bohr import cli
from elliptic_bohr.coefficients import InequalityEntry, InequalityReport
from elliptic_bohr.serialize import fmt_float, to_csv_text, to_json_text


def run_cli(capsys, argv):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_serializer_floats_round_trip():
    for x in (0.1, 1 / 3, 2.0**-52, -1.7e300, 0.205328678165046):
        assert float(fmt_float(x)) == x
    assert fmt_float(float("inf")) == "Infinity"
    assert fmt_float(float("-inf")) == "-Infinity"
    assert fmt_float(float("nan")) == "NaN"
    text = to_json_text({"a": [1.5, True, None], "b": {"c": "x"}})
    assert json.loads(text) == {"a": [1.5, True, None], "b": {"c": "x"}}
    csv_text = to_csv_text(("u", "v"), [(1, 0.5), (2, float("inf"))])
    assert csv_text.splitlines() == ["u,v", "1,0.5", "2,Infinity"]


def test_solve_payload_and_aliases(capsys):
    code, out, _ = run_cli(capsys, ["solve", "--kind", "real"])
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == "1"
    assert payload["kind"] == "real_coefficients"
    assert abs(payload["value"] - 0.205328678165046) <= 1e-9
    code, out, _ = run_cli(capsys, ["solve", "--kind", "general"])
    assert 0.19 < json.loads(out)["value"] < 0.20


def test_solve_coarse_tolerance(capsys):
    code, out, _ = run_cli(capsys, ["solve", "--kind", "real", "--tol", "1e-3"])
    assert code == 0
    assert abs(json.loads(out)["residual"]) <= 1e-3


def test_verify_success_and_determinism(capsys):
    argv = ["verify", "--R", "0.2", "--count", "5"]
    code, out1, _ = run_cli(capsys, argv)
    assert code == 0
    payload = json.loads(out1)
    assert payload["all_hold"] is True
    assert set(payload["families"]) == {
        "caratheodory",
        "modulus_coupling",
        "even_modulus",
        "weighted_pair",
        "real_part_recursion",
        "majorant",
    }
    for entry in payload["families"].values():
        assert entry["min_slack"] >= -1e-10
        assert entry["count"] == 5
    code, out2, _ = run_cli(capsys, argv)
    assert out1 == out2


def test_verify_worker_fanout_is_transparent():
    env = dict(os.environ, PYTHONHASHSEED="0")
    argv = [
        sys.executable,
        "-m",
        "elliptic_bohr.cli",
        "verify",
        "--R",
        "0.15",
        "--count",
        "6",
        "--families",
        "caratheodory",
        "majorant",
    ]
    single = subprocess.run(
        argv, capture_output=True, env=dict(env, ELLIPTIC_BOHR_THREADS="1")
    )
    pooled = subprocess.run(
        argv, capture_output=True, env=dict(env, ELLIPTIC_BOHR_THREADS="3")
    )
    assert single.returncode == 0 and pooled.returncode == 0
    assert single.stdout == pooled.stdout


def test_verify_regime_violation_exits_3(capsys):
    code, out, err = run_cli(
        capsys, ["verify", "--R", "0.3", "--families", "weighted_pair"]
    )
    assert code == 3
    assert out == ""
    assert "0.2053" in err


def test_verify_failure_exits_4(capsys, monkeypatch):
    def broken(_series):
        return InequalityReport(
            family="caratheodory",
            R=0.1,
            entries=(InequalityEntry(n=1, lhs=1.0, rhs=0.0),),
        )

    monkeypatch.setitem(cli.coeff.CHECK_FAMILIES, "caratheodory", broken)
    code, out, _ = run_cli(
        capsys, ["verify", "--R", "0.1", "--count", "2", "--families", "caratheodory"]
    )
    assert code == 4
    assert json.loads(out)["all_hold"] is False


def test_verify_envelope_family(capsys):
    code, out, _ = run_cli(
        capsys,
        ["verify", "--R", "0.2", "--count", "1", "--families", "envelope_derivatives"],
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["families"]["envelope_derivatives"]["count"] == 3


def test_verify_degenerate_disc(capsys):
    code, out, _ = run_cli(capsys, ["verify", "--R", "0.0", "--count", "3"])
    assert code == 0
    assert json.loads(out)["all_hold"] is True


def test_usage_errors_exit_2(capsys):
    for argv in (
        ["sweep", "--kind", "real", "--R-lo", "0.5", "--R-hi", "0.4"],
        ["verify", "--R", "1.5"],
        ["extremal", "--family", "phi1", "--R", "0.95"],
        ["solve", "--kind", "bogus"],
        ["verify", "--R", "0.1", "--tol", "-1"],
    ):
        with pytest.raises(SystemExit) as exc:
            cli.main(argv)
        assert exc.value.code == 2
        capsys.readouterr()


def test_sweep_rows_and_monotonicity(capsys):
    code, out, _ = run_cli(
        capsys,
        ["sweep", "--kind", "real", "--R-lo", "0.20", "--R-hi", "0.21", "--steps", "11"],
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "R,value"
    values = [tuple(map(float, line.split(","))) for line in lines[1:]]
    assert len(values) == 11
    assert all(a[1] < b[1] for a, b in zip(values, values[1:]))
    # the curve crosses 1 inside the scanned window
    assert values[0][1] < 1.0 < values[-1][1]


def test_extremal_trace_and_verdict(capsys, tmp_path):
    out_file = tmp_path / "trace.csv"
    code, out, _ = run_cli(
        capsys,
        [
            "extremal",
            "--family",
            "phi1",
            "--R",
            "0.21",
            "--k-max",
            "8",
            "--output",
            str(out_file),
        ],
    )
    assert code == 0
    verdict = json.loads(out)
    assert verdict["witnessed_failure"] is True
    assert verdict["kind"] == "real_coefficients"
    lines = out_file.read_text().splitlines()
    assert lines[0] == "k,r_k,re_zk,im_zk,sup_value,metric,alpha_or_beta,bohr_sum_normalized"
    assert len(lines) == 6  # header + k = 4..8
    code, out, _ = run_cli(
        capsys, ["extremal", "--family", "phi1", "--R", "0.19", "--k-max", "6"]
    )
    assert code == 0
    # without --output, stdout carries the CSV block followed by the JSON verdict
    csv_part, json_part = out.split("{", 1)
    assert csv_part.splitlines()[0].startswith("k,r_k")
    assert json.loads("{" + json_part)["witnessed_failure"] is False


def test_geometry_table(capsys):
    code, out, _ = run_cli(capsys, ["geometry"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "kind,rho,R,eccentricity"
    rows = {line.split(",")[0]: line.split(",")[1:] for line in lines[1:]}
    assert set(rows) == {"real_coefficients", "general", "reference_a", "reference_b"}
    solved_ratio = float(rows["general"][0])
    assert solved_ratio < 5.1284 < 5.1573
    for label in rows:
        rho, R, ecc = map(float, rows[label])
        assert math.isclose(rho * R, 1.0, rel_tol=1e-12)
        assert math.isclose(ecc, 2 * rho / (1 + rho * rho), rel_tol=1e-12)


def test_console_entry_point_exists():
    proc = subprocess.run(
        [sys.executable, "-m", "elliptic_bohr.cli", "--help"], capture_output=True
    )
    assert proc.returncode == 0
    assert b"solve" in proc.stdout and b"extremal" in proc.stdout
