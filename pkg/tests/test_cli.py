import json
import os
import subprocess
import sys
from pathlib import Path

from qdelannoy.polyring import IntPoly
from qdelannoy.cli import main

SRC = Path(__file__).resolve().parent.parent / "src"


def run_cli(*args):
    env = dict(os.environ)
    env["PYTHONPATH"] = str(SRC) + os.pathsep + env.get("PYTHONPATH", "")
    return subprocess.run(
        [sys.executable, "-m", "qdelannoy", *args],
        capture_output=True,
        env=env,
    )


def test_compute_qdelannoy_text():
    result = run_cli("compute", "qdelannoy", "--h", "2", "--k", "2")
    assert result.returncode == 0
    assert result.stdout == b"1 + 2*q + 4*q^2 + 4*q^3 + 2*q^4\n"


def test_compute_missing_flag_is_usage_error():
    result = run_cli("compute", "qdelannoy", "--h", "2")
    assert result.returncode == 2


def test_unknown_subcommand_is_usage_error():
    result = run_cli("compute", "nonsense")
    assert result.returncode == 2


def test_compute_routes_agree():
    outputs = set()
    for route in ("def", "alt", "rec"):
        result = run_cli("compute", "qdelannoy", "--h", "3", "--k", "2", "--route", route)
        assert result.returncode == 0
        outputs.add(result.stdout)
    assert len(outputs) == 1


def test_compute_delannoy_and_cyclotomic():
    assert run_cli("compute", "delannoy", "--h", "3", "--k", "3").stdout == b"63\n"
    assert run_cli("compute", "cyclotomic", "--n", "6").stdout == b"1 - q + q^2\n"
    assert run_cli("compute", "qbinom", "--h", "4", "--k", "2").stdout == b"1 + q + 2*q^2 + q^3 + q^4\n"
    assert run_cli("compute", "sigma-poly", "--h", "1", "--k", "1").stdout == b"1 + 2*q\n"


def test_compute_json_round_trips():
    result = run_cli("compute", "qdelannoy", "--h", "2", "--k", "2", "--json")
    payload = json.loads(result.stdout)
    assert payload["route"] == "rec"
    poly = IntPoly.from_json_coeffs(payload["coeffs"])
    assert poly == IntPoly([1, 2, 4, 4, 2])


def test_compute_bad_value_exits_2():
    result = run_cli("compute", "cyclotomic", "--n", "0")
    assert result.returncode == 2
    assert b"error:" in result.stderr


def test_verify_thm2_passes():
    result = run_cli("verify", "thm2", "--max-n", "3", "--max-h", "3", "--max-k", "3")
    assert result.returncode == 0
    assert b"48 cases, 48 passed, 0 failed" in result.stdout


def test_verify_json_summary():
    result = run_cli("verify", "qlucas", "--max-n", "4", "--max-a", "2", "--max-c", "2", "--json")
    assert result.returncode == 0
    payload = json.loads(result.stdout)
    assert payload["failed"] == 0
    assert payload["total"] == sum(9 * n * n for n in range(1, 5))
    assert payload["failures"] == []


def test_verify_interp():
    result = run_cli("verify", "interp", "--max-h", "3", "--max-k", "3")
    assert result.returncode == 0


def test_orbits_audit_ok():
    result = run_cli("orbits", "audit", "--h", "1", "--k", "1", "--n", "2")
    assert result.returncode == 0
    assert b"violations: none" in result.stdout


def test_orbits_audit_json():
    result = run_cli("orbits", "audit", "--h", "0", "--k", "0", "--n", "2", "--json")
    payload = json.loads(result.stdout)
    assert payload["ok"] is True
    assert payload["total_paths"] == 13


def test_out_writes_file(tmp_path):
    target = tmp_path / "report.json"
    result = run_cli(
        "verify", "thm2", "--max-n", "2", "--max-h", "2", "--max-k", "2", "--json", "--out", str(target)
    )
    assert result.returncode == 0
    assert result.stdout == b""
    payload = json.loads(target.read_text())
    assert payload["failed"] == 0


def test_byte_identical_across_runs_and_jobs():
    base = ("verify", "thm2", "--max-n", "3", "--max-h", "2", "--max-k", "2", "--json")
    first = run_cli(*base, "--jobs", "1")
    second = run_cli(*base, "--jobs", "1")
    parallel = run_cli(*base, "--jobs", "2")
    assert first.stdout == second.stdout == parallel.stdout
    assert first.returncode == parallel.returncode == 0

    audit_run = ("orbits", "audit", "--h", "1", "--k", "0", "--n", "3")
    assert run_cli(*audit_run).stdout == run_cli(*audit_run).stdout


def test_main_callable_in_process(capsys):
    code = main(["compute", "qdelannoy", "--h", "1", "--k", "1"])
    assert code == 0
    assert capsys.readouterr().out == "1 + 2*q\n"


def test_audit_violations_exit_1(monkeypatch, capsys):
    import qdelannoy.cli as cli_module
    from qdelannoy.orbits import AuditReport

    broken = AuditReport(
        h=0,
        k=0,
        n=1,
        total_paths=3,
        class_counts={"Q1": 0, "Q2": 0, "Q3": 2, "Q4": 1},
        orbit_histograms={"Q1": {}, "Q2": {}, "Q3": {}, "Q4": {1: 1}},
        fixed_counts={"Q1": 0, "Q2": 0, "Q3": 2, "Q4": 1},
        sums={"S1": IntPoly(), "S2": IntPoly(), "S3": IntPoly([1, 1]), "S4": IntPoly([0, 1])},
        grand_total=IntPoly([1, 2]),
        violations=["synthetic violation"],
    )
    monkeypatch.setattr(cli_module, "audit", lambda frame: broken)
    code = main(["orbits", "audit", "--h", "0", "--k", "0", "--n", "1"])
    assert code == 1
    assert "VIOLATION synthetic violation" in capsys.readouterr().out
