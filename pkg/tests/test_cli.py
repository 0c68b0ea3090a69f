import json
import subprocess
import sys

import pytest

from simplicial_ideals import MonomialIdeal, SimplicialSpec, symbolic_power
from simplicial_ideals.cli import main
from simplicial_ideals.verification import ClaimResult


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gens_symbolic_listing(capsys):
    code, out, _ = run_cli(capsys, "gens", "--n", "2", "--c", "2",
                           "--symbolic", "2")
    assert code == 0
    assert out == "x0^2*x1^2\nx0^2*x2^2\nx1^2*x2^2\nx0*x1*x2\n"


def test_gens_default_and_power(capsys):
    code, out, _ = run_cli(capsys, "gens", "--n", "3", "--c", "2")
    assert code == 0
    assert len(out.splitlines()) == 4
    code, out, _ = run_cli(capsys, "gens", "--n", "2", "--c", "1",
                           "--power", "3")
    assert code == 0
    assert out == "x0^3*x1^3*x2^3\n"


def test_gens_json_round_trips(capsys):
    code, out, _ = run_cli(capsys, "gens", "--n", "2", "--c", "2",
                           "--symbolic", "3", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["kind"] == "symbolic" and payload["exponent"] == 3
    rebuilt = MonomialIdeal.from_lists(payload["n"], payload["generators"])
    assert rebuilt == symbolic_power(SimplicialSpec(2, 2), 3)
    assert payload["count"] == len(rebuilt.gens)


def test_member_output(capsys):
    code, out, _ = run_cli(capsys, "member", "--n", "2", "--c", "2",
                           "--symbolic", "2", "x0*x1*x2")
    assert code == 0
    assert out.splitlines()[0] == "true"
    code, out, _ = run_cli(capsys, "member", "--n", "2", "--c", "2",
                           "--symbolic", "2", "x0^2*x1")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "false"
    assert "{x1, x2}" in lines[1] and "1 < 2" in lines[1]
    code, out, _ = run_cli(capsys, "member", "--n", "3", "--c", "2",
                           "--power", "2", "x0^2*x1^2*x2^2")
    assert code == 0
    assert out.splitlines()[0] == "true"


def test_member_json_detail(capsys):
    code, out, _ = run_cli(capsys, "member", "--n", "2", "--c", "2",
                           "--symbolic", "2", "x0^2*x1", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["member"] is False
    assert payload["detail"] == {"subset": [1, 2], "subset_sum": 1,
                                 "required": 2}
    assert payload["query"]["monomial"] == "x0^2*x1"


def test_containment_output(capsys):
    code, out, _ = run_cli(capsys, "containment", "--n", "3", "--c", "2",
                           "--m", "3", "--r", "2", "--oracle")
    assert code == 0
    assert out == ("query: I^(3)(3,2) in I(3,2)^2\n"
                   "fast: true\noracle: true\nagree: true\n")
    code, out, _ = run_cli(capsys, "containment", "--n", "2", "--c", "2",
                           "--m", "2", "--r", "2")
    assert code == 0  # a false verdict is still a successful query
    assert "fast: false" in out and "oracle" not in out


def test_containment_sym_counterexample(capsys):
    code, out, _ = run_cli(capsys, "containment-sym", "--n", "3", "--c", "2",
                           "--d", "3", "--m", "3", "--s", "5", "--oracle")
    assert code == 0  # disagreement is expected: the fast path is one-sided
    assert "fast: false" in out
    assert "oracle: true" in out
    assert "agree: false" in out


def test_resurgence_output(capsys):
    code, out, _ = run_cli(capsys, "resurgence", "--n", "2", "--c", "2")
    assert code == 0
    assert out == "rho(I(2,2)) = 4/3\n"
    code, out, _ = run_cli(capsys, "resurgence", "--n", "3", "--c", "1")
    assert out == "rho(I(3,1)) = 1\n"
    code, out, _ = run_cli(capsys, "resurgence", "--n", "2", "--c", "2",
                           "--witnesses", "5", "--box", "12", "12")
    assert code == 0
    assert "k=5  m=10  r=8  ratio=5/4" in out
    assert "sup 5/4 at m=10, r=8" in out


def test_resurgence_json(capsys):
    code, out, _ = run_cli(capsys, "resurgence", "--n", "2", "--c", "2",
                           "--witnesses", "5", "--box", "12", "12",
                           "--format", "json")
    payload = json.loads(out)
    assert payload["rho"] == "4/3"
    assert payload["witnesses"][-1] == [5, 10, 8, "5/4"]
    assert payload["empirical_sup"] == "5/4"
    assert payload["empirical_argmax"] == [10, 8]


def test_verify_text(capsys):
    code, out, _ = run_cli(capsys, "verify", "triangle")
    assert code == 0
    lines = out.splitlines()
    assert all(line.startswith("PASS") for line in lines[:-1])
    assert lines[-1].endswith("claims passed")


def test_verify_json_deterministic(capsys):
    code, first, _ = run_cli(capsys, "verify", "triangle", "--format", "json")
    assert code == 0
    code, second, _ = run_cli(capsys, "verify", "triangle", "--format", "json")
    assert first == second
    payload = json.loads(first)
    assert payload["failed"] == 0
    assert payload["scope"] == "triangle"
    assert all("wall_time_ms" not in claim for claim in payload["claims"])


def test_verify_report_file(tmp_path, capsys):
    report = tmp_path / "report.json"
    code, out, _ = run_cli(capsys, "verify", "triangle",
                           "--report", str(report))
    assert code == 0
    assert f"report written to {report}" in out
    payload = json.loads(report.read_text())
    assert payload["passed"] == len(payload["claims"])


def test_verify_failing_claim_exits_one(capsys, monkeypatch):
    failing = ClaimResult(
        claim_id="demo/failing", statement="demo", params_range="m <= 1",
        status="fail", counterexample={"m": 1}, detail=None, wall_time_ms=0.0)
    monkeypatch.setattr("simplicial_ideals.cli.run_verification",
                        lambda scope, deep=False: [failing])
    code, out, _ = run_cli(capsys, "verify", "all")
    assert code == 1
    assert "FAIL  demo/failing" in out


def test_usage_errors_exit_two(capsys):
    code, _, err = run_cli(capsys, "gens", "--n", "2", "--c", "5")
    assert code == 2 and "c=5" in err
    code, _, err = run_cli(capsys, "member", "--n", "2", "--c", "2",
                           "--symbolic", "2", "x9")
    assert code == 2 and "x9" in err
    code, _, err = run_cli(capsys, "gens", "--n", "2", "--c", "2",
                           "--symbolic", "0")
    assert code == 2


def test_budget_errors_exit_three(capsys):
    code, _, err = run_cli(capsys, "containment", "--n", "6", "--c", "2",
                           "--m", "3", "--r", "2", "--oracle")
    assert code == 3 and "oracle_n_cap" in err
    code, _, err = run_cli(capsys, "gens", "--n", "4", "--c", "2",
                           "--symbolic", "6", "--max-candidates", "5")
    assert code == 3
    code, _, err = run_cli(capsys, "resurgence", "--n", "2", "--c", "2",
                           "--box", "9999", "9999")
    assert code == 3


def test_env_and_flag_precedence(capsys, monkeypatch):
    monkeypatch.setenv("SIDEAL_FORMAT", "json")
    code, out, _ = run_cli(capsys, "resurgence", "--n", "2", "--c", "2")
    assert json.loads(out)["rho"] == "4/3"
    code, out, _ = run_cli(capsys, "resurgence", "--n", "2", "--c", "2",
                           "--format", "text")
    assert out == "rho(I(2,2)) = 4/3\n"


def test_config_file_flag(tmp_path, capsys):
    conf = tmp_path / "sideal.conf"
    conf.write_text("format = json\n")
    code, out, _ = run_cli(capsys, "resurgence", "--n", "2", "--c", "2",
                           "--config", str(conf))
    assert code == 0
    assert json.loads(out)["rho"] == "4/3"
    code, _, err = run_cli(capsys, "resurgence", "--n", "2", "--c", "2",
                           "--config", str(tmp_path / "missing.conf"))
    assert code == 2


def test_oracle_cap_can_be_raised_via_env(capsys, monkeypatch):
    monkeypatch.setenv("SIDEAL_ORACLE_N_CAP", "6")
    code, out, _ = run_cli(capsys, "containment", "--n", "6", "--c", "2",
                           "--m", "2", "--r", "2", "--oracle")
    assert code == 0
    assert "agree: true" in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "simplicial_ideals",
         "gens", "--n", "2", "--c", "2"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == "x0*x1\nx0*x2\nx1*x2\n"


def test_missing_subcommand_exits_two():
    proc = subprocess.run(
        [sys.executable, "-m", "simplicial_ideals"],
        capture_output=True, text=True)
    assert proc.returncode == 2
