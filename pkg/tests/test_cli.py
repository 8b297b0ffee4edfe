"""Command line interface: outputs, formats, and exit codes."""

from __future__ import annotations

import json
import shutil
import subprocess
import sys

import pytest

from ffrat import counting
from ffrat.cli import EXIT_BUDGET, EXIT_FAILED, EXIT_OK, EXIT_USAGE, build_parser, main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -- count ----------------------------------------------------------------------


def test_count_rational(capsys):
    code, out, _ = run_cli(capsys, "count", "--q", "3", "--n", "3")
    assert code == EXIT_OK
    assert out == "7\n"


def test_count_defaults_to_rational(capsys):
    code, out, _ = run_cli(capsys, "count", "--q", "2", "--n", "3")
    assert code == EXIT_OK
    assert out == "4\n"


def test_count_large_cell(capsys):
    code, out, _ = run_cli(capsys, "count", "--q", "5", "--n", "4")
    assert code == EXIT_OK
    assert out == "167\n"


def test_count_poly(capsys):
    code, out, _ = run_cli(capsys, "count", "--kind", "poly", "--q", "3", "--n", "3")
    assert code == EXIT_OK
    assert out == "4\n"


@pytest.mark.parametrize("method", ["formula", "burnside", "orbit"])
def test_count_methods_agree(capsys, method):
    code, out, _ = run_cli(capsys, "count", "--q", "3", "--n", "2",
                           "--method", method)
    assert code == EXIT_OK
    assert out == "2\n"


def test_count_rejects_non_prime_power(capsys):
    code, _, err = run_cli(capsys, "count", "--q", "6", "--n", "2")
    assert code == EXIT_USAGE
    assert "error:" in err


def test_count_rejects_degree_zero(capsys):
    code, _, err = run_cli(capsys, "count", "--q", "2", "--n", "0")
    assert code == EXIT_USAGE
    assert "error:" in err


def test_count_rejects_multiple_q(capsys):
    code, _, err = run_cli(capsys, "count", "--q", "2,3", "--n", "2")
    assert code == EXIT_USAGE
    assert "error:" in err


def test_count_budget_exceeded(capsys):
    code, _, err = run_cli(capsys, "count", "--q", "3", "--n", "4",
                           "--method", "orbit", "--budget", "10")
    assert code == EXIT_BUDGET
    assert "error:" in err


def test_missing_required_argument(capsys):
    code, _, _ = run_cli(capsys, "count", "--n", "2")
    assert code == EXIT_USAGE


def test_unknown_subcommand(capsys):
    code, _, _ = run_cli(capsys, "recount")
    assert code == EXIT_USAGE


# -- table ----------------------------------------------------------------------


def test_table_csv_grid(capsys):
    code, out, _ = run_cli(capsys, "table", "--q", "2..5", "--n", "1..3")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "q,n,kind,count"
    assert lines[1:] == [
        "2,1,rational,1", "2,2,rational,2", "2,3,rational,4",
        "3,1,rational,1", "3,2,rational,2", "3,3,rational,7",
        "4,1,rational,1", "4,2,rational,2", "4,3,rational,10",
        "5,1,rational,1", "5,2,rational,2", "5,3,rational,10",
    ]


def test_table_accepts_mixed_lists_and_ranges(capsys):
    code, out, _ = run_cli(capsys, "table", "--q", "3,2..3,2", "--n", "1")
    assert code == EXIT_OK
    assert out.splitlines()[1:] == ["2,1,rational,1", "3,1,rational,1"]


def test_table_json_round_trip(capsys):
    code, out, _ = run_cli(capsys, "table", "--q", "2", "--n", "1..2",
                           "--format", "json")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload == [
        {"q": 2, "n": 1, "kind": "rational", "count": "1"},
        {"q": 2, "n": 2, "kind": "rational", "count": "2"},
    ]
    assert out == json.dumps(payload, indent=2) + "\n"


def test_table_text_format(capsys):
    code, out, _ = run_cli(capsys, "table", "--q", "2", "--n", "3",
                           "--format", "text")
    assert code == EXIT_OK
    line = out.splitlines()[0]
    assert line.startswith("q=2")
    assert "n=3" in line and "rational" in line and line.rstrip().endswith("4")


def test_table_poly_methods_agree_through_cli(capsys):
    base = run_cli(capsys, "table", "--kind", "poly", "--q", "2,3", "--n", "1..4")
    orbit = run_cli(capsys, "table", "--kind", "poly", "--q", "2,3", "--n", "1..4",
                    "--method", "orbit")
    assert base[0] == orbit[0] == EXIT_OK
    assert base[1] == orbit[1]


def test_table_rejects_bad_ranges(capsys):
    assert run_cli(capsys, "table", "--q", "5..2", "--n", "1")[0] == EXIT_USAGE
    assert run_cli(capsys, "table", "--q", ",", "--n", "1")[0] == EXIT_USAGE
    assert run_cli(capsys, "table", "--q", "2", "--n", "x")[0] == EXIT_USAGE
    assert run_cli(capsys, "table", "--q", "2,6", "--n", "1")[0] == EXIT_USAGE
    assert run_cli(capsys, "table", "--q", "2", "--n", "0..2")[0] == EXIT_USAGE


# -- verify ---------------------------------------------------------------------


def test_verify_report_shape(capsys):
    code, out, _ = run_cli(capsys, "verify", "--q", "2", "--n", "1,2",
                           "--kinds", "frakN,frakM")
    assert code == EXIT_OK
    report = json.loads(out)
    assert set(report) == {"checks", "summary"}
    assert report["summary"] == {"total": 12, "failed": 0, "skipped": 0}
    for entry in report["checks"]:
        assert list(entry) == ["name", "q", "n", "expected", "actual",
                               "pass", "elapsed_ms"]
        assert entry["pass"] is True
        assert isinstance(entry["expected"], str)
        assert isinstance(entry["actual"], str)


def test_verify_defaults_pin_the_standard_grid():
    args = build_parser().parse_args(["verify"])
    assert args.q == "2,3,4,5"
    assert args.n == "1,2,3"
    assert args.kinds == "fix-formulas,frakN,frakM,appendix-lemmas"
    assert args.strict is False


def test_verify_jobs_default_comes_from_env(monkeypatch):
    monkeypatch.setenv("FFRAT_JOBS", "3")
    assert build_parser().parse_args(["verify"]).jobs == 3


def test_verify_out_file(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run_cli(capsys, "verify", "--q", "2", "--n", "1",
                           "--kinds", "frakN", "--out", str(target))
    assert code == EXIT_OK
    assert out == "3 checks, 0 failed, 0 cells skipped\n"
    text = target.read_text()
    assert text.endswith("\n")
    assert json.loads(text)["summary"]["total"] == 3


def test_verify_skipped_cells_are_not_failures(capsys):
    code, out, _ = run_cli(capsys, "verify", "--q", "3", "--n", "3",
                           "--kinds", "frakN", "--budget", "10")
    assert code == EXIT_OK
    assert json.loads(out)["summary"] == {"total": 0, "failed": 0, "skipped": 1}


def test_verify_strict_turns_skips_into_exit_3(capsys):
    code, _, _ = run_cli(capsys, "verify", "--q", "3", "--n", "3",
                         "--kinds", "frakN", "--strict", "--budget", "10")
    assert code == EXIT_BUDGET


def test_verify_failure_exit_code(capsys, monkeypatch):
    monkeypatch.setattr(counting, "count_rational_classes", lambda q, n: 999)
    code, out, _ = run_cli(capsys, "verify", "--q", "2", "--n", "1",
                           "--kinds", "frakN")
    assert code == EXIT_FAILED
    report = json.loads(out)
    assert report["summary"]["failed"] == 3
    assert all(entry["expected"] == "999" for entry in report["checks"])


def test_verify_rejects_unknown_kind(capsys):
    code, _, err = run_cli(capsys, "verify", "--kinds", "burnside")
    assert code == EXIT_USAGE
    assert "error:" in err


# -- classify -------------------------------------------------------------------


def test_classify_poly_text(capsys):
    code, out, _ = run_cli(capsys, "classify", "--kind", "poly", "--q", "3", "--n", "3")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "X^3  orbit_size=1 [X^3]"
    assert len(lines) == 4
    assert all("orbit_size=" in line for line in lines)


def test_classify_defaults_to_poly(capsys):
    code, out, _ = run_cli(capsys, "classify", "--q", "2", "--n", "2")
    assert code == EXIT_OK
    assert out.splitlines() == ["X^2  orbit_size=1 [X^2]",
                                "X^2+X  orbit_size=1 [X^2+X]"]


def test_classify_poly_json(capsys):
    code, out, _ = run_cli(capsys, "classify", "--kind", "poly", "--q", "3",
                           "--n", "3", "--format", "json")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert [entry["poly"] for entry in payload] == ["X^3", "X^3+X", "X^3+2*X",
                                                    "X^3+X^2"]
    assert sum(int(entry["orbit_size"]) for entry in payload) == 9
    for entry in payload:
        assert list(entry) == ["poly", "coeffs", "orbit_size", "family"]
        assert entry["family"] is not None


def test_classify_rational_degree_one(capsys):
    code, out, _ = run_cli(capsys, "classify", "--kind", "rational",
                           "--q", "2", "--n", "1")
    assert code == EXIT_OK
    assert out == "X\n"


def test_classify_rational_degree_two(capsys):
    code, out, _ = run_cli(capsys, "classify", "--kind", "rational",
                           "--q", "3", "--n", "2")
    assert code == EXIT_OK
    assert out.splitlines() == ["X^2", "(X^2+2)/X"]


def test_classify_rational_degree_two_json(capsys):
    code, out, _ = run_cli(capsys, "classify", "--kind", "rational",
                           "--q", "3", "--n", "2", "--format", "json")
    assert code == EXIT_OK
    assert json.loads(out) == [
        {"map": "X^2", "num_coeffs": [0, 0, 1], "den_coeffs": [1]},
        {"map": "(X^2+2)/X", "num_coeffs": [2, 0, 1], "den_coeffs": [0, 1]},
    ]


def test_classify_rational_degree_three_is_out_of_scope(capsys):
    code, _, err = run_cli(capsys, "classify", "--kind", "rational",
                           "--q", "2", "--n", "3")
    assert code == EXIT_USAGE
    assert "no complete classification" in err
    assert "degree 3" in err


def test_classify_rejects_bad_input(capsys):
    assert run_cli(capsys, "classify", "--q", "6", "--n", "2")[0] == EXIT_USAGE
    assert run_cli(capsys, "classify", "--q", "2", "--n", "0")[0] == EXIT_USAGE
    code, _, _ = run_cli(capsys, "classify", "--kind", "poly", "--q", "5",
                         "--n", "6", "--budget", "100")
    assert code == EXIT_BUDGET


# -- entry points -----------------------------------------------------------------


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "ffrat.cli",
                           "count", "--q", "2", "--n", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == "2\n"


def test_console_script_installed():
    assert shutil.which("ffrat") is not None
