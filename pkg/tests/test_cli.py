"""End to end checks for the JSON job command line interface.

Each test drives monograde.cli.main in process with an in memory job,
captures the one line JSON report, and compares frozen result objects.
One test goes through the installed console script to cover the
packaging wiring, and one replays the same job to pin down byte
identical output.
"""

import io
import json
import shutil
import subprocess

import jsonschema
import pytest

from monograde import __version__
from monograde.cli import (
    EXIT_BUDGET,
    EXIT_INPUT,
    EXIT_MATH,
    EXIT_OK,
    _schema,
    main,
)

QUADRANT = '{"command":"canonical","rays":[[1,0],[0,1]]}'
DEG3 = '{"command":"class-group","rays":[[1,0],[1,3]]}'


def run_cli(monkeypatch, capsys, argv, text, env_budget=None):
    """Run main() on the given stdin text and return (code, stdout, stderr)."""
    monkeypatch.delenv("MONOGRADE_BUDGET", raising=False)
    if env_budget is not None:
        monkeypatch.setenv("MONOGRADE_BUDGET", env_budget)
    monkeypatch.setattr("sys.stdin", io.StringIO(text))
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def report_of(monkeypatch, capsys, argv, text):
    code, out, err = run_cli(monkeypatch, capsys, argv, text)
    assert code == EXIT_OK, err
    return json.loads(out)


def error_of(monkeypatch, capsys, argv, text, **kw):
    code, out, err = run_cli(monkeypatch, capsys, argv, text, **kw)
    assert out == ""
    payload = json.loads(err)
    assert payload["exit"] == code
    return code, payload["error"]


def test_shipped_schema_is_a_valid_draft_2020_12_schema():
    jsonschema.Draft202012Validator.check_schema(_schema())


def test_canonical_report_for_quadrant(monkeypatch, capsys):
    report = report_of(monkeypatch, capsys, ["canonical"], QUADRANT)
    assert report["result"] == {"h": [1, 1], "generators": [[1, 1]], "gorenstein": True}
    assert report["input"] == {"rays": [[1, 0], [0, 1]]}
    assert report["options"] == {"box": 4, "trunc": 8, "budget": 500000, "output": "json"}
    assert report["version"] == __version__


def test_class_group_report_for_degree_three_cone(monkeypatch, capsys):
    report = report_of(monkeypatch, capsys, ["class-group"], DEG3)
    assert report["result"] == {"invariant_factors": [3]}


def test_hilbert_basis_report_for_degree_three_cone(monkeypatch, capsys):
    job = '{"command":"hilbert-basis","rays":[[1,0],[1,3]]}'
    report = report_of(monkeypatch, capsys, ["hilbert-basis"], job)
    assert report["result"] == {
        "hilbert_basis": [[1, 0], [1, 1], [1, 2], [1, 3]],
        "unit_basis": [],
    }


def test_gorenstein_reports_certificate_or_null(monkeypatch, capsys):
    good = '{"command":"gorenstein","rays":[[1,0],[0,1]]}'
    report = report_of(monkeypatch, capsys, ["gorenstein"], good)
    assert report["result"] == {"gorenstein": True, "certificate": [1, 1]}
    bad = '{"command":"gorenstein","rays":[[1,0],[1,3]]}'
    report = report_of(monkeypatch, capsys, ["gorenstein"], bad)
    assert report["result"] == {"gorenstein": False, "certificate": None}


def test_normalize_report_flags_the_gap(monkeypatch, capsys):
    job = '{"command":"normalize","generators":[[2],[3]]}'
    report = report_of(monkeypatch, capsys, ["normalize"], job)
    assert report["result"] == {
        "rank": 1,
        "lattice_basis": [[1]],
        "normalized_generators": [[2], [3]],
        "is_normal": False,
        "witness": [1],
    }


def test_graded_hull_report(monkeypatch, capsys):
    job = '{"command":"graded-hull","vars":2,"grading":[[1],[1]],"ideal":["x1 + x2^2","x2"]}'
    report = report_of(monkeypatch, capsys, ["graded-hull"], job)
    assert report["result"] == {"hull": ["x2", "x1"]}


def test_analyze_prime_report(monkeypatch, capsys):
    job = '{"command":"analyze-prime","vars":2,"grading":[[1],[1]],"prime":["x1 + 1","x2"]}'
    report = report_of(monkeypatch, capsys, ["analyze-prime"], job)
    assert report["result"] == {
        "p_star": ["x2"],
        "graded": False,
        "dim_p": 2,
        "dim_p_star": 1,
        "tau": 1,
        "sigma": 1,
    }


def test_rejects_malformed_json(monkeypatch, capsys):
    code, message = error_of(monkeypatch, capsys, ["canonical"], '{"command":')
    assert code == EXIT_INPUT
    assert message.startswith("input is not valid JSON")


def test_schema_errors_point_at_the_offending_field(monkeypatch, capsys):
    job = '{"command":"canonical","rays":[[1,0],[1,"x"]]}'
    code, message = error_of(monkeypatch, capsys, ["canonical"], job)
    assert code == EXIT_INPUT
    assert message.startswith("$.rays[1][1]:")
    job = '{"command":"canonical","rays":[[1,0],[0,1]],"options":{"budget":0}}'
    code, message = error_of(monkeypatch, capsys, ["canonical"], job)
    assert code == EXIT_INPUT
    assert message.startswith("$.options.budget:")


def test_rejects_fields_of_other_commands(monkeypatch, capsys):
    job = '{"command":"canonical","rays":[[1,0],[0,1]],"ideal":["x1"]}'
    code, message = error_of(monkeypatch, capsys, ["canonical"], job)
    assert code == EXIT_INPUT
    assert message == "$.ideal: not a field of the 'canonical' command"


def test_rejects_ragged_vectors(monkeypatch, capsys):
    job = '{"command":"canonical","rays":[[1,0],[1]]}'
    code, message = error_of(monkeypatch, capsys, ["canonical"], job)
    assert code == EXIT_INPUT
    assert message == "rays[1]: expected 2 entries, got 1"


def test_rejects_unparsable_polynomials(monkeypatch, capsys):
    job = '{"command":"graded-hull","vars":2,"grading":[[1],[1]],"ideal":["x1 +"]}'
    code, message = error_of(monkeypatch, capsys, ["graded-hull"], job)
    assert code == EXIT_INPUT
    assert message.startswith("ideal[0]:")


def test_rejects_command_mismatch(monkeypatch, capsys):
    code, message = error_of(monkeypatch, capsys, ["canonical"], DEG3)
    assert code == EXIT_INPUT
    assert "'class-group'" in message and "'canonical'" in message


def test_exhausted_budget_exits_3(monkeypatch, capsys):
    job = (
        '{"command":"graded-hull","vars":2,"grading":[[1],[1]],'
        '"ideal":["x1^4 + x2^2 + x1","x1*x2 + x2"],"options":{"budget":1}}'
    )
    code, message = error_of(monkeypatch, capsys, ["graded-hull"], job)
    assert code == EXIT_BUDGET
    assert "budget" in message


def test_violated_precondition_exits_4(monkeypatch, capsys):
    job = '{"command":"canonical","generators":[[2],[3]]}'
    code, message = error_of(monkeypatch, capsys, ["canonical"], job)
    assert code == EXIT_MATH
    assert "saturation" in message


def test_repeated_runs_are_byte_identical(monkeypatch, capsys):
    outputs = set()
    for _ in range(3):
        code, out, err = run_cli(monkeypatch, capsys, ["canonical"], QUADRANT)
        assert code == EXIT_OK
        outputs.add(out)
    assert len(outputs) == 1
    assert outputs.pop().endswith("\n")


def test_budget_precedence_flag_over_options_over_env(monkeypatch, capsys):
    job = '{"command":"gorenstein","rays":[[1,0],[0,1]]}'
    code, out, _ = run_cli(monkeypatch, capsys, ["gorenstein"], job, env_budget="777")
    assert json.loads(out)["options"]["budget"] == 777
    job_opt = '{"command":"gorenstein","rays":[[1,0],[0,1]],"options":{"budget":888}}'
    code, out, _ = run_cli(monkeypatch, capsys, ["gorenstein"], job_opt, env_budget="777")
    assert json.loads(out)["options"]["budget"] == 888
    code, out, _ = run_cli(
        monkeypatch, capsys, ["gorenstein", "--budget", "999"], job_opt, env_budget="777"
    )
    assert json.loads(out)["options"]["budget"] == 999


def test_env_budget_must_be_an_integer(monkeypatch, capsys):
    job = '{"command":"gorenstein","rays":[[1,0],[0,1]]}'
    code, message = error_of(monkeypatch, capsys, ["gorenstein"], job, env_budget="oops")
    assert code == EXIT_INPUT
    assert message == "MONOGRADE_BUDGET: expected an integer"


def test_reads_job_from_input_file(monkeypatch, capsys, tmp_path):
    path = tmp_path / "job.json"
    path.write_text(QUADRANT, encoding="utf-8")
    report = report_of(monkeypatch, capsys, ["canonical", "--input", str(path)], "")
    assert report["result"]["generators"] == [[1, 1]]


def test_missing_input_file_exits_2(monkeypatch, capsys, tmp_path):
    path = tmp_path / "absent.json"
    code, message = error_of(monkeypatch, capsys, ["canonical", "--input", str(path)], "")
    assert code == EXIT_INPUT
    assert message.startswith("cannot read")


def test_console_script_matches_in_process_output(monkeypatch, capsys):
    exe = shutil.which("monograde")
    assert exe is not None, "console script not installed"
    proc = subprocess.run(
        [exe, "class-group"], input=DEG3, capture_output=True, text=True, timeout=60
    )
    assert proc.returncode == EXIT_OK
    _, out, _ = run_cli(monkeypatch, capsys, ["class-group"], DEG3)
    assert proc.stdout == out
