import csv
import io
import json
import subprocess
import sys

import pytest

from coxlab.cli import dumps, main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    return code, json.loads(out), out


def test_verify_finite(capsys):
    code, out, _ = run(capsys, "verify", "--family", "a", "--n", "4", "--max-length", "6")
    assert code == 0
    assert out.rstrip().endswith("PASS")


def test_verify_degenerate_notes_uniformity(capsys):
    code, report, _ = run_json(capsys, "verify", "--family", "affa", "--n", "2", "--max-length", "12")
    assert code == 0
    assert report["note"] == "all predicates uniformly true"
    assert report["isomorphism"]["passed"]
    assert report["config"]["family"] == "affa" and report["config"]["max_length"] == 12


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--family", "x", "--n", "2"],
        ["verify", "--family", "a", "--n", "0"],
        ["verify", "--family", "affa", "--n", "3"],
        ["verify", "--family", "a", "--n", "3", "--max-length", "0"],
        ["inspect", "--family", "b", "--n", "2", "--window", "1,1"],
        ["inspect", "--family", "b", "--n", "2"],
        ["inspect", "--family", "b", "--n", "2", "--word", "0", "2"],
        ["roots", "--family", "a", "--n", "3", "--variant", "long-zero"],
        ["enumerate", "--family", "a", "--n", "6", "--budget", "10"],
        ["frobnicate"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_enumerate_catalan_and_central_binomial(capsys):
    code, report, _ = run_json(capsys, "enumerate", "--family", "a", "--n", "5")
    assert code == 0 and report["avoiders_at_q1"] == 42
    assert report["recurrence"]["passed"]
    code, report, _ = run_json(capsys, "enumerate", "--family", "b", "--n", "3")
    assert code == 0 and report["avoiders_at_q1"] == 20 and not report["truncated"]


def test_enumerate_affine_csv(capsys):
    code, out, _ = run(capsys, "enumerate", "--family", "affc", "--n", "2", "--max-length", "8", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [int(r["length"]) for r in rows] == list(range(9))
    assert [int(r["count"]) for r in rows] == [1, 3, 5, 8, 11, 13, 16, 19, 21]
    code, report, _ = run_json(capsys, "enumerate", "--family", "affc", "--n", "2", "--max-length", "8")
    assert report["truncated"] and "recurrence" not in report


def test_inspect_window_with_negatives(capsys):
    code, report, _ = run_json(capsys, "inspect", "--family", "b", "--n", "2", "--window", "-1,-2")
    assert code == 0
    assert (report["length"], report["disarray"], report["gap"]) == (4, 6, 1)
    w = report["witness_321"]
    assert (w["i"], w["j"], w["k"]) == (-1, 1, 2)
    assert report["reduced_word_count"] == 2


def test_inspect_word(capsys):
    code, report, _ = run_json(capsys, "inspect", "--family", "a", "--n", "3", "--word", "1", "2", "1")
    assert code == 0
    assert report["length"] == 3 and report["half_disarray"] == 2 and not report["tight"]
    assert report["window"] == "3,2,1"


def test_inspect_identity(capsys):
    code, report, _ = run_json(capsys, "inspect", "--family", "a", "--n", "2", "--window", "1,2")
    assert code == 0
    assert report["tight"] and report["condition_b"] and report["condition_bprime"]
    assert report["witness_321"] is None and report["length"] == 0


@pytest.mark.parametrize("family,n", [("affa", 3), ("affc", 2)])
def test_roots_check_dis(capsys, family, n):
    code, report, _ = run_json(capsys, "roots", "--family", family, "--n", str(n), "--max-height", "8", "--check-dis")
    assert code == 0 and report["mismatches"] == []


def test_roots_wrong_variant_reports_mismatches(capsys):
    code, report, _ = run_json(capsys, "roots", "--family", "b", "--n", "2", "--variant", "long-zero", "--check-dis")
    assert code == 1
    assert len(report["mismatches"]) > 0


def test_roots_cost_tight_and_cost(capsys):
    code, report, _ = run_json(
        capsys, "roots", "--family", "b", "--n", "2", "--cost-tight", "--cost-of", "-1,-2"
    )
    assert code == 0
    assert report["cost_tight"]["passed"]
    assert report["min_height_cost"] == {"window": "-1,-2", "cost": 3}


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--family", "b", "--n", "3"],
        ["enumerate", "--family", "affa", "--n", "3", "--max-length", "5"],
        ["inspect", "--family", "affc", "--n", "2", "--word", "0", "1", "2"],
        ["roots", "--family", "affc", "--n", "2", "--max-height", "6", "--check-dis"],
    ],
)
def test_json_round_trip_is_byte_identical(capsys, argv):
    _, report, raw = run_json(capsys, *argv)
    assert dumps(report) == raw
    # and a second run produces the same bytes
    _, _, again = run_json(capsys, *argv)
    assert again == raw


def test_cost_of_word(capsys):
    code, report, _ = run_json(capsys, "roots", "--family", "b", "--n", "2", "--cost-of-word", "0", "1", "0")
    assert code == 0
    assert report["min_height_cost"] == {"window": "-2,-1", "cost": 3}


def test_out_file(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, "verify", "--family", "b", "--n", "2", "--format", "json", "--out", str(target))
    assert code == 0 and out == ""
    report = json.loads(target.read_text())
    assert report["passed"] and report["config"]["out"] == str(target)


def test_formats_agree_on_exit_code(capsys):
    codes = {
        run(capsys, "roots", "--family", "b", "--n", "3", "--variant", "long-zero", "--check-dis", "--format", fmt)[0]
        for fmt in ("json", "csv", "text")
    }
    assert codes == {1}


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "coxlab", "inspect", "--family", "b", "--n", "2", "--window", "-1,-2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "length: 4" in proc.stdout
