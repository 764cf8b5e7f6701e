import json
import subprocess
import sys

import pytest


def run_cli(*args, expect=0):
    proc = subprocess.run(
        [sys.executable, "-m", "rootmult", *args],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == expect, (proc.returncode, proc.stderr)
    return proc


def test_a2_json_three_rows():
    proc = run_cli("--preset", "a2", "--height", "10", "--format", "json", "--quiet")
    rows = [json.loads(line) for line in proc.stdout.splitlines()]
    assert len(rows) == 3
    assert all(row["mult"] == 1 and row["kind"] == "real" for row in rows)


def test_affine_csv_with_oracle_check():
    proc = run_cli(
        "--preset", "affine-a1", "--height", "4", "--format", "csv", "--oracle-check"
    )
    lines = proc.stdout.splitlines()
    assert lines[0] == "coords,height,norm,c,mult,kind"
    assert len(lines) == 1 + 6
    assert "oracle check: all values agree" in proc.stderr


def test_matrix_file_roundtrip(tmp_path):
    path = tmp_path / "m.json"
    path.write_text("[[2,-3],[-3,2]]")
    proc = run_cli("--matrix", str(path), "--height", "5", "--quiet")
    preset = run_cli("--preset", "hyp-2-3", "--height", "5", "--quiet")
    assert proc.stdout == preset.stdout


def test_invalid_gcm_exits_3(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("[[2,-1],[0,2]]")
    run_cli("--matrix", str(path), "--height", "3", "--quiet", expect=3)


def test_unreadable_matrix_exits_2(tmp_path):
    path = tmp_path / "junk.json"
    path.write_text("not json at all")
    run_cli("--matrix", str(path), "--height", "3", "--quiet", expect=2)
    run_cli("--matrix", str(tmp_path / "missing.json"), "--height", "3",
            "--quiet", expect=2)


def test_not_symmetrizable_exits_3(tmp_path):
    path = tmp_path / "cycle.json"
    path.write_text("[[2,-1,-1],[-2,2,-1],[-1,-2,2]]")
    run_cli("--matrix", str(path), "--height", "3", "--quiet", expect=3)


def test_bad_height_exits_2():
    run_cli("--preset", "a2", "--height", "0", "--quiet", expect=2)


def test_unknown_preset_exits_2():
    run_cli("--preset", "nope", "--height", "3", "--quiet", expect=2)


def test_oracle_check_refused_beyond_bounds():
    run_cli("--preset", "e10", "--height", "8", "--oracle-check", "--quiet", expect=2)
    run_cli("--preset", "a2", "--height", "16", "--oracle-check", "--quiet", expect=2)
    # --force-oracle overrides the refusal
    run_cli("--preset", "a2", "--height", "16", "--oracle-check", "--force-oracle",
            "--quiet")


def test_hilbert_basis_dump():
    proc = run_cli("--preset", "hyp-2-3", "--height", "4", "--hilbert-basis",
                   "--quiet")
    first = proc.stdout.splitlines()[0]
    assert json.loads(first) == [[1, 1], [2, 3], [3, 2]]


def test_metrics_report_appended():
    proc = run_cli("--preset", "hyp-2-3", "--height", "8", "--metrics", "--quiet")
    last = proc.stdout.splitlines()[-1]
    report = json.loads(last)
    assert report["k_naive_closed"] == 1192  # 4 * (C(11,4) - 32)
    assert report["k_ascent"] >= 1
    assert set(report["phases"]) <= {"pingpong", "peterson-sum"}


def test_out_file_and_stdout_agree(tmp_path):
    out = tmp_path / "table.csv"
    run_cli("--preset", "affine-a1", "--height", "6", "--out", str(out), "--quiet")
    direct = run_cli("--preset", "affine-a1", "--height", "6", "--quiet")
    assert out.read_text() == direct.stdout


def test_workers_flag_changes_nothing():
    base = run_cli("--preset", "hyp-2-3", "--height", "12", "--metrics", "--quiet")
    threaded = run_cli("--preset", "hyp-2-3", "--height", "12", "--metrics",
                       "--quiet", "--workers", "3")
    assert base.stdout == threaded.stdout


def test_byte_identical_reruns():
    args = ("--preset", "hyp-2-3", "--height", "14", "--format", "json",
            "--hilbert-basis", "--metrics", "--quiet")
    first = run_cli(*args)
    second = run_cli(*args)
    assert first.stdout == second.stdout
    assert first.stdout.encode() == second.stdout.encode()


def test_e11_hilbert_basis_out_of_bounds_exits_1():
    run_cli("--preset", "e11", "--height", "5", "--quiet", expect=1)
