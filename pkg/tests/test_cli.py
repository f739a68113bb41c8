"""End-to-end tests of the command line interface (main() called directly)."""

import json

from awalgebra import relcheck
from awalgebra.cli import main
from awalgebra.reporting import RelationReport


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_verify_small_run_passes(capsys):
    code, out, _ = run(
        capsys, "verify", "--nmax", "1", "--suite", "defining,prop1"
    )
    assert code == 0
    assert "VERDICT: PASS" in out
    assert "defining" in out and "prop1" in out


def test_verify_all_suites_at_nmax_2(capsys):
    code, out, _ = run(capsys, "verify", "--nmax", "2", "--suite", "all")
    assert code == 0
    assert "0 problems, 0 skipped" in out
    for name in ("prop2", "aw3-quadratic", "master", "independence"):
        assert name in out


def test_verify_report_schema(capsys, tmp_path):
    path = tmp_path / "report.json"
    code, _, _ = run(
        capsys,
        "verify", "--nmax", "2", "--suite", "prop1,master",
        "--report", str(path),
    )
    assert code == 0
    data = json.loads(path.read_text())
    assert data["format_version"] == 1
    assert data["params"] == {"q": "5/3", "k": [1, 2, 1, 3], "legs": 4, "nmax": 2}
    assert data["suites"] == ["prop1", "master"]
    assert data["summary"]["pass"] + data["summary"]["fail"] == len(data["checks"])
    assert data["summary"]["fail"] == 0
    assert set(data["timings_ms"]) == {"prop1", "master"}
    first = data["checks"][0]
    assert {"id", "kind", "status", "expected", "ok", "gating"} <= set(first)


def test_verify_all_expansion_skips_lower_rank(capsys, tmp_path):
    path = tmp_path / "report.json"
    code, out, _ = run(
        capsys,
        "verify", "--legs", "3", "--k", "1,2,1", "--nmax", "2",
        "--suite", "all", "--report", str(path),
    )
    assert code == 0
    data = json.loads(path.read_text())
    assert data["skipped_suites"] == {
        "prop2": "needs legs=4",
        "master": "needs legs=4",
        "independence": "needs legs=4",
    }
    assert data["summary"]["skipped"] == 3
    assert "skipped (needs legs=4)" in out


def test_verify_explicit_incompatible_suite_is_config_error(capsys):
    code, _, err = run(
        capsys,
        "verify", "--legs", "3", "--k", "1,2,1", "--nmax", "2",
        "--suite", "prop2",
    )
    assert code == 2
    assert "needs legs=4" in err


def test_verify_independence_needs_depth(capsys):
    code, _, err = run(
        capsys, "verify", "--nmax", "1", "--suite", "independence"
    )
    assert code == 2
    assert "nmax>=2" in err


def test_verify_rejects_bad_q(capsys):
    for bad in ("1/1", "0", "-1", "1/0", "2.5"):
        code, _, err = run(capsys, "verify", "--q", bad, "--nmax", "1")
        assert code == 2, bad
        assert err.startswith("error:")


def test_verify_rejects_mismatched_k(capsys):
    code, _, err = run(capsys, "verify", "--k", "1,2", "--nmax", "1")
    assert code == 2
    assert "weight label" in err
    code, _, err = run(capsys, "verify", "--k", "1,x,1,3", "--nmax", "1")
    assert code == 2
    assert "comma-separated" in err


def test_verify_rejects_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "--suite", "bogus", "--nmax", "1")
    assert code == 2
    assert "unknown suite" in err


def test_argparse_errors_exit_2(capsys):
    assert main([]) == 2
    capsys.readouterr()
    assert main(["verify", "--legs", "5"]) == 2
    capsys.readouterr()


def test_verify_gating_failure_exits_1(capsys, monkeypatch):
    broken = RelationReport(
        id="prop1/fake",
        kind="commutator",
        inputs={},
        status="fail",
        residual_summary={"nonzero_entries": 3, "sample": "[0,0] = 1"},
        expected="zero",
        gating=True,
    )
    monkeypatch.setattr(relcheck, "check_prop1", lambda reg: [broken])
    code, out, _ = run(capsys, "verify", "--nmax", "1", "--suite", "prop1")
    assert code == 1
    assert "VERDICT: FAIL" in out
    assert "FAIL prop1/fake" in out


def test_verify_unwritable_report_exits_3(capsys):
    code, _, err = run(
        capsys,
        "verify", "--nmax", "1", "--suite", "defining",
        "--report", "/nonexistent-dir/report.json",
    )
    assert code == 3
    assert err.startswith("error:")


def test_spectrum_interval_label(capsys):
    code, out, _ = run(capsys, "spectrum", "--op", "Q12", "--nmax", "2")
    assert code == 0
    assert "k_A = 3" in out
    assert out.count("ok") == 3  # weights 0, 1, 2


def test_spectrum_single_weight(capsys):
    code, out, _ = run(
        capsys, "spectrum", "--op", "Q1234", "--nmax", "2", "--weight", "1"
    )
    assert code == 0
    assert "weight 1" in out and "weight 0" not in out


def test_spectrum_rejects_non_interval_label(capsys):
    for bad in ("Q13", "IQ24", "Q5", "Q0", "junk"):
        code, _, err = run(capsys, "spectrum", "--op", bad, "--nmax", "1")
        assert code == 2, bad
        assert "not an interval Casimir label" in err


def test_spectrum_rejects_out_of_range_weight(capsys):
    code, _, err = run(
        capsys, "spectrum", "--op", "Q12", "--nmax", "2", "--weight", "5"
    )
    assert code == 2
    assert "outside" in err


def test_compass_stdout_and_file_agree(capsys, tmp_path):
    code, out, _ = run(capsys, "compass", "--nmax", "2")
    assert code == 0
    assert out.startswith("digraph compass {")
    path = tmp_path / "pentagon.dot"
    code, _, _ = run(capsys, "compass", "--nmax", "2", "--dot", str(path))
    assert code == 0
    assert path.read_text() == out


def test_compass_unwritable_path_exits_3(capsys):
    code, _, err = run(
        capsys, "compass", "--nmax", "2", "--dot", "/nonexistent-dir/x.dot"
    )
    assert code == 3
    assert err.startswith("error:")


def test_tables_prints_all_rows(capsys):
    code, out, _ = run(capsys, "tables")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 20
    assert lines[0].startswith("table1 row")
    assert "(Q234, Q12, Q23)" in lines[0]
    assert "(Q1, Q2, Q4)" in lines[0]
    assert sum(line.startswith("table1") for line in lines) == 10
    assert sum(line.startswith("table2") for line in lines) == 10
