import subprocess
import sys
from pathlib import Path

import pytest

from iprng.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *args):
    code = main([str(a) for a in args])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_period_both_methods(capsys):
    code, out, _ = run(capsys, "period", "-N", 7, "-a", 1, "-b", 1, "-x", 1, "--method", "both")
    assert code == 0
    assert "period=7" in out and "class=INERT_HITS_ZERO" in out and "k=8" in out
    assert out.rstrip().endswith("match")


def test_period_default_reports_preperiod(capsys):
    code, out, _ = run(capsys, "period", "-N", 31, "-a", 0, "-b", 5, "-x", 9)
    assert code == 0
    assert "preperiod=1 period=1" in out


@pytest.mark.parametrize("n", [9, 3, 1, 0])
def test_invalid_modulus_exit_3(capsys, n):
    code, _, err = run(capsys, "period", "-N", n, "-a", 1, "-b", 1, "-x", 1)
    assert code == 3
    assert "invalid modulus" in err


def test_usage_error_exit_1(capsys):
    with pytest.raises(SystemExit) as info:
        main(["period", "-N", "7"])
    assert info.value.code == 1
    with pytest.raises(SystemExit) as info:
        main(["bogus"])
    assert info.value.code == 1


def test_residues_reduced_with_warning(capsys):
    code, out, err = run(capsys, "period", "-N", 7, "-a", 8, "-b", -6, "-x", 15, "--method", "brute")
    assert code == 0
    assert "N=7 a=1 b=1 x0=1" in out
    assert "reduced mod 7" in err


def test_seq(capsys):
    code, out, _ = run(capsys, "seq", "-N", 7, "-a", 1, "-b", 1, "-x", 1, "-n", 7)
    assert code == 0
    assert out == "2\n5\n4\n3\n6\n0\n1\n"
    code, out, _ = run(capsys, "seq", "-N", 7, "-a", 1, "-b", 1, "-x", 1, "-n", 0)
    assert (code, out) == (0, "")


@pytest.mark.parametrize("family, golden", [("ab-zero", "census_n31_ab_zero.csv"), ("units", "census_n31_units.csv")])
def test_census_verify_matches_golden(capsys, family, golden):
    code, out, _ = run(capsys, "census", "-N", 31, "--family", family, "--verify")
    assert code == 0
    assert out == (GOLDEN / golden).read_text()


def test_census_without_verify_leaves_measured_blank(capsys):
    code, out, _ = run(capsys, "census", "-N", 31, "--family", "ab-zero")
    assert code == 0
    assert out == "period,analytic_count,measured_count,match\n1,1021,,\n2,870,,\n"


def test_census_mismatch_exit_2(capsys, monkeypatch):
    from iprng import census

    real = census.analytic_distribution

    def skewed(n, family):
        table = real(n, family)
        counts = dict(table.counts)
        counts[1] += 1
        return census.DistributionTable(table.modulus, table.family, counts, table.source)

    monkeypatch.setattr(census, "analytic_distribution", skewed)
    code, out, err = run(capsys, "census", "-N", 11, "--family", "units", "--verify")
    assert code == 2
    assert "1," in out and ",false" in out


def test_census_size_guard_exit_4(capsys):
    code, _, err = run(capsys, "census", "-N", 521, "--family", "ab-zero", "--verify")
    assert code == 4
    assert "--force-large" in err


def test_census_csv_identical_across_workers(tmp_path, capsys):
    paths = []
    for workers in (1, 4):
        path = tmp_path / f"w{workers}.csv"
        assert main(["census", "-N", "13", "--family", "all", "--verify", "--workers", str(workers), "--output", str(path)]) == 0
        paths.append(path)
    assert paths[0].read_bytes() == paths[1].read_bytes()
    assert capsys.readouterr().out == ""


def test_census_scatter(tmp_path):
    path = tmp_path / "scatter.csv"
    assert main(["census", "-N", "31", "--family", "ab-zero", "--scatter", "--output", str(path)]) == 0
    lines = path.read_text().splitlines()
    assert lines[0] == "index,a,b,x0,period"
    assert len(lines) == 1 + 1891


def test_periods(capsys):
    code, out, _ = run(capsys, "periods", "-N", 31)
    assert code == 0
    rows = [tuple(map(int, line.split(","))) for line in out.splitlines()[1:]]
    assert [p for p, _ in rows] == [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 14, 15, 16, 29, 30, 31]
    assert dict(rows)[31] == 7440


def test_design_roundtrip(capsys):
    code, out, _ = run(capsys, "design", "-N", 31, "--period", 31, "--count", 5)
    assert code == 0
    rows = [line.split(",") for line in out.splitlines()[1:]]
    assert len({tuple(r) for r in rows}) == 5
    for a, b, x0, period in rows:
        assert period == "31"
        code, out, _ = run(capsys, "period", "-N", 31, "-a", a, "-b", b, "-x", x0, "--method", "both")
        assert code == 0 and "period=31" in out


def test_design_unachievable_exit_1(capsys):
    code, _, err = run(capsys, "design", "-N", 31, "--period", 11)
    assert code == 1
    assert "1,2,3,4,5,6,7,8,9,10,14,15,16,29,30,31" in err


def test_design_self_check_failure_exit_5(capsys, monkeypatch):
    import importlib

    from iprng.generator import PeriodResult

    design_mod = importlib.import_module("iprng.design")

    monkeypatch.setattr(design_mod, "measure_period", lambda params: PeriodResult(0, 999, False))
    code, _, err = run(capsys, "design", "-N", 7, "--period", 7)
    assert code == 5


def test_module_entry_point():
    cp = subprocess.run(
        [sys.executable, "-m", "iprng", "seq", "-N", "7", "-a", "1", "-b", "1", "-x", "1", "-n", "3"],
        capture_output=True,
        text=True,
    )
    assert cp.returncode == 0, cp.stderr
    assert cp.stdout == "2\n5\n4\n"


def test_census_all_families_match_at_61(capsys):
    code, out, _ = run(capsys, "census", "-N", 61, "--family", "all", "--verify")
    assert code == 0
    rows = out.splitlines()[1:]
    assert rows and all(r.endswith(",true") for r in rows)
